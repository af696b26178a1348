// Copyright 2026 The GVF Toolkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "gvf/fact_model.h"

namespace gvf {

enum class LexiconCategory : std::uint8_t {
  kNoun,
  kColor,
  kShape,
  kOrientation,
  kSpatial,
  kSize,
  kNumber,
  kBlocker,
};

// One surface phrase recognised by the extractor and what it stands for.
struct PhraseEntry {
  LexiconCategory category = LexiconCategory::kNoun;
  std::string canonical;  // nouns and attribute lexicons
  std::variant<std::monostate, PositionRelation, SizeRelation, std::uint32_t> payload;
};

// Word lists, synonym maps and relation phrases used by claim extraction and
// contradiction checks. Immutable after loading; safe to share across threads.
class Lexicons {
 public:
  // Throws Error(kConfig) on syntax errors or broken invariants.
  static Lexicons FromToml(std::string_view toml_text, std::string_view source = "lexicons");
  static Lexicons LoadFile(const std::filesystem::path &path);
  // The fixture lexicon compiled into the library.
  static const Lexicons &Default();

  const std::vector<std::string> &nouns() const { return nouns_; }
  const std::vector<std::string> &colors() const { return colors_; }
  const std::vector<std::string> &shapes() const { return shapes_; }
  const std::vector<std::string> &orientations() const { return orientations_; }
  const std::vector<std::string> &negation_cues() const { return negation_cues_; }
  const std::map<std::string, std::string> &color_synonyms() const { return color_synonyms_; }
  const std::map<std::string, std::string> &shape_synonyms() const { return shape_synonyms_; }
  const std::map<std::string, std::string> &orientation_synonyms() const {
    return orientation_synonyms_;
  }
  const std::map<std::string, std::string> &orientation_opposites() const {
    return orientation_opposites_;
  }
  // Phrase -> relation, in file order.
  const std::vector<std::pair<std::string, PositionRelation>> &spatial_phrases() const {
    return spatial_phrases_;
  }
  const std::vector<std::pair<std::string, SizeRelation>> &size_phrases() const {
    return size_phrases_;
  }
  const std::map<std::string, std::uint32_t> &number_words() const { return number_words_; }

  // Map a surface form (canonical, synonym, spaced or hyphenated variant, and
  // for nouns a plural) to the canonical token of the lexicon.
  std::optional<std::string> CanonicalNoun(std::string_view surface) const;
  std::optional<std::string> CanonicalColor(std::string_view surface) const;
  std::optional<std::string> CanonicalShape(std::string_view surface) const;
  std::optional<std::string> CanonicalOrientation(std::string_view surface) const;
  // Canonicalize an attribute token for the given type (Color, Shape or
  // Orientation); returns the input unchanged if it is not in the lexicon.
  std::string CanonicalAttribute(VhType type, std::string_view token) const;
  const std::vector<std::string> &AttributeTokens(VhType type) const;

  std::optional<std::string> OppositeOrientation(std::string_view canonical) const;
  bool IsNegationCue(std::string_view word) const;

  // "two" for 2 when a number word exists, otherwise the digits.
  std::string NumberToWord(std::uint32_t n) const;
  std::string Plural(std::string_view canonical_noun) const;

  // Surface phrase lookup keyed by space-joined lowercase words.
  const PhraseEntry *FindPhrase(std::string_view phrase) const;
  std::size_t max_phrase_words() const { return max_phrase_words_; }

  // Hash of the source text, for provenance headers.
  std::uint64_t fingerprint() const { return fingerprint_; }

 private:
  Lexicons() = default;
  void AddPhrase(const std::string &surface, PhraseEntry entry);
  void BuildPhraseTable();
  void Validate() const;

  std::vector<std::string> nouns_;
  std::vector<std::string> colors_;
  std::vector<std::string> shapes_;
  std::vector<std::string> orientations_;
  std::vector<std::string> negation_cues_;
  std::vector<std::string> blockers_;
  std::map<std::string, std::string> noun_plurals_;  // plural surface -> canonical
  std::map<std::string, std::string> noun_synonyms_;
  std::map<std::string, std::string> color_synonyms_;
  std::map<std::string, std::string> shape_synonyms_;
  std::map<std::string, std::string> orientation_synonyms_;
  std::map<std::string, std::string> orientation_opposites_;
  std::vector<std::pair<std::string, PositionRelation>> spatial_phrases_;
  std::vector<std::pair<std::string, SizeRelation>> size_phrases_;
  std::map<std::string, std::uint32_t> number_words_;

  std::unordered_map<std::string, PhraseEntry> phrases_;
  std::size_t max_phrase_words_ = 1;
  std::uint64_t fingerprint_ = 0;
};

// Replace underscores with spaces: "upside_down" -> "upside down".
std::string DisplayToken(std::string_view canonical);

}  // namespace gvf
