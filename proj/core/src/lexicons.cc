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

#include "gvf/lexicons.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "embedded_data.h"
#include "gvf/error.h"
#include "gvf/random.h"
#include "toml_util.h"

namespace gvf {

namespace {

std::string NormalizePhrase(std::string_view raw) {
  std::string out;
  bool space = false;
  for (char c : raw) {
    auto u = static_cast<unsigned char>(c);
    if (std::isspace(u)) {
      space = !out.empty();
      continue;
    }
    if (space) out += ' ';
    space = false;
    out += static_cast<char>(std::tolower(u));
  }
  return out;
}

std::size_t WordCount(std::string_view phrase) {
  return static_cast<std::size_t>(std::count(phrase.begin(), phrase.end(), ' ')) + 1;
}

std::string PluralOfWord(const std::string &word) {
  auto ends_with = [&](std::string_view suffix) {
    return word.size() >= suffix.size() &&
           word.compare(word.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with("s") || ends_with("x") || ends_with("z") || ends_with("ch") ||
      ends_with("sh")) {
    return word + "es";
  }
  if (word.size() >= 2 && word.back() == 'y' &&
      std::string_view("aeiou").find(word[word.size() - 2]) == std::string_view::npos) {
    return word.substr(0, word.size() - 1) + "ies";
  }
  return word + "s";
}

std::vector<std::string> ReadTokens(const toml::table &root, std::string_view section,
                                    std::string_view source) {
  const toml::table *t = internal::RequireTable(root, section, source);
  return internal::RequireStringArray(*t, "tokens", std::string(section), source);
}

std::map<std::string, std::string> ReadSynonyms(const toml::table &root,
                                                std::string_view section,
                                                std::string_view sub,
                                                std::string_view source) {
  std::map<std::string, std::string> out;
  const toml::table *t = root[section][sub].as_table();
  if (t == nullptr) return out;
  for (const auto &[k, v] : *t) {
    auto s = v.value<std::string>();
    if (!s) {
      throw Error(ErrorCode::kConfig, std::string(source) + ": [" + std::string(section) +
                                          "." + std::string(sub) + "] value for '" +
                                          std::string(k.str()) + "' must be a string");
    }
    out[NormalizePhrase(k.str())] = *s;
  }
  return out;
}

std::optional<std::string> Lookup(const std::map<std::string, std::string> &synonyms,
                                  const std::vector<std::string> &canonical,
                                  std::string_view surface) {
  std::string key = NormalizePhrase(surface);
  std::replace(key.begin(), key.end(), '_', ' ');
  std::replace(key.begin(), key.end(), '-', ' ');
  for (const std::string &c : canonical) {
    if (DisplayToken(c) == key) return c;
  }
  auto it = synonyms.find(key);
  if (it == synonyms.end()) it = synonyms.find(NormalizePhrase(surface));
  if (it != synonyms.end()) return it->second;
  return std::nullopt;
}

[[noreturn]] void Fail(std::string_view source, const std::string &message) {
  throw Error(ErrorCode::kConfig, std::string(source) + ": " + message);
}

}  // namespace

std::string DisplayToken(std::string_view canonical) {
  std::string out(canonical);
  std::replace(out.begin(), out.end(), '_', ' ');
  return out;
}

Lexicons Lexicons::FromToml(std::string_view toml_text, std::string_view source) {
  toml::table root = internal::ParseToml(toml_text, source);
  Lexicons lex;
  lex.fingerprint_ = Fnv1a64(toml_text);

  lex.nouns_ = ReadTokens(root, "nouns", source);
  lex.noun_plurals_ = ReadSynonyms(root, "nouns", "plurals", source);
  lex.noun_synonyms_ = ReadSynonyms(root, "nouns", "synonyms", source);
  lex.colors_ = ReadTokens(root, "colors", source);
  lex.color_synonyms_ = ReadSynonyms(root, "colors", "synonyms", source);
  lex.shapes_ = ReadTokens(root, "shapes", source);
  lex.shape_synonyms_ = ReadSynonyms(root, "shapes", "synonyms", source);
  lex.orientations_ = ReadTokens(root, "orientations", source);
  lex.orientation_synonyms_ = ReadSynonyms(root, "orientations", "synonyms", source);
  lex.orientation_opposites_ = ReadSynonyms(root, "orientations", "opposites", source);
  lex.negation_cues_ = ReadTokens(root, "negation_cues", source);

  const toml::table *spatial = internal::RequireTable(root, "spatial_relations", source);
  for (const auto &[k, v] : *spatial) {
    auto rel = PositionRelationFromToken(v.value_or(std::string()));
    if (!rel) Fail(source, "unknown position relation for '" + std::string(k.str()) + "'");
    lex.spatial_phrases_.emplace_back(NormalizePhrase(k.str()), *rel);
  }
  const toml::table *size = internal::RequireTable(root, "size_comparatives", source);
  for (const auto &[k, v] : *size) {
    auto rel = SizeRelationFromToken(v.value_or(std::string()));
    if (!rel) Fail(source, "unknown size relation for '" + std::string(k.str()) + "'");
    lex.size_phrases_.emplace_back(NormalizePhrase(k.str()), *rel);
  }
  const toml::table *numbers = internal::RequireTable(root, "number_words", source);
  for (const auto &[k, v] : *numbers) {
    auto n = v.value<std::int64_t>();
    if (!n || *n < 0 || *n > 20) {
      Fail(source, "number word '" + std::string(k.str()) + "' must map to 0..20");
    }
    lex.number_words_[NormalizePhrase(k.str())] = static_cast<std::uint32_t>(*n);
  }
  if (const toml::table *b = root["phrase_blockers"].as_table()) {
    for (std::string &p : internal::RequireStringArray(*b, "phrases", "phrase_blockers", source)) {
      lex.blockers_.push_back(NormalizePhrase(p));
    }
  }

  try {
    lex.Validate();
    lex.BuildPhraseTable();
  } catch (const Error &e) {
    Fail(source, e.what());
  }
  return lex;
}

Lexicons Lexicons::LoadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open lexicon file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return FromToml(buf.str(), path.string());
}

const Lexicons &Lexicons::Default() {
  static const Lexicons lexicons = FromToml(internal::kDefaultLexiconsToml, "default lexicons");
  return lexicons;
}

void Lexicons::Validate() const {
  auto check_list = [](const std::vector<std::string> &tokens, std::string_view name) {
    if (tokens.empty()) Fail(name, "lexicon is empty");
    std::set<std::string> seen;
    for (const std::string &t : tokens) {
      if (!IsCanonicalToken(t)) Fail(name, "'" + t + "' is not a canonical token");
      if (!seen.insert(t).second) Fail(name, "duplicate token '" + t + "'");
    }
  };
  check_list(nouns_, "nouns");
  check_list(colors_, "colors");
  check_list(shapes_, "shapes");
  check_list(orientations_, "orientations");

  // Synonyms must land on canonical tokens, so one application is idempotent.
  auto check_synonyms = [](const std::map<std::string, std::string> &syn,
                           const std::vector<std::string> &tokens, std::string_view name) {
    for (const auto &[surface, target] : syn) {
      if (std::find(tokens.begin(), tokens.end(), target) == tokens.end()) {
        Fail(name, "synonym '" + surface + "' targets unknown token '" + target + "'");
      }
      for (const std::string &t : tokens) {
        if (DisplayToken(t) == surface && t != target) {
          Fail(name, "synonym '" + surface + "' shadows canonical token '" + t + "'");
        }
      }
    }
  };
  check_synonyms(noun_synonyms_, nouns_, "nouns.synonyms");
  check_synonyms(noun_plurals_, nouns_, "nouns.plurals");
  check_synonyms(color_synonyms_, colors_, "colors.synonyms");
  check_synonyms(shape_synonyms_, shapes_, "shapes.synonyms");
  check_synonyms(orientation_synonyms_, orientations_, "orientations.synonyms");

  for (const auto &[a, b] : orientation_opposites_) {
    auto is_orientation = [&](const std::string &t) {
      return std::find(orientations_.begin(), orientations_.end(), t) != orientations_.end();
    };
    if (!is_orientation(a) || !is_orientation(b)) {
      Fail("orientations.opposites", "'" + a + "' / '" + b + "' must be canonical orientations");
    }
    auto back = orientation_opposites_.find(b);
    if (a == b || back == orientation_opposites_.end() || back->second != a) {
      Fail("orientations.opposites", "map is not an involution at '" + a + "'");
    }
  }

  // Relation words inside a noun would make relational DSL tokens ambiguous.
  static constexpr std::string_view kRelationWords[] = {
      "larger", "smaller", "equal", "left", "right", "above", "below", "inside", "on"};
  for (const std::string &noun : nouns_) {
    std::string_view rest = noun;
    while (!rest.empty()) {
      auto cut = rest.find('_');
      std::string_view part = rest.substr(0, cut);
      for (std::string_view w : kRelationWords) {
        if (part == w) Fail("nouns", "'" + noun + "' contains relation word '" + std::string(w) + "'");
      }
      rest = cut == std::string_view::npos ? std::string_view() : rest.substr(cut + 1);
    }
  }
  if (negation_cues_.empty()) Fail("negation_cues", "lexicon is empty");
  if (spatial_phrases_.empty()) Fail("spatial_relations", "lexicon is empty");
  if (size_phrases_.empty()) Fail("size_comparatives", "lexicon is empty");
}

void Lexicons::AddPhrase(const std::string &surface, PhraseEntry entry) {
  std::string key = NormalizePhrase(surface);
  if (key.empty()) return;
  auto [it, inserted] = phrases_.emplace(key, entry);
  if (!inserted) {
    const PhraseEntry &old = it->second;
    if (old.category != entry.category || old.canonical != entry.canonical ||
        old.payload != entry.payload) {
      Fail("lexicons", "surface form '" + key + "' is ambiguous");
    }
    return;
  }
  max_phrase_words_ = std::max(max_phrase_words_, WordCount(key));
}

void Lexicons::BuildPhraseTable() {
  auto add_token = [this](const std::string &canonical, LexiconCategory cat) {
    std::string display = DisplayToken(canonical);
    AddPhrase(display, {cat, canonical, {}});
    std::string hyphen = canonical;
    std::replace(hyphen.begin(), hyphen.end(), '_', '-');
    AddPhrase(hyphen, {cat, canonical, {}});
  };
  auto add_noun_forms = [&](const std::string &surface, const std::string &canonical) {
    AddPhrase(surface, {LexiconCategory::kNoun, canonical, {}});
    std::string display = NormalizePhrase(surface);
    auto last = display.rfind(' ');
    std::string head = last == std::string::npos ? std::string() : display.substr(0, last + 1);
    std::string word = last == std::string::npos ? display : display.substr(last + 1);
    AddPhrase(head + PluralOfWord(word), {LexiconCategory::kNoun, canonical, {}});
  };

  for (const std::string &n : nouns_) {
    add_token(n, LexiconCategory::kNoun);
    add_noun_forms(DisplayToken(n), n);
  }
  for (const auto &[plural, n] : noun_plurals_) AddPhrase(plural, {LexiconCategory::kNoun, n, {}});
  for (const auto &[syn, n] : noun_synonyms_) add_noun_forms(syn, n);

  const std::pair<const std::vector<std::string> *, LexiconCategory> attrs[] = {
      {&colors_, LexiconCategory::kColor},
      {&shapes_, LexiconCategory::kShape},
      {&orientations_, LexiconCategory::kOrientation}};
  for (const auto &[list, cat] : attrs) {
    for (const std::string &t : *list) add_token(t, cat);
  }
  for (const auto &[s, t] : color_synonyms_) AddPhrase(s, {LexiconCategory::kColor, t, {}});
  for (const auto &[s, t] : shape_synonyms_) AddPhrase(s, {LexiconCategory::kShape, t, {}});
  for (const auto &[s, t] : orientation_synonyms_) {
    AddPhrase(s, {LexiconCategory::kOrientation, t, {}});
  }

  for (const auto &[p, rel] : spatial_phrases_) AddPhrase(p, {LexiconCategory::kSpatial, {}, rel});
  for (const auto &[p, rel] : size_phrases_) AddPhrase(p, {LexiconCategory::kSize, {}, rel});
  for (const auto &[w, n] : number_words_) AddPhrase(w, {LexiconCategory::kNumber, {}, n});
  for (const std::string &b : blockers_) AddPhrase(b, {LexiconCategory::kBlocker, {}, {}});
}

std::optional<std::string> Lexicons::CanonicalNoun(std::string_view surface) const {
  const PhraseEntry *e = FindPhrase(NormalizePhrase(surface));
  if (e == nullptr) {
    std::string spaced(surface);
    std::replace(spaced.begin(), spaced.end(), '_', ' ');
    e = FindPhrase(NormalizePhrase(spaced));
  }
  if (e != nullptr && e->category == LexiconCategory::kNoun) return e->canonical;
  return std::nullopt;
}

std::optional<std::string> Lexicons::CanonicalColor(std::string_view surface) const {
  return Lookup(color_synonyms_, colors_, surface);
}

std::optional<std::string> Lexicons::CanonicalShape(std::string_view surface) const {
  return Lookup(shape_synonyms_, shapes_, surface);
}

std::optional<std::string> Lexicons::CanonicalOrientation(std::string_view surface) const {
  return Lookup(orientation_synonyms_, orientations_, surface);
}

std::string Lexicons::CanonicalAttribute(VhType type, std::string_view token) const {
  std::optional<std::string> c;
  switch (type) {
    case VhType::kColor: c = CanonicalColor(token); break;
    case VhType::kShape: c = CanonicalShape(token); break;
    case VhType::kOrientation: c = CanonicalOrientation(token); break;
    default: break;
  }
  return c ? *c : std::string(token);
}

const std::vector<std::string> &Lexicons::AttributeTokens(VhType type) const {
  switch (type) {
    case VhType::kColor: return colors_;
    case VhType::kShape: return shapes_;
    case VhType::kOrientation: return orientations_;
    default: break;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "no attribute lexicon for type " + std::string(VhTypeToken(type)));
}

std::optional<std::string> Lexicons::OppositeOrientation(std::string_view canonical) const {
  auto it = orientation_opposites_.find(std::string(canonical));
  if (it == orientation_opposites_.end()) return std::nullopt;
  return it->second;
}

bool Lexicons::IsNegationCue(std::string_view word) const {
  for (const std::string &cue : negation_cues_) {
    if (word == cue) return true;
    // Contracted cues ("n't") match as a suffix: don't, isn't, aren't.
    if (cue.find('\'') != std::string::npos && word.size() > cue.size() &&
        word.compare(word.size() - cue.size(), cue.size(), cue) == 0) {
      return true;
    }
  }
  return false;
}

std::string Lexicons::NumberToWord(std::uint32_t n) const {
  for (const auto &[word, value] : number_words_) {
    if (value == n) return word;
  }
  return std::to_string(n);
}

std::string Lexicons::Plural(std::string_view canonical_noun) const {
  for (const auto &[plural, noun] : noun_plurals_) {
    if (noun == canonical_noun) return plural;
  }
  std::string display = DisplayToken(canonical_noun);
  auto last = display.rfind(' ');
  if (last == std::string::npos) return PluralOfWord(display);
  return display.substr(0, last + 1) + PluralOfWord(display.substr(last + 1));
}

const PhraseEntry *Lexicons::FindPhrase(std::string_view phrase) const {
  auto it = phrases_.find(std::string(phrase));
  return it == phrases_.end() ? nullptr : &it->second;
}

}  // namespace gvf
