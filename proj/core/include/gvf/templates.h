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

// Configurable wording used by augmentation.

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gvf/fact_model.h"
#include "gvf/lexicons.h"

namespace gvf {

using Slots = std::map<std::string, std::string, std::less<>>;

struct CounterfactualWording {
  std::string question;
  std::string question_one;  // falls back to question
  std::string answer;
  std::string answer_one;    // falls back to answer
  std::string answer_zero;   // falls back to answer
};

class Templates {
 public:
  // Throws Error(kConfig) on syntax errors, missing sections or unknown slots.
  static Templates FromToml(std::string_view toml_text, std::string_view source = "templates");
  static Templates LoadFile(const std::filesystem::path &path);
  static const Templates &Default();

  const CounterfactualWording &wording(VhType type) const { return wording_[Index(type)]; }
  const std::string &RelationPhrase(std::string_view relation_token) const;
  const std::vector<std::string> &distractors() const { return distractors_; }
  const std::vector<std::string> &ocr_substitutes() const { return ocr_substitutes_; }

  bool rewrite_counting() const { return rewrite_counting_; }
  const std::string &counting_answer() const { return counting_answer_; }
  const std::string &counting_answer_one() const { return counting_answer_one_; }
  const std::string &counting_answer_zero() const { return counting_answer_zero_; }
  const std::string &position_suffix() const { return position_suffix_; }

  std::uint64_t fingerprint() const { return fingerprint_; }

  // Distractors must be lexicon nouns. Throws Error(kConfig).
  void CheckAgainst(const Lexicons &lexicons) const;

  // Replace each {slot}; every slot used must be present in `slots`.
  static std::string Render(std::string_view pattern, const Slots &slots);

 private:
  Templates() = default;

  std::array<CounterfactualWording, kNumVhTypes> wording_;
  std::map<std::string, std::string, std::less<>> relation_phrases_;
  std::vector<std::string> distractors_;
  std::vector<std::string> ocr_substitutes_;
  bool rewrite_counting_ = true;
  std::string counting_answer_;
  std::string counting_answer_one_;
  std::string counting_answer_zero_;
  std::string position_suffix_;
  std::uint64_t fingerprint_ = 0;
};

}  // namespace gvf
