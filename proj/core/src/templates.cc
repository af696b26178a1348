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

#include "gvf/templates.h"

#include <set>

#include "embedded_data.h"
#include "gvf/claim_extraction.h"
#include "gvf/error.h"
#include "gvf/jsonl.h"
#include "gvf/random.h"
#include "toml_util.h"

namespace gvf {

namespace {

const std::set<std::string, std::less<>> &KnownSlots() {
  static const std::set<std::string, std::less<>> slots = {
      "subject",   "subject_plural", "article",   "count",     "count_word",
      "true_count", "true_count_word", "value",   "true_value", "subject_a",
      "subject_b", "relation_phrase", "true_relation_phrase"};
  return slots;
}

// Fails on unbalanced braces and unknown slot names.
void CheckPattern(std::string_view pattern, const std::string &where) {
  std::size_t pos = 0;
  while ((pos = pattern.find_first_of("{}", pos)) != std::string_view::npos) {
    if (pattern[pos] == '}') {
      throw Error(ErrorCode::kConfig, where + ": stray '}'");
    }
    std::size_t close = pattern.find('}', pos);
    if (close == std::string_view::npos) {
      throw Error(ErrorCode::kConfig, where + ": unterminated '{'");
    }
    std::string_view name = pattern.substr(pos + 1, close - pos - 1);
    if (!KnownSlots().contains(name)) {
      throw Error(ErrorCode::kConfig, where + ": unknown slot {" + std::string(name) + "}");
    }
    pos = close + 1;
  }
}

std::string ReadString(const toml::table &table, std::string_view key, const std::string &where,
                       bool required, std::string_view source) {
  const toml::node *node = table.get(key);
  if (node == nullptr) {
    if (required) {
      throw Error(ErrorCode::kConfig, std::string(source) + ": [" + where + "] needs '" +
                                          std::string(key) + "'");
    }
    return {};
  }
  std::optional<std::string> s = node->value<std::string>();
  if (!s) {
    throw Error(ErrorCode::kConfig, std::string(source) + ": [" + where + "]." +
                                        std::string(key) + " must be a string");
  }
  CheckPattern(*s, std::string(source) + ": [" + where + "]." + std::string(key));
  return *s;
}

}  // namespace

Templates Templates::FromToml(std::string_view toml_text, std::string_view source) {
  toml::table root = internal::ParseToml(toml_text, source);
  Templates t;
  t.fingerprint_ = Fnv1a64(toml_text);

  const toml::table *cf = internal::RequireTable(root, "counterfactual", source);
  for (VhType type : kAllVhTypes) {
    std::string key(VhTypeConfigKey(type));
    std::string where = "counterfactual." + key;
    const toml::table *section = (*cf)[key].as_table();
    if (section == nullptr) {
      throw Error(ErrorCode::kConfig, std::string(source) + ": missing table [" + where + "]");
    }
    CounterfactualWording &w = t.wording_[Index(type)];
    w.question = ReadString(*section, "question", where, true, source);
    w.answer = ReadString(*section, "answer", where, true, source);
    w.question_one = ReadString(*section, "question_one", where, false, source);
    w.answer_one = ReadString(*section, "answer_one", where, false, source);
    w.answer_zero = ReadString(*section, "answer_zero", where, false, source);
    if (w.question_one.empty()) w.question_one = w.question;
    if (w.answer_one.empty()) w.answer_one = w.answer;
    if (w.answer_zero.empty()) w.answer_zero = w.answer;
  }

  const toml::table *phrases = internal::RequireTable(root, "relation_phrases", source);
  for (SizeRelation r : kAllSizeRelations) {
    std::string token(RelationToken(r));
    t.relation_phrases_[token] = ReadString(*phrases, token, "relation_phrases", true, source);
  }
  for (PositionRelation r : kAllPositionRelations) {
    std::string token(RelationToken(r));
    t.relation_phrases_[token] = ReadString(*phrases, token, "relation_phrases", true, source);
  }

  const toml::table *distractors = internal::RequireTable(root, "distractors", source);
  t.distractors_ = internal::RequireStringArray(*distractors, "nouns", "distractors", source);
  const toml::table *ocr = internal::RequireTable(root, "ocr", source);
  t.ocr_substitutes_ = internal::RequireStringArray(*ocr, "substitutes", "ocr", source);
  for (const std::string &s : t.ocr_substitutes_) {
    if (s.empty() || NormalizeOcr(s) != s || s.find(' ') != std::string::npos) {
      throw Error(ErrorCode::kConfig, std::string(source) +
                                          ": OCR substitutes must be single lowercase words, got '" +
                                          s + "'");
    }
  }

  if (const toml::table *rewrite = root["rewrite"].as_table()) {
    if (const toml::node *flag = rewrite->get("counting")) {
      std::optional<bool> b = flag->value<bool>();
      if (!b) throw Error(ErrorCode::kConfig, std::string(source) + ": rewrite.counting must be a boolean");
      t.rewrite_counting_ = *b;
    }
    t.counting_answer_ = ReadString(*rewrite, "counting_answer", "rewrite", false, source);
    t.counting_answer_one_ = ReadString(*rewrite, "counting_answer_one", "rewrite", false, source);
    t.counting_answer_zero_ =
        ReadString(*rewrite, "counting_answer_zero", "rewrite", false, source);
    t.position_suffix_ = ReadString(*rewrite, "position_suffix", "rewrite", false, source);
  } else {
    t.rewrite_counting_ = false;
  }
  if (t.rewrite_counting_ && t.counting_answer_.empty()) {
    throw Error(ErrorCode::kConfig,
                std::string(source) + ": rewrite.counting needs rewrite.counting_answer");
  }
  if (t.counting_answer_one_.empty()) t.counting_answer_one_ = t.counting_answer_;
  if (t.counting_answer_zero_.empty()) t.counting_answer_zero_ = t.counting_answer_;
  return t;
}

Templates Templates::LoadFile(const std::filesystem::path &path) {
  return FromToml(ReadFile(path), path.string());
}

const Templates &Templates::Default() {
  static const Templates templates =
      FromToml(internal::kDefaultTemplatesToml, "default templates");
  return templates;
}

const std::string &Templates::RelationPhrase(std::string_view relation_token) const {
  auto it = relation_phrases_.find(relation_token);
  if (it == relation_phrases_.end()) {
    throw Error(ErrorCode::kConfig, "no phrase for relation " + std::string(relation_token));
  }
  return it->second;
}

void Templates::CheckAgainst(const Lexicons &lexicons) const {
  for (const std::string &d : distractors_) {
    if (lexicons.CanonicalNoun(d) != d) {
      throw Error(ErrorCode::kConfig, "distractor '" + d + "' is not a canonical lexicon noun");
    }
  }
}

std::string Templates::Render(std::string_view pattern, const Slots &slots) {
  std::string out;
  std::size_t pos = 0;
  while (pos < pattern.size()) {
    std::size_t open = pattern.find('{', pos);
    if (open == std::string_view::npos) {
      out.append(pattern.substr(pos));
      break;
    }
    out.append(pattern.substr(pos, open - pos));
    std::size_t close = pattern.find('}', open);
    if (close == std::string_view::npos) {
      throw Error(ErrorCode::kConfig, "unterminated slot in '" + std::string(pattern) + "'");
    }
    auto it = slots.find(pattern.substr(open + 1, close - open - 1));
    if (it == slots.end()) {
      throw Error(ErrorCode::kConfig, "slot {" +
                                          std::string(pattern.substr(open + 1, close - open - 1)) +
                                          "} has no value here");
    }
    out += it->second;
    pos = close + 1;
  }
  return out;
}

}  // namespace gvf
