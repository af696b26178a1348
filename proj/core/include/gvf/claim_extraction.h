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

// Deterministic rule-based extraction of typed factual claims from free-form
// answer text. Rules, per sentence and clause:
//
//   Counting     cardinal (digits or number word) that opens a clause, follows
//                "there is/are" or "only/exactly/just", or sits in a sentence
//                that mentions a known noun; the noun that follows is the subject
//   Existence    "there is/are <det> <noun>", "is/are there <noun>",
//                "no <noun>", "I (don't) see <noun>", "<noun> is visible";
//                a leading bare "yes"/"no" when the caller supplies the
//                question subject
//   Attributes   "<attr> <noun>", "<noun> is <attr> [and <attr>]",
//                "is the <noun> <attr>"
//   Relations    "<noun> <spatial or comparative phrase> <noun>"
//   OCR          text inside double, curly or single quotes
//
// A negation cue anywhere in a clause flips Existence claims and suppresses
// every other claim in that clause. Sentences end at . ? ! followed by
// whitespace; clauses end at , ; : ( ) and at "and"/"but" that start a new
// clause ("... and the ball is red").

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gvf/fact_model.h"
#include "gvf/lexicons.h"

namespace gvf {

struct AnswerText {
  std::string text;
  std::string record_id;
};

struct ExtractionContext {
  // Object the question asks about. With `polar_existence`, a leading bare
  // "yes"/"no" yields an Existence claim about it.
  std::optional<std::string> question_subject;
  bool polar_existence = false;
};

// Claims in left-to-right span order (ties: shorter span, then type order).
// Throws Error(kInvalidArgument) if the text is blank.
std::vector<Claim> ExtractClaims(const AnswerText &answer, const Lexicons &lexicons,
                                 const ExtractionContext &context = {});

// Lowercase, drop ASCII punctuation, collapse whitespace, trim.
std::string NormalizeOcr(std::string_view raw);

// Leading polarity of an answer ("Yes, ..." -> true, "No." -> false).
std::optional<bool> LeadingPolarity(std::string_view text);

}  // namespace gvf
