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

// Bracketed fact-anchor notation used in training data and instructions.
//
//   token   := "[" head ":" ws* body "]"
//   head    := "FACT" | "CHECK_" typetok | "FACT_" typetok
//   body    := typetok ["_" SUBJECT] ws* "=" ws* (VALUE | "?")   (head FACT)
//            | VALUE | "?"                                      (head CHECK_/FACT_)
//   typetok := EXISTENCE | SHAPE | COLOR | ORIENTATION | OCR | SIZE | POSITION | COUNT
//
// Relational facts carry the relation inside the subject segment:
// [FACT: POSITION_DOG_LEFT_OF_CAT=TRUE]. See docs/anchor_dsl.md.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gvf/fact_model.h"
#include "gvf/lexicons.h"

namespace gvf {

enum class TokenKind { kFact, kCheck, kQuery };

struct DslToken {
  TokenKind kind = TokenKind::kFact;
  VhType vh_type = VhType::kExistence;
  std::optional<std::string> subject;  // lowercase
  std::string payload;                 // as written, or "?"

  bool operator==(const DslToken &) const = default;
};

// Throws Error(kMalformedToken) with the offending character offset.
DslToken ParseToken(std::string_view text);

// Build a typed anchor from a FACT token. `context_subject` fills a missing
// subject for Existence/Color/Shape/Orientation. Attribute payloads are
// canonicalized through `lexicons`.
FactualAnchor ToAnchor(const DslToken &token,
                       const std::optional<std::string> &context_subject = std::nullopt,
                       const Lexicons &lexicons = Lexicons::Default());

// Parse + ToAnchor in one step.
FactualAnchor ParseAnchor(std::string_view text, const Lexicons &lexicons = Lexicons::Default());
AnchorSet ParseAnchorSet(const std::vector<std::string> &tokens,
                         const Lexicons &lexicons = Lexicons::Default());

std::string Serialize(const FactValue &value);
inline std::string Serialize(const FactualAnchor &anchor) { return Serialize(anchor.value()); }
std::vector<std::string> Serialize(const AnchorSet &anchors);

// "[FACT: COUNT=?]", "[FACT: COLOR_BALL=?]".
std::string SerializeQuery(VhType type, const std::optional<std::string> &subject = std::nullopt);

// "[CHECK_COLOR: RED]" for a perturbed value. Existence checks assert
// presence, so the value must have present == true.
std::string SerializeCheck(const FactValue &perturbed);

// Inverse of SerializeCheck: rebuild the asserted value from a CHECK token.
// `subject` supplies the subject the token omits (Color/Shape/Orientation, and
// optionally Counting/OCR).
FactValue CheckTokenValue(const DslToken &token, const std::optional<std::string> &subject,
                          const Lexicons &lexicons = Lexicons::Default());

struct LocatedToken {
  DslToken token;
  std::size_t offset = 0;
  std::size_t length = 0;
};

// All bracketed tokens in free text, in order. A bracketed segment that does
// not parse raises MalformedToken with its absolute offset.
std::vector<LocatedToken> FindTokens(std::string_view text);

}  // namespace gvf
