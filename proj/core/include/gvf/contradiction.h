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

// Binary inconsistency indicator between an extracted claim and an anchor,
// plus the claim/anchor pairing used by scoring and evaluation.

#pragma once

#include <optional>
#include <vector>

#include "gvf/fact_model.h"
#include "gvf/lexicons.h"

namespace gvf {

struct PairingResult {
  FactualAnchor anchor;
  std::optional<Claim> claim;
  int indicator = 0;  // 1 only when a claim is present and contradicts
};

// True if `claim` is eligible to pair with `anchor` inside `anchors`.
// Same type, and:
//   Existence/Color/Shape/Orientation: equal subject;
//   Size/Position: same unordered pair (reversed pairs are normalized);
//   Counting/OCR with a subject: equal subject;
//   Counting/OCR without a subject (record-level): claims with no subject, or
//   whose subject has no subject-keyed anchor of that type in `anchors`.
bool ClaimMatchesAnchor(const Claim &claim, const FactualAnchor &anchor, const AnchorSet &anchors);

// Throws Error(kKeyMismatch) unless the claim is eligible for the anchor
// taken on its own (record-level Counting/OCR anchors accept any subject).
int Contradicts(const Claim &claim, const FactualAnchor &anchor,
                const Lexicons &lexicons = Lexicons::Default());

// One result per anchor in set order; the earliest matching claim pairs.
std::vector<PairingResult> PairClaims(const AnchorSet &anchors, const std::vector<Claim> &claims,
                                      const Lexicons &lexicons = Lexicons::Default());

}  // namespace gvf
