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

#include "gvf/contradiction.h"

#include <algorithm>

#include "gvf/claim_extraction.h"
#include "gvf/error.h"

namespace gvf {

namespace {

template <typename Fact>
bool SameOrReversedPair(const Fact &a, const Fact &b) {
  return (a.subject_a == b.subject_a && a.subject_b == b.subject_b) ||
         (a.subject_a == b.subject_b && a.subject_b == b.subject_a);
}

// Subject as seen by pairing; nullopt for record-level Counting/OCR values.
std::optional<std::string> PairingSubject(const FactValue &value) {
  return std::visit(
      [](const auto &f) -> std::optional<std::string> {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, CountingFact> || std::is_same_v<T, OcrFact>) {
          return f.subject;
        } else if constexpr (std::is_same_v<T, SizeFact> || std::is_same_v<T, PositionFact>) {
          return std::nullopt;
        } else {
          return f.subject;
        }
      },
      value);
}

bool Eligible(const Claim &claim, const FactualAnchor &anchor) {
  if (claim.vh_type() != anchor.vh_type()) return false;
  const FactValue &c = claim.value;
  const FactValue &a = anchor.value();
  switch (anchor.vh_type()) {
    case VhType::kSize:
      return SameOrReversedPair(std::get<SizeFact>(c), std::get<SizeFact>(a));
    case VhType::kPosition:
      return SameOrReversedPair(std::get<PositionFact>(c), std::get<PositionFact>(a));
    case VhType::kCounting:
    case VhType::kOcr: {
      auto anchor_subject = PairingSubject(a);
      return !anchor_subject || PairingSubject(c) == anchor_subject;
    }
    default:
      return PairingSubject(c) == PairingSubject(a);
  }
}

int Differ(bool unequal) { return unequal ? 1 : 0; }

std::string Canonical(const Lexicons &lexicons, VhType type, const std::string &token) {
  return lexicons.CanonicalAttribute(type, token);
}

template <typename Fact, typename Relation>
int RelationIndicator(const Fact &claim, const Fact &anchor) {
  Relation relation = claim.relation;
  if (claim.subject_a != anchor.subject_a) {
    std::optional<Relation> inverse = Inverse(claim.relation);
    // INSIDE/ON have no inverse, so a reversed pair can never agree.
    if (!inverse) return 1;
    relation = *inverse;
  }
  return Differ(relation != anchor.relation);
}

}  // namespace

bool ClaimMatchesAnchor(const Claim &claim, const FactualAnchor &anchor, const AnchorSet &anchors) {
  if (!Eligible(claim, anchor)) return false;
  VhType type = anchor.vh_type();
  if ((type == VhType::kCounting || type == VhType::kOcr) && !PairingSubject(anchor.value())) {
    auto subject = PairingSubject(claim.value);
    if (!subject) return true;
    return std::none_of(anchors.begin(), anchors.end(), [&](const FactualAnchor &other) {
      return other.vh_type() == type && PairingSubject(other.value()) == subject;
    });
  }
  return true;
}

int Contradicts(const Claim &claim, const FactualAnchor &anchor, const Lexicons &lexicons) {
  if (!Eligible(claim, anchor)) {
    throw Error(ErrorCode::kKeyMismatch, "claim " + DescribeFact(claim.value) +
                                             " does not share a key with anchor " +
                                             anchor.anchor_id());
  }
  const FactValue &c = claim.value;
  const FactValue &a = anchor.value();
  switch (anchor.vh_type()) {
    case VhType::kExistence:
      return Differ(std::get<ExistenceFact>(c).present != std::get<ExistenceFact>(a).present);
    case VhType::kShape:
      return Differ(Canonical(lexicons, VhType::kShape, std::get<ShapeFact>(c).shape) !=
                    Canonical(lexicons, VhType::kShape, std::get<ShapeFact>(a).shape));
    case VhType::kColor:
      return Differ(Canonical(lexicons, VhType::kColor, std::get<ColorFact>(c).color) !=
                    Canonical(lexicons, VhType::kColor, std::get<ColorFact>(a).color));
    case VhType::kOrientation:
      return Differ(
          Canonical(lexicons, VhType::kOrientation, std::get<OrientationFact>(c).orientation) !=
          Canonical(lexicons, VhType::kOrientation, std::get<OrientationFact>(a).orientation));
    case VhType::kOcr:
      return Differ(NormalizeOcr(std::get<OcrFact>(c).text) !=
                    NormalizeOcr(std::get<OcrFact>(a).text));
    case VhType::kSize:
      return RelationIndicator<SizeFact, SizeRelation>(std::get<SizeFact>(c),
                                                       std::get<SizeFact>(a));
    case VhType::kPosition:
      return RelationIndicator<PositionFact, PositionRelation>(std::get<PositionFact>(c),
                                                               std::get<PositionFact>(a));
    case VhType::kCounting:
      return Differ(std::get<CountingFact>(c).count != std::get<CountingFact>(a).count);
  }
  return 0;
}

std::vector<PairingResult> PairClaims(const AnchorSet &anchors, const std::vector<Claim> &claims,
                                      const Lexicons &lexicons) {
  std::vector<const Claim *> ordered;
  ordered.reserve(claims.size());
  for (const Claim &c : claims) ordered.push_back(&c);
  std::stable_sort(ordered.begin(), ordered.end(), [](const Claim *x, const Claim *y) {
    if (x->source_span.begin != y->source_span.begin) return x->source_span.begin < y->source_span.begin;
    return x->source_span.end < y->source_span.end;
  });

  std::vector<PairingResult> results;
  results.reserve(anchors.size());
  for (const FactualAnchor &anchor : anchors) {
    PairingResult r{anchor, std::nullopt, 0};
    for (const Claim *c : ordered) {
      if (!ClaimMatchesAnchor(*c, anchor, anchors)) continue;
      r.claim = *c;
      r.indicator = Contradicts(*c, anchor, lexicons);
      break;
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace gvf
