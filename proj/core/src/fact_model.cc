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

#include "gvf/fact_model.h"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

#include "gvf/error.h"

namespace gvf {

namespace {

constexpr std::array<std::string_view, kNumVhTypes> kTypeTokens = {
    "EXISTENCE", "SHAPE", "COLOR", "ORIENTATION", "OCR", "SIZE", "POSITION", "COUNT"};
constexpr std::array<std::string_view, kNumVhTypes> kDisplayNames = {
    "Existence", "Shape", "Color", "Orientation", "OCR", "Size", "Position", "Counting"};
constexpr std::array<std::string_view, kNumVhTypes> kConfigKeys = {
    "existence", "shape", "color", "orientation", "ocr", "size", "position", "counting"};

constexpr std::array<std::string_view, 3> kSizeTokens = {"LARGER", "SMALLER", "EQUAL"};
constexpr std::array<std::string_view, 6> kPositionTokens = {
    "LEFT_OF", "RIGHT_OF", "ABOVE", "BELOW", "INSIDE", "ON"};

std::string Upper(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

bool IsNormalizedOcr(std::string_view text) {
  if (text.empty() || text.front() == ' ' || text.back() == ' ') return false;
  char prev = '\0';
  for (char c : text) {
    auto u = static_cast<unsigned char>(c);
    if (u < 0x80) {
      if (std::isupper(u) || std::ispunct(u)) return false;
      if (std::isspace(u) && c != ' ') return false;
      if (c == ' ' && prev == ' ') return false;
    }
    prev = c;
  }
  return true;
}

void RequireToken(std::string_view token, std::string_view what) {
  if (!IsCanonicalToken(token)) {
    throw Error(ErrorCode::kTypeMismatch,
                "invalid " + std::string(what) + " token '" + std::string(token) + "'");
  }
}

void RequireDistinct(const std::string &a, const std::string &b) {
  if (a == b) {
    throw Error(ErrorCode::kTypeMismatch, "relation subjects must differ ('" + a + "')");
  }
}

}  // namespace

std::string_view VhTypeToken(VhType type) { return kTypeTokens[Index(type)]; }

std::optional<VhType> VhTypeFromToken(std::string_view token) {
  for (VhType t : kAllVhTypes) {
    if (kTypeTokens[Index(t)] == token) return t;
  }
  return std::nullopt;
}

std::string_view VhTypeDisplayName(VhType type) { return kDisplayNames[Index(type)]; }

std::string_view VhTypeConfigKey(VhType type) { return kConfigKeys[Index(type)]; }

std::optional<VhType> VhTypeFromConfigKey(std::string_view key) {
  for (VhType t : kAllVhTypes) {
    if (kConfigKeys[Index(t)] == key) return t;
  }
  return std::nullopt;
}

std::string_view RelationToken(SizeRelation relation) {
  return kSizeTokens[static_cast<std::size_t>(relation)];
}

std::string_view RelationToken(PositionRelation relation) {
  return kPositionTokens[static_cast<std::size_t>(relation)];
}

std::optional<SizeRelation> SizeRelationFromToken(std::string_view token) {
  for (SizeRelation r : kAllSizeRelations) {
    if (RelationToken(r) == token) return r;
  }
  return std::nullopt;
}

std::optional<PositionRelation> PositionRelationFromToken(std::string_view token) {
  for (PositionRelation r : kAllPositionRelations) {
    if (RelationToken(r) == token) return r;
  }
  return std::nullopt;
}

SizeRelation Inverse(SizeRelation relation) {
  switch (relation) {
    case SizeRelation::kLarger: return SizeRelation::kSmaller;
    case SizeRelation::kSmaller: return SizeRelation::kLarger;
    case SizeRelation::kEqual: return SizeRelation::kEqual;
  }
  return relation;
}

std::optional<PositionRelation> Inverse(PositionRelation relation) {
  switch (relation) {
    case PositionRelation::kLeftOf: return PositionRelation::kRightOf;
    case PositionRelation::kRightOf: return PositionRelation::kLeftOf;
    case PositionRelation::kAbove: return PositionRelation::kBelow;
    case PositionRelation::kBelow: return PositionRelation::kAbove;
    case PositionRelation::kInside:
    case PositionRelation::kOn: return std::nullopt;
  }
  return std::nullopt;
}

bool IsCanonicalToken(std::string_view token) {
  if (token.empty() || token.front() == '_' || token.back() == '_') return false;
  char prev = '\0';
  for (char c : token) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok || (c == '_' && prev == '_')) return false;
    prev = c;
  }
  return true;
}

void ValidateFactValue(const FactValue &value) {
  std::visit(
      [](const auto &v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ExistenceFact>) {
          RequireToken(v.subject, "subject");
        } else if constexpr (std::is_same_v<T, ShapeFact>) {
          RequireToken(v.subject, "subject");
          RequireToken(v.shape, "shape");
        } else if constexpr (std::is_same_v<T, ColorFact>) {
          RequireToken(v.subject, "subject");
          RequireToken(v.color, "color");
        } else if constexpr (std::is_same_v<T, OrientationFact>) {
          RequireToken(v.subject, "subject");
          RequireToken(v.orientation, "orientation");
        } else if constexpr (std::is_same_v<T, OcrFact>) {
          if (!IsNormalizedOcr(v.text)) {
            throw Error(ErrorCode::kTypeMismatch,
                        "OCR text must be non-empty and normalized: '" + v.text + "'");
          }
          if (v.subject) RequireToken(*v.subject, "subject");
        } else if constexpr (std::is_same_v<T, SizeFact> ||
                             std::is_same_v<T, PositionFact>) {
          RequireToken(v.subject_a, "subject");
          RequireToken(v.subject_b, "subject");
          RequireDistinct(v.subject_a, v.subject_b);
        } else if constexpr (std::is_same_v<T, CountingFact>) {
          if (v.subject) RequireToken(*v.subject, "subject");
        }
      },
      value);
}

AnchorKey KeyOf(const FactValue &value) {
  AnchorKey key{TypeOf(value), {}};
  std::visit(
      [&key](const auto &v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, OcrFact> || std::is_same_v<T, CountingFact>) {
          key.subject = v.subject ? *v.subject : std::string(kRecordSubject);
        } else if constexpr (std::is_same_v<T, SizeFact> ||
                             std::is_same_v<T, PositionFact>) {
          key.subject = v.subject_a + "|" + v.subject_b;
        } else {
          key.subject = v.subject;
        }
      },
      value);
  return key;
}

std::string DefaultAnchorId(const FactValue &value) {
  std::string id(VhTypeToken(TypeOf(value)));
  std::visit(
      [&id](const auto &v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, OcrFact> || std::is_same_v<T, CountingFact>) {
          if (v.subject) id += "_" + Upper(*v.subject);
        } else if constexpr (std::is_same_v<T, SizeFact> ||
                             std::is_same_v<T, PositionFact>) {
          id += "_" + Upper(v.subject_a) + "_" + Upper(v.subject_b);
        } else {
          id += "_" + Upper(v.subject);
        }
      },
      value);
  return id;
}

std::string DescribeFact(const FactValue &value) {
  std::ostringstream os;
  os << VhTypeDisplayName(TypeOf(value)) << "{";
  std::visit(
      [&os](const auto &v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ExistenceFact>) {
          os << v.subject << ", " << (v.present ? "present" : "absent");
        } else if constexpr (std::is_same_v<T, ShapeFact>) {
          os << v.subject << ", " << v.shape;
        } else if constexpr (std::is_same_v<T, ColorFact>) {
          os << v.subject << ", " << v.color;
        } else if constexpr (std::is_same_v<T, OrientationFact>) {
          os << v.subject << ", " << v.orientation;
        } else if constexpr (std::is_same_v<T, OcrFact>) {
          if (v.subject) os << *v.subject << ", ";
          os << '"' << v.text << '"';
        } else if constexpr (std::is_same_v<T, SizeFact> ||
                             std::is_same_v<T, PositionFact>) {
          os << v.subject_a << " " << RelationToken(v.relation) << " " << v.subject_b;
        } else if constexpr (std::is_same_v<T, CountingFact>) {
          if (v.subject) os << *v.subject << ", ";
          os << v.count;
        }
      },
      value);
  os << "}";
  return os.str();
}

FactualAnchor::FactualAnchor(FactValue value, std::string anchor_id)
    : value_(std::move(value)), anchor_id_(std::move(anchor_id)) {
  ValidateFactValue(value_);
  if (anchor_id_.empty()) anchor_id_ = DefaultAnchorId(value_);
}

AnchorSet::AnchorSet(std::vector<FactualAnchor> anchors) : anchors_(std::move(anchors)) {
  if (anchors_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "an anchor set needs at least one anchor");
  }
  std::set<AnchorKey> keys;
  std::set<std::string> ids;
  for (const FactualAnchor &a : anchors_) {
    AnchorKey key = a.key();
    if (!keys.insert(key).second) {
      throw Error(ErrorCode::kDuplicateKey, "two anchors share key " +
                                                std::string(VhTypeToken(key.type)) + "/" +
                                                key.subject);
    }
    if (!ids.insert(a.anchor_id()).second) {
      throw Error(ErrorCode::kDuplicateKey, "duplicate anchor id '" + a.anchor_id() + "'");
    }
  }
  // A reversed relational pair would make claim pairing ambiguous.
  for (const FactualAnchor &a : anchors_) {
    if (a.vh_type() != VhType::kSize && a.vh_type() != VhType::kPosition) continue;
    const std::string &s = a.key().subject;
    auto bar = s.find('|');
    AnchorKey flipped{a.vh_type(), s.substr(bar + 1) + "|" + s.substr(0, bar)};
    if (keys.count(flipped)) {
      throw Error(ErrorCode::kDuplicateKey,
                  "relational anchors on both orderings of pair " + s);
    }
  }
}

const FactualAnchor *AnchorSet::Find(std::string_view anchor_id) const {
  auto it = std::find_if(anchors_.begin(), anchors_.end(),
                         [&](const FactualAnchor &a) { return a.anchor_id() == anchor_id; });
  return it == anchors_.end() ? nullptr : &*it;
}

std::ostream &operator<<(std::ostream &os, VhType type) {
  return os << VhTypeDisplayName(type);
}

std::ostream &operator<<(std::ostream &os, const FactValue &value) {
  return os << DescribeFact(value);
}

std::ostream &operator<<(std::ostream &os, const FactualAnchor &anchor) {
  return os << anchor.anchor_id() << ":" << DescribeFact(anchor.value());
}

std::ostream &operator<<(std::ostream &os, const Claim &claim) {
  return os << DescribeFact(claim.value) << "@[" << claim.source_span.begin << ","
            << claim.source_span.end << ")";
}

}  // namespace gvf
