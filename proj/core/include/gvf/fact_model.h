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

// Shared vocabulary of the toolkit: the eight visual-hallucination types,
// typed fact values, ground-truth anchors and extracted claims.

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gvf {

// Declaration order is the canonical report order.
enum class VhType : std::uint8_t {
  kExistence,
  kShape,
  kColor,
  kOrientation,
  kOcr,
  kSize,
  kPosition,
  kCounting,
};

inline constexpr std::size_t kNumVhTypes = 8;
inline constexpr std::array<VhType, kNumVhTypes> kAllVhTypes = {
    VhType::kExistence,   VhType::kShape, VhType::kColor,    VhType::kOrientation,
    VhType::kOcr,         VhType::kSize,  VhType::kPosition, VhType::kCounting,
};

constexpr std::size_t Index(VhType type) { return static_cast<std::size_t>(type); }

// Uppercase token used on the wire (EXISTENCE, ..., COUNT).
std::string_view VhTypeToken(VhType type);
std::optional<VhType> VhTypeFromToken(std::string_view token);
// Human-readable row label for report tables ("Existence", "OCR", ...).
std::string_view VhTypeDisplayName(VhType type);
// Lowercase key used in configuration files ("existence", ..., "counting").
std::string_view VhTypeConfigKey(VhType type);
std::optional<VhType> VhTypeFromConfigKey(std::string_view key);

enum class SizeRelation : std::uint8_t { kLarger, kSmaller, kEqual };
enum class PositionRelation : std::uint8_t {
  kLeftOf,
  kRightOf,
  kAbove,
  kBelow,
  kInside,
  kOn,
};

inline constexpr std::array<SizeRelation, 3> kAllSizeRelations = {
    SizeRelation::kLarger, SizeRelation::kSmaller, SizeRelation::kEqual};
inline constexpr std::array<PositionRelation, 6> kAllPositionRelations = {
    PositionRelation::kLeftOf, PositionRelation::kRightOf, PositionRelation::kAbove,
    PositionRelation::kBelow,  PositionRelation::kInside,  PositionRelation::kOn};

std::string_view RelationToken(SizeRelation relation);
std::string_view RelationToken(PositionRelation relation);
std::optional<SizeRelation> SizeRelationFromToken(std::string_view token);
std::optional<PositionRelation> PositionRelationFromToken(std::string_view token);

// Relation that holds for the swapped pair (a R b  <=>  b R' a). INSIDE and ON
// have no inverse inside the closed relation set.
SizeRelation Inverse(SizeRelation relation);
std::optional<PositionRelation> Inverse(PositionRelation relation);

// Subject slot used by Counting and OCR facts that do not name an object.
inline constexpr std::string_view kRecordSubject = "_record";

struct ExistenceFact {
  std::string subject;
  bool present = true;
  bool operator==(const ExistenceFact &) const = default;
};

struct ShapeFact {
  std::string subject;
  std::string shape;
  bool operator==(const ShapeFact &) const = default;
};

struct ColorFact {
  std::string subject;
  std::string color;
  bool operator==(const ColorFact &) const = default;
};

struct OrientationFact {
  std::string subject;
  std::string orientation;
  bool operator==(const OrientationFact &) const = default;
};

struct OcrFact {
  std::string text;  // normalized: lowercase, no punctuation, single spaces
  std::optional<std::string> subject;
  bool operator==(const OcrFact &) const = default;
};

struct SizeFact {
  std::string subject_a;
  std::string subject_b;
  SizeRelation relation = SizeRelation::kEqual;
  bool operator==(const SizeFact &) const = default;
};

struct PositionFact {
  std::string subject_a;
  std::string subject_b;
  PositionRelation relation = PositionRelation::kLeftOf;
  bool operator==(const PositionFact &) const = default;
};

struct CountingFact {
  std::uint32_t count = 0;
  std::optional<std::string> subject;
  bool operator==(const CountingFact &) const = default;
};

// Alternative index equals Index(VhType), so a value always carries its type.
using FactValue = std::variant<ExistenceFact, ShapeFact, ColorFact, OrientationFact,
                               OcrFact, SizeFact, PositionFact, CountingFact>;

inline VhType TypeOf(const FactValue &value) {
  return static_cast<VhType>(value.index());
}

// Lowercase [a-z0-9_] token without leading, trailing or doubled underscores.
bool IsCanonicalToken(std::string_view token);

// Throws Error(kTypeMismatch) if the value breaks a FactValue invariant.
void ValidateFactValue(const FactValue &value);

// Pairing key: (type, subject). Counting/OCR without a subject use
// kRecordSubject; Size/Position use "a|b" for the ordered pair.
struct AnchorKey {
  VhType type = VhType::kExistence;
  std::string subject;
  auto operator<=>(const AnchorKey &) const = default;
};

AnchorKey KeyOf(const FactValue &value);

// Stable identifier derived from the key, e.g. "COUNT", "COLOR_BALL",
// "POSITION_DOG_CAT".
std::string DefaultAnchorId(const FactValue &value);

std::string DescribeFact(const FactValue &value);

class FactualAnchor {
 public:
  // Validates the value; an empty id is replaced by DefaultAnchorId(value).
  explicit FactualAnchor(FactValue value, std::string anchor_id = {});

  VhType vh_type() const { return TypeOf(value_); }
  const FactValue &value() const { return value_; }
  const std::string &anchor_id() const { return anchor_id_; }
  AnchorKey key() const { return KeyOf(value_); }

  bool operator==(const FactualAnchor &) const = default;

 private:
  FactValue value_;
  std::string anchor_id_;
};

inline AnchorKey KeyOf(const FactualAnchor &anchor) { return anchor.key(); }

// Ordered, non-empty set of anchors with unique keys and ids. Relational
// anchors are also unique per unordered subject pair.
class AnchorSet {
 public:
  explicit AnchorSet(std::vector<FactualAnchor> anchors);
  AnchorSet(std::initializer_list<FactualAnchor> anchors)
      : AnchorSet(std::vector<FactualAnchor>(anchors)) {}

  std::size_t size() const { return anchors_.size(); }
  const FactualAnchor &operator[](std::size_t i) const { return anchors_[i]; }
  auto begin() const { return anchors_.begin(); }
  auto end() const { return anchors_.end(); }
  const std::vector<FactualAnchor> &anchors() const { return anchors_; }

  const FactualAnchor *Find(std::string_view anchor_id) const;

  bool operator==(const AnchorSet &) const = default;

 private:
  std::vector<FactualAnchor> anchors_;
};

// Half-open byte range into the originating answer text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
  bool operator==(const Span &) const = default;
};

struct Claim {
  FactValue value;
  Span source_span;

  VhType vh_type() const { return TypeOf(value); }
  bool operator==(const Claim &) const = default;
};

std::ostream &operator<<(std::ostream &os, VhType type);
std::ostream &operator<<(std::ostream &os, const FactValue &value);
std::ostream &operator<<(std::ostream &os, const FactualAnchor &anchor);
std::ostream &operator<<(std::ostream &os, const Claim &claim);

}  // namespace gvf
