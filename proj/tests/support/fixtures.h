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

// Deterministic fixture data for tests, benchmarks and the shipped sample
// dataset under data/fixtures/.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gvf/fact_model.h"
#include "gvf/fcl_scoring.h"
#include "gvf/random.h"
#include "gvf/records.h"

namespace gvf::fixtures {

// `per_type` scenes for each of the eight types, grouped by type.
std::vector<SceneRecord> MakeScenes(std::size_t per_type, std::uint64_t seed = 7);

std::string ToJsonl(const std::vector<SceneRecord> &scenes);

// Correct-prediction counts per type (type order) for one method column.
struct Column {
  const char *name;
  std::size_t n_per_type;
  std::array<std::size_t, kNumVhTypes> correct;
};

// OEQ columns at n = 300 per type.
inline constexpr std::array<Column, 3> kOeqColumns = {{
    {"LLaVA-1.5", 300, {70, 50, 80, 40, 40, 110, 100, 60}},
    {"LLaVA-1.5-ft", 300, {80, 100, 80, 50, 50, 110, 160, 80}},
    {"GVF", 300, {93, 114, 90, 60, 66, 120, 174, 90}},
}};

// YNQ columns at n = 1000 per type.
inline constexpr std::array<Column, 3> kYnqColumns = {{
    {"LLaVA-1.5", 1000, {633, 423, 733, 500, 433, 567, 700, 467}},
    {"LLaVA-1.5-ft", 1000, {600, 538, 700, 567, 467, 700, 700, 433}},
    {"GVF", 1000, {625, 570, 720, 590, 490, 730, 720, 460}},
}};

// Gold lines for OEQ evaluation built from scenes: anchors, target anchor.
std::vector<std::string> OeqGoldLines(const std::vector<SceneRecord> &scenes);

// Predictions for OEQ gold built by OeqGoldLines: within each type the
// first `correct[type]` records get the scene's answer, the rest a
// contradicting answer.
std::vector<std::string> OeqPredictionLines(const std::vector<SceneRecord> &scenes,
                                            const Column &column);

// YNQ gold with alternating polarity and matching predictions.
std::vector<std::string> YnqGoldLines(std::size_t per_type);
std::vector<std::string> YnqPredictionLines(const Column &column);

// A wrong answer for the scene's question: contradicts the target anchor.
std::string WrongAnswer(const SceneRecord &scene);

// Random valid fact of the given type. Subjects come from the default noun
// lexicon, optionally with a numeric suffix ("cup_3").
FactValue RandomFact(SplitMix64 &rng, VhType type);

// Random fact with the same pairing key as `value` but a different value.
FactValue Perturb(SplitMix64 &rng, const FactValue &value);

// Single subject, or nullopt for relational facts and record-level ones.
std::optional<std::string> SubjectOf(const FactValue &value);

// Anchors and claims whose indicators are known by construction: each anchor
// gets no claim (0), an equal claim (0) or a perturbed claim (1). Weights are
// multiples of 1/8 so sums are exact in any order.
struct ScoringCase {
  std::vector<FactualAnchor> anchors;
  std::vector<Claim> claims;
  std::vector<int> indicators;  // per anchor
  ScoringConfig config;
  double ce = 0.0;
};
ScoringCase RandomScoringCase(SplitMix64 &rng);

// Sum of gamma * indicator grouped by type, then CE + lambda * FCL.
double BruteForceFcl(const ScoringCase &c);
double BruteForceTotal(const ScoringCase &c);

}  // namespace gvf::fixtures
