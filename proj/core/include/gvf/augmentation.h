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

// Anchor derivation from structured scenes, counter-factual generation,
// fact-aware instruction formatting, and the dataset-level augment/split
// passes over JSON Lines files.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gvf/fact_model.h"
#include "gvf/jsonl.h"
#include "gvf/lexicons.h"
#include "gvf/records.h"
#include "gvf/templates.h"

namespace gvf {

enum class InstructionStyle { kFull, kNoFactTokens };

// "full" / "bare".
std::optional<InstructionStyle> InstructionStyleFromName(std::string_view name);
std::string_view InstructionStyleName(InstructionStyle style);

// Throws Error(kInvalidScene) for unknown nouns or attribute tokens, dangling
// or self relations, duplicate names, and attributes on absent objects.
void ValidateScene(const SceneRecord &scene, const Lexicons &lexicons = Lexicons::Default());

// Index of the object the question is about: the earliest one mentioned in
// the question text, else the first object.
std::size_t QuestionedObject(const SceneRecord &scene,
                             const Lexicons &lexicons = Lexicons::Default());

// Record-level COUNT of the questioned object first, then per object
// Existence/Color/Shape/Orientation/OCR, then relations in scene order.
// The questioned object's text is the record-level OCR anchor; other texts
// are keyed by object.
AnchorSet DeriveAnchors(const SceneRecord &scene, const Lexicons &lexicons = Lexicons::Default());

// The anchor of the scene's vh_type the question targets. Throws
// Error(kInvalidScene) if the scene has no ground truth of that type.
const FactualAnchor &TargetAnchor(const SceneRecord &scene, const AnchorSet &anchors,
                                  const Lexicons &lexicons = Lexicons::Default());

struct Counterfactual {
  std::string prompt;           // plain yes/no question
  std::string expected_answer;  // corrective answer
  std::string target_anchor;    // id of the contradicted anchor
  FactValue perturbed;
  std::string check_token;
  AnchorSet anchors;            // scene anchors, plus the absent distractor if any
};

// Throws Error(kExhaustedPerturbations) when no distinct value exists.
Counterfactual GenerateCounterfactual(const SceneRecord &scene, const AnchorSet &anchors,
                                      std::uint64_t seed,
                                      const Lexicons &lexicons = Lexicons::Default(),
                                      const Templates &templates = Templates::Default());

std::string FormatInstruction(const SceneRecord &scene, const AnchorSet &anchors, TaskKind mode,
                              const Counterfactual *cf, InstructionStyle style,
                              const Templates &templates = Templates::Default(),
                              const Lexicons &lexicons = Lexicons::Default());

// The scene answer, or the counting rewrite for counting records.
std::string OriginalAnswer(const SceneRecord &scene, const AnchorSet &anchors,
                           const Templates &templates = Templates::Default(),
                           const Lexicons &lexicons = Lexicons::Default());

struct AugmentConfig {
  std::uint64_t seed = 42;
  InstructionStyle style = InstructionStyle::kFull;
  double counterfactual_ratio = 1.0;
  std::size_t workers = 0;
};

// ORIGINAL record first, then the COUNTERFACTUAL sibling when drawn.
std::vector<AugmentedRecord> AugmentScene(const SceneRecord &scene, const AugmentConfig &config,
                                          const Lexicons &lexicons = Lexicons::Default(),
                                          const Templates &templates = Templates::Default());

struct AugmentSummary {
  std::size_t records_in = 0;
  std::size_t records_out = 0;
  std::array<std::size_t, kNumVhTypes> originals{};
  std::array<std::size_t, kNumVhTypes> counterfactuals{};
};

struct AugmentResult {
  std::vector<std::string> lines;  // JSON, no provenance header
  AugmentSummary summary;
};

// Fail-closed: any bad line raises DatasetError listing every bad line.
AugmentResult AugmentLines(const std::vector<JsonlLine> &lines, const AugmentConfig &config,
                           const Lexicons &lexicons = Lexicons::Default(),
                           const Templates &templates = Templates::Default());

AugmentSummary AugmentDataset(const std::filesystem::path &input,
                              const std::filesystem::path &output, const AugmentConfig &config,
                              std::string_view config_hash,
                              const Lexicons &lexicons = Lexicons::Default(),
                              const Templates &templates = Templates::Default());

struct SplitResult {
  std::vector<JsonlLine> train;  // input order
  std::vector<JsonlLine> test;
  std::array<std::size_t, kNumVhTypes> train_per_type{};
  std::array<std::size_t, kNumVhTypes> test_per_type{};
};

// Per type present in the input: round(n * fraction) train records, clamped
// to [1, n - 1], drawn by a seeded shuffle. Types with a single record raise
// Error(kTypeTooSmall); fraction outside (0, 1) raises kInvalidArgument.
SplitResult SplitLines(const std::vector<JsonlLine> &lines, double train_fraction,
                       std::uint64_t seed);

SplitResult SplitDataset(const std::filesystem::path &input,
                         const std::filesystem::path &train_output,
                         const std::filesystem::path &test_output, double train_fraction,
                         std::uint64_t seed, std::string_view config_hash);

}  // namespace gvf
