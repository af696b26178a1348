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

// Factual-consistency loss: a gamma-weighted count of contradicted anchors,
// and the combined objective ce + lambda * fcl.

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gvf/claim_extraction.h"
#include "gvf/contradiction.h"
#include "gvf/error.h"
#include "gvf/fact_model.h"
#include "gvf/lexicons.h"

namespace gvf {

struct ScoringConfig {
  double lambda = 1.0;
  std::array<double, kNumVhTypes> gamma = {1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0};

  double Gamma(VhType type) const { return gamma[Index(type)]; }

  // Throws Error(kConfig) for negative or non-finite weights.
  void Validate() const;

  // Reads the optional [scoring] table (lambda, [scoring.gamma] per type)
  // on top of the defaults. Unknown gamma keys are rejected.
  static ScoringConfig FromToml(std::string_view toml_text, std::string_view source = "config");
};

struct AnchorScore {
  std::string anchor_id;
  VhType vh_type = VhType::kExistence;
  int indicator = 0;
  double gamma = 0.0;
  double contribution = 0.0;
  std::optional<Claim> claim;
};

struct FclBreakdown {
  std::vector<AnchorScore> per_anchor;
  double total = 0.0;
};

// Contributions are summed in anchor order.
FclBreakdown Breakdown(const std::vector<PairingResult> &pairs, const ScoringConfig &config);

FclBreakdown FclScore(const AnswerText &answer, const AnchorSet &anchors,
                      const ScoringConfig &config, const Lexicons &lexicons = Lexicons::Default(),
                      const ExtractionContext &context = {});

// Throws Error(kInvalidArgument) if ce_loss is negative or NaN.
double TotalLoss(double ce_loss, const FclBreakdown &fcl, const ScoringConfig &config);

struct ScoreRequest {
  std::string record_id;
  std::string answer;
  std::vector<std::string> anchors;  // DSL tokens
  ExtractionContext context;
};

struct ScoreOutcome {
  std::string record_id;
  std::optional<FclBreakdown> breakdown;  // empty when the record failed
  std::optional<Error> error;
};

// Scores every request; output order equals input order. A failing record
// yields an outcome carrying its error and does not stop the batch.
// workers == 0 picks std::thread::hardware_concurrency().
std::vector<ScoreOutcome> ScoreBatch(const std::vector<ScoreRequest> &requests,
                                     const ScoringConfig &config,
                                     const Lexicons &lexicons = Lexicons::Default(),
                                     std::size_t workers = 0);

}  // namespace gvf
