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

#include "gvf/fcl_scoring.h"

#include <cmath>

#include "gvf/anchor_dsl.h"
#include "parallel.h"
#include "toml_util.h"

namespace gvf {

namespace {

double RequireWeight(const toml::node &node, const std::string &what, std::string_view source) {
  std::optional<double> v = node.value<double>();
  if (!v) {
    throw Error(ErrorCode::kConfig, std::string(source) + ": " + what + " must be a number");
  }
  return *v;
}

}  // namespace

void ScoringConfig::Validate() const {
  if (!std::isfinite(lambda) || lambda < 0.0) {
    throw Error(ErrorCode::kConfig, "lambda must be a finite non-negative number");
  }
  for (VhType type : kAllVhTypes) {
    double g = Gamma(type);
    if (!std::isfinite(g) || g < 0.0) {
      throw Error(ErrorCode::kConfig, "gamma for " + std::string(VhTypeConfigKey(type)) +
                                          " must be a finite non-negative number");
    }
  }
}

ScoringConfig ScoringConfig::FromToml(std::string_view toml_text, std::string_view source) {
  toml::table root = internal::ParseToml(toml_text, source);
  ScoringConfig config;
  const toml::table *scoring = root["scoring"].as_table();
  if (scoring == nullptr) return config;
  for (const auto &[key, node] : *scoring) {
    if (key == "lambda") {
      config.lambda = RequireWeight(node, "scoring.lambda", source);
    } else if (key == "gamma") {
      const toml::table *gamma = node.as_table();
      if (gamma == nullptr) {
        throw Error(ErrorCode::kConfig, std::string(source) + ": scoring.gamma must be a table");
      }
      for (const auto &[type_key, weight] : *gamma) {
        std::optional<VhType> type = VhTypeFromConfigKey(type_key.str());
        if (!type) {
          throw Error(ErrorCode::kConfig, std::string(source) + ": unknown gamma key '" +
                                              std::string(type_key.str()) + "'");
        }
        config.gamma[Index(*type)] =
            RequireWeight(weight, "scoring.gamma." + std::string(type_key.str()), source);
      }
    } else {
      throw Error(ErrorCode::kConfig, std::string(source) + ": unknown key scoring." +
                                          std::string(key.str()));
    }
  }
  config.Validate();
  return config;
}

FclBreakdown Breakdown(const std::vector<PairingResult> &pairs, const ScoringConfig &config) {
  FclBreakdown out;
  out.per_anchor.reserve(pairs.size());
  for (const PairingResult &p : pairs) {
    AnchorScore s;
    s.anchor_id = p.anchor.anchor_id();
    s.vh_type = p.anchor.vh_type();
    s.indicator = p.indicator;
    s.gamma = config.Gamma(s.vh_type);
    s.contribution = s.gamma * s.indicator;
    s.claim = p.claim;
    out.total += s.contribution;
    out.per_anchor.push_back(std::move(s));
  }
  return out;
}

FclBreakdown FclScore(const AnswerText &answer, const AnchorSet &anchors,
                      const ScoringConfig &config, const Lexicons &lexicons,
                      const ExtractionContext &context) {
  std::vector<Claim> claims = ExtractClaims(answer, lexicons, context);
  return Breakdown(PairClaims(anchors, claims, lexicons), config);
}

double TotalLoss(double ce_loss, const FclBreakdown &fcl, const ScoringConfig &config) {
  if (std::isnan(ce_loss) || ce_loss < 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "cross-entropy loss must be non-negative");
  }
  return ce_loss + config.lambda * fcl.total;
}

std::vector<ScoreOutcome> ScoreBatch(const std::vector<ScoreRequest> &requests,
                                     const ScoringConfig &config, const Lexicons &lexicons,
                                     std::size_t workers) {
  config.Validate();
  std::vector<ScoreOutcome> out(requests.size());
  auto score_one = [&](std::size_t i) {
    const ScoreRequest &req = requests[i];
    out[i].record_id = req.record_id;
    try {
      AnchorSet anchors = ParseAnchorSet(req.anchors, lexicons);
      out[i].breakdown =
          FclScore(AnswerText{req.answer, req.record_id}, anchors, config, lexicons, req.context);
    } catch (const Error &e) {
      out[i].error = e;
    }
  };

  internal::ParallelFor(requests.size(), workers, score_one);
  return out;
}

}  // namespace gvf
