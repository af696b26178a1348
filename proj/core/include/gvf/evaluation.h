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

// Accuracy and F1 metrics over model predictions, report tables, and the
// lambda sweep summary.

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gvf/fact_model.h"
#include "gvf/jsonl.h"
#include "gvf/lexicons.h"

namespace gvf {

enum class MetricKind { kOeq, kYnq, kF1 };

std::optional<MetricKind> MetricKindFromName(std::string_view name);  // oeq|ynq|f1
std::string_view MetricLabel(MetricKind kind);  // "OEQ-proxy", "YNQ", "F1"

struct Prediction {
  std::string record_id;
  std::string text;
  std::optional<double> ce;  // cross-entropy supplied by the training loop
};

// Gold data for one question. Accepts augmented records (polarity is read
// from the leading yes/no of expected_answer) or explicit gold lines with
// "polarity": "yes"|"no".
struct GoldRecord {
  std::string record_id;
  VhType vh_type = VhType::kExistence;
  std::optional<bool> polarity;
  std::vector<std::string> anchors;
  std::string target_anchor;
  std::string subset = "all";
};

// Throw Error(kInvalidRecord).
Prediction ParsePrediction(std::string_view json_line);
GoldRecord ParseGoldRecord(std::string_view json_line);

std::vector<Prediction> LoadPredictions(const std::vector<JsonlLine> &lines);
std::vector<GoldRecord> LoadGold(const std::vector<JsonlLine> &lines);

struct EvalReport {
  MetricKind metric = MetricKind::kYnq;
  std::array<double, kNumVhTypes> per_type{};
  std::array<std::size_t, kNumVhTypes> n_per_type{};
  std::array<std::size_t, kNumVhTypes> correct_per_type{};
  double average = 0.0;  // unweighted over types with records
  std::vector<std::string> missing;    // gold ids without a prediction
  std::vector<std::string> unmatched;  // prediction ids without gold
};

// A prediction is correct iff its leading yes/no matches the gold polarity.
EvalReport EvalYnq(const std::vector<Prediction> &preds, const std::vector<GoldRecord> &gold);

// A prediction is correct iff the claim paired with the target anchor exists
// and agrees, and no anchor is contradicted.
EvalReport EvalOeq(const std::vector<Prediction> &preds, const std::vector<GoldRecord> &gold,
                   const Lexicons &lexicons = Lexicons::Default());

// Report from per-type accuracies already computed elsewhere.
EvalReport ReportFromAccuracies(MetricKind metric, const std::array<double, kNumVhTypes> &acc);

struct F1Subset {
  std::string subset;
  std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  bool no_positive_predictions = false;  // F1 taken as 0
};

struct F1Report {
  std::vector<F1Subset> subsets;  // sorted by name
  double mean_f1 = 0.0;
  std::vector<std::string> missing;
  std::vector<std::string> unmatched;
};

// "yes" is the positive class. Missing or polarity-less predictions count as
// the wrong class. Only gold records with a polarity take part.
F1Report EvalExistenceF1(const std::vector<Prediction> &preds, const std::vector<GoldRecord> &gold);

// Half-up rounding at `digits` decimals, tolerant of binary representation
// error (0.3125 -> 0.313, 0.33625 -> 0.336).
double RoundHalfUp(double value, int digits = 3);

// Aligned text table: one row per type plus Average, one column per method.
std::string RenderTable(const std::vector<std::pair<std::string, EvalReport>> &columns);
std::string RenderF1Table(const std::vector<std::pair<std::string, F1Report>> &columns);

// Machine-readable report with full-precision values.
std::string ReportJson(const std::vector<std::pair<std::string, EvalReport>> &columns);
std::string F1ReportJson(const std::vector<std::pair<std::string, F1Report>> &columns);

struct SweepInput {
  double lambda = 0.0;
  std::vector<double> ce;   // per record
  std::vector<double> fcl;  // per record, same length as ce
  std::optional<EvalReport> metrics;
};

struct SweepRow {
  double lambda = 0.0;
  std::size_t n = 0;
  double mean_ce = 0.0;
  double mean_fcl = 0.0;
  double mean_total = 0.0;
  std::optional<EvalReport> metrics;
};

// Throws Error(kInvalidArgument) for an empty sweep, negative lambda or
// mismatched vectors.
std::vector<SweepRow> SweepLambda(const std::vector<SweepInput> &inputs);

// Tab-separated with a header row; `comment` is written first as "# ...".
std::string RenderSweepTsv(const std::vector<SweepRow> &rows, std::string_view comment);

}  // namespace gvf
