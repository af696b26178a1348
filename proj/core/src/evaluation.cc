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

#include "gvf/evaluation.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "gvf/anchor_dsl.h"
#include "gvf/claim_extraction.h"
#include "gvf/contradiction.h"
#include "gvf/error.h"
#include "gvf/fcl_scoring.h"
#include "gvf/records.h"

namespace gvf {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void Invalid(const std::string &message) {
  throw Error(ErrorCode::kInvalidRecord, message);
}

Json ParseObject(std::string_view line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::parse_error &e) {
    Invalid(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) Invalid("record must be a JSON object");
  return j;
}

std::string StringField(const Json &j, const char *key, bool required) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) {
    if (required) Invalid(std::string("field '") + key + "' is required");
    return {};
  }
  if (!it->is_string()) Invalid(std::string("field '") + key + "' must be a string");
  return it->get<std::string>();
}

// Gold records indexed by id; predictions looked up per gold record so the
// result does not depend on either file's order.
struct Joined {
  std::vector<std::pair<const GoldRecord *, const Prediction *>> rows;  // sorted by gold id
  std::vector<std::string> missing;
  std::vector<std::string> unmatched;
};

Joined Join(const std::vector<Prediction> &preds, const std::vector<GoldRecord> &gold) {
  std::map<std::string_view, const Prediction *> by_id;
  for (const Prediction &p : preds) {
    if (!by_id.emplace(p.record_id, &p).second) {
      Invalid("duplicate prediction for record '" + p.record_id + "'");
    }
  }
  std::map<std::string_view, const GoldRecord *> gold_by_id;
  for (const GoldRecord &g : gold) {
    if (!gold_by_id.emplace(g.record_id, &g).second) {
      Invalid("duplicate gold record '" + g.record_id + "'");
    }
  }
  Joined out;
  for (const auto &[id, g] : gold_by_id) {
    auto it = by_id.find(id);
    const Prediction *p = it == by_id.end() ? nullptr : it->second;
    if (p == nullptr) out.missing.emplace_back(id);
    out.rows.emplace_back(g, p);
  }
  for (const auto &[id, p] : by_id) {
    if (!gold_by_id.contains(id)) out.unmatched.emplace_back(id);
  }
  return out;
}

void Finish(EvalReport &report) {
  double sum = 0.0;
  std::size_t types = 0;
  for (VhType type : kAllVhTypes) {
    std::size_t i = Index(type);
    if (report.n_per_type[i] == 0) continue;
    report.per_type[i] =
        static_cast<double>(report.correct_per_type[i]) / static_cast<double>(report.n_per_type[i]);
    sum += report.per_type[i];
    ++types;
  }
  report.average = types == 0 ? 0.0 : sum / static_cast<double>(types);
}

std::string Fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", RoundHalfUp(v, 3));
  return buf;
}

std::string Shortest(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string Pad(const std::string &s, std::size_t width, bool right) {
  if (s.size() >= width) return s;
  std::string fill(width - s.size(), ' ');
  return right ? fill + s : s + fill;
}

std::string RenderGrid(const std::vector<std::vector<std::string>> &grid) {
  std::vector<std::size_t> widths(grid.front().size(), 0);
  for (const auto &row : grid) {
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::string out;
  for (std::size_t r = 0; r < grid.size(); ++r) {
    for (std::size_t c = 0; c < grid[r].size(); ++c) {
      if (c > 0) out += "  ";
      out += Pad(grid[r][c], widths[c], c > 0);
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += '\n';
    if (r == 0) {
      std::size_t total = 0;
      for (std::size_t w : widths) total += w;
      out += std::string(total + 2 * (widths.size() - 1), '-') + '\n';
    }
  }
  return out;
}

Json IdList(const std::vector<std::string> &ids) { return Json(ids); }

}  // namespace

std::optional<MetricKind> MetricKindFromName(std::string_view name) {
  if (name == "oeq") return MetricKind::kOeq;
  if (name == "ynq") return MetricKind::kYnq;
  if (name == "f1") return MetricKind::kF1;
  return std::nullopt;
}

std::string_view MetricLabel(MetricKind kind) {
  switch (kind) {
    case MetricKind::kOeq: return "OEQ-proxy";
    case MetricKind::kYnq: return "YNQ";
    case MetricKind::kF1: return "F1";
  }
  return "";
}

Prediction ParsePrediction(std::string_view json_line) {
  Json j = ParseObject(json_line);
  Prediction p;
  p.record_id = StringField(j, "record_id", true);
  p.text = StringField(j, "text", true);
  auto ce = j.find("ce");
  if (ce != j.end() && !ce->is_null()) {
    if (!ce->is_number()) Invalid("field 'ce' must be a number");
    p.ce = ce->get<double>();
  }
  return p;
}

GoldRecord ParseGoldRecord(std::string_view json_line) {
  Json j = ParseObject(json_line);
  GoldRecord g;
  g.record_id = StringField(j, "record_id", true);
  std::string type = StringField(j, "vh_type", true);
  std::optional<VhType> vh = VhTypeFromToken(type);
  if (!vh) Invalid("unknown vh_type '" + type + "'");
  g.vh_type = *vh;
  std::string polarity = StringField(j, "polarity", false);
  if (polarity == "yes") {
    g.polarity = true;
  } else if (polarity == "no") {
    g.polarity = false;
  } else if (!polarity.empty()) {
    Invalid("polarity must be \"yes\" or \"no\"");
  } else {
    std::string expected = StringField(j, "expected_answer", false);
    if (!expected.empty()) g.polarity = LeadingPolarity(expected);
  }
  auto anchors = j.find("anchors");
  if (anchors != j.end()) {
    if (!anchors->is_array()) Invalid("field 'anchors' must be an array");
    for (const Json &a : *anchors) {
      if (!a.is_string()) Invalid("anchors[] entries must be DSL token strings");
      g.anchors.push_back(a.get<std::string>());
    }
  }
  g.target_anchor = StringField(j, "target_anchor", false);
  std::string subset = StringField(j, "subset", false);
  if (!subset.empty()) g.subset = subset;
  return g;
}

std::vector<Prediction> LoadPredictions(const std::vector<JsonlLine> &lines) {
  std::vector<Prediction> out;
  std::vector<LineDiagnostic> diagnostics;
  for (const JsonlLine &l : lines) {
    try {
      out.push_back(ParsePrediction(l.text));
    } catch (const Error &e) {
      diagnostics.push_back({l.line_number, e.what()});
    }
  }
  if (!diagnostics.empty()) throw DatasetError(ErrorCode::kInvalidRecord, std::move(diagnostics));
  return out;
}

std::vector<GoldRecord> LoadGold(const std::vector<JsonlLine> &lines) {
  std::vector<GoldRecord> out;
  std::vector<LineDiagnostic> diagnostics;
  for (const JsonlLine &l : lines) {
    try {
      out.push_back(ParseGoldRecord(l.text));
    } catch (const Error &e) {
      diagnostics.push_back({l.line_number, e.what()});
    }
  }
  if (!diagnostics.empty()) throw DatasetError(ErrorCode::kInvalidRecord, std::move(diagnostics));
  return out;
}

EvalReport EvalYnq(const std::vector<Prediction> &preds, const std::vector<GoldRecord> &gold) {
  EvalReport report;
  report.metric = MetricKind::kYnq;
  Joined joined = Join(preds, gold);
  for (const auto &[g, p] : joined.rows) {
    if (!g->polarity) Invalid("gold record '" + g->record_id + "' has no yes/no polarity");
    std::size_t i = Index(g->vh_type);
    ++report.n_per_type[i];
    if (p != nullptr && LeadingPolarity(p->text) == g->polarity) ++report.correct_per_type[i];
  }
  report.missing = std::move(joined.missing);
  report.unmatched = std::move(joined.unmatched);
  Finish(report);
  return report;
}

EvalReport EvalOeq(const std::vector<Prediction> &preds, const std::vector<GoldRecord> &gold,
                   const Lexicons &lexicons) {
  EvalReport report;
  report.metric = MetricKind::kOeq;
  Joined joined = Join(preds, gold);
  for (const auto &[g, p] : joined.rows) {
    if (g->anchors.empty()) Invalid("gold record '" + g->record_id + "' has no anchors");
    AnchorSet anchors = ParseAnchorSet(g->anchors, lexicons);
    const FactualAnchor *target = anchors.Find(g->target_anchor);
    if (target == nullptr) {
      Invalid("gold record '" + g->record_id + "' target anchor '" + g->target_anchor +
              "' is not among its anchors");
    }
    std::size_t i = Index(g->vh_type);
    ++report.n_per_type[i];
    if (p == nullptr) continue;
    if (p->text.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    ExtractionContext context;
    if (const auto *e = std::get_if<ExistenceFact>(&target->value())) {
      context.question_subject = e->subject;
      context.polar_existence = true;
    }
    std::vector<Claim> claims = ExtractClaims(AnswerText{p->text, p->record_id}, lexicons, context);
    bool correct = true;
    for (const PairingResult &r : PairClaims(anchors, claims, lexicons)) {
      if (r.indicator != 0) correct = false;
      if (r.anchor.anchor_id() == target->anchor_id() && !r.claim) correct = false;
    }
    if (correct) ++report.correct_per_type[i];
  }
  report.missing = std::move(joined.missing);
  report.unmatched = std::move(joined.unmatched);
  Finish(report);
  return report;
}

EvalReport ReportFromAccuracies(MetricKind metric, const std::array<double, kNumVhTypes> &acc) {
  EvalReport report;
  report.metric = metric;
  report.per_type = acc;
  double sum = 0.0;
  for (double a : acc) {
    if (!(a >= 0.0 && a <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument, "accuracy must lie in [0, 1]");
    }
    sum += a;
  }
  report.average = sum / static_cast<double>(kNumVhTypes);
  return report;
}

F1Report EvalExistenceF1(const std::vector<Prediction> &preds, const std::vector<GoldRecord> &gold) {
  F1Report report;
  Joined joined = Join(preds, gold);
  std::map<std::string, F1Subset> subsets;
  for (const auto &[g, p] : joined.rows) {
    if (!g->polarity) continue;
    F1Subset &s = subsets[g->subset];
    s.subset = g->subset;
    std::optional<bool> said = p == nullptr ? std::nullopt : LeadingPolarity(p->text);
    bool predicted_yes = said ? *said : !*g->polarity;
    if (*g->polarity) {
      ++(predicted_yes ? s.tp : s.fn);
    } else {
      ++(predicted_yes ? s.fp : s.tn);
    }
  }
  double sum = 0.0;
  for (auto &[name, s] : subsets) {
    std::size_t predicted = s.tp + s.fp;
    std::size_t actual = s.tp + s.fn;
    s.no_positive_predictions = predicted == 0;
    s.precision = predicted == 0 ? 0.0 : static_cast<double>(s.tp) / static_cast<double>(predicted);
    s.recall = actual == 0 ? 0.0 : static_cast<double>(s.tp) / static_cast<double>(actual);
    s.f1 = s.precision + s.recall == 0.0
               ? 0.0
               : 2.0 * s.precision * s.recall / (s.precision + s.recall);
    sum += s.f1;
    report.subsets.push_back(s);
  }
  report.mean_f1 = report.subsets.empty() ? 0.0 : sum / static_cast<double>(report.subsets.size());
  report.missing = std::move(joined.missing);
  report.unmatched = std::move(joined.unmatched);
  return report;
}

double RoundHalfUp(double value, int digits) {
  double scale = std::pow(10.0, digits);
  return std::floor(value * scale + 0.5 + 1e-9) / scale;
}

std::string RenderTable(const std::vector<std::pair<std::string, EvalReport>> &columns) {
  if (columns.empty()) return {};
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header = {"Mode"};
  for (const auto &[name, r] : columns) header.push_back(name);
  grid.push_back(std::move(header));
  for (VhType type : kAllVhTypes) {
    std::vector<std::string> row = {std::string(VhTypeDisplayName(type))};
    for (const auto &[name, r] : columns) {
      // Reports built from records leave types without records blank.
      bool counted = std::any_of(r.n_per_type.begin(), r.n_per_type.end(),
                                 [](std::size_t n) { return n > 0; });
      bool blank = counted && r.n_per_type[Index(type)] == 0;
      row.push_back(blank ? "-" : Fixed3(r.per_type[Index(type)]));
    }
    grid.push_back(std::move(row));
  }
  std::vector<std::string> avg = {"Average"};
  for (const auto &[name, r] : columns) avg.push_back(Fixed3(r.average));
  grid.push_back(std::move(avg));
  return std::string(MetricLabel(columns.front().second.metric)) + " accuracy\n" +
         RenderGrid(grid);
}

std::string RenderF1Table(const std::vector<std::pair<std::string, F1Report>> &columns) {
  if (columns.empty()) return {};
  std::set<std::string> names;
  for (const auto &[name, r] : columns) {
    for (const F1Subset &s : r.subsets) names.insert(s.subset);
  }
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header = {"Subset"};
  for (const auto &[name, r] : columns) header.push_back(name);
  grid.push_back(std::move(header));
  for (const std::string &subset : names) {
    std::vector<std::string> row = {subset};
    for (const auto &[name, r] : columns) {
      auto it = std::find_if(r.subsets.begin(), r.subsets.end(),
                             [&](const F1Subset &s) { return s.subset == subset; });
      if (it == r.subsets.end()) {
        row.push_back("-");
      } else {
        row.push_back(Fixed3(it->f1) + (it->no_positive_predictions ? "*" : ""));
      }
    }
    grid.push_back(std::move(row));
  }
  std::vector<std::string> mean = {"Mean"};
  for (const auto &[name, r] : columns) mean.push_back(Fixed3(r.mean_f1));
  grid.push_back(std::move(mean));
  std::string out = "Existence F1\n" + RenderGrid(grid);
  bool flagged = std::any_of(columns.begin(), columns.end(), [](const auto &c) {
    return std::any_of(c.second.subsets.begin(), c.second.subsets.end(),
                       [](const F1Subset &s) { return s.no_positive_predictions; });
  });
  if (flagged) out += "* no positive predictions; F1 taken as 0\n";
  return out;
}

std::string ReportJson(const std::vector<std::pair<std::string, EvalReport>> &columns) {
  Json out = Json::array();
  for (const auto &[name, r] : columns) {
    Json col;
    col["method"] = name;
    col["metric"] = MetricLabel(r.metric);
    Json per_type = Json::object();
    for (VhType type : kAllVhTypes) {
      std::size_t i = Index(type);
      per_type[std::string(VhTypeDisplayName(type))] = {
          {"accuracy", r.per_type[i]}, {"n", r.n_per_type[i]}, {"correct", r.correct_per_type[i]}};
    }
    col["per_type"] = std::move(per_type);
    col["average"] = r.average;
    col["average_rounded"] = RoundHalfUp(r.average, 3);
    col["missing"] = IdList(r.missing);
    col["unmatched"] = IdList(r.unmatched);
    out.push_back(std::move(col));
  }
  return out.dump(2) + "\n";
}

std::string F1ReportJson(const std::vector<std::pair<std::string, F1Report>> &columns) {
  Json out = Json::array();
  for (const auto &[name, r] : columns) {
    Json col;
    col["method"] = name;
    col["metric"] = "F1";
    Json subsets = Json::array();
    for (const F1Subset &s : r.subsets) {
      subsets.push_back({{"subset", s.subset},
                         {"tp", s.tp},
                         {"fp", s.fp},
                         {"fn", s.fn},
                         {"tn", s.tn},
                         {"precision", s.precision},
                         {"recall", s.recall},
                         {"f1", s.f1},
                         {"no_positive_predictions", s.no_positive_predictions}});
    }
    col["subsets"] = std::move(subsets);
    col["mean_f1"] = r.mean_f1;
    col["missing"] = IdList(r.missing);
    col["unmatched"] = IdList(r.unmatched);
    out.push_back(std::move(col));
  }
  return out.dump(2) + "\n";
}

std::vector<SweepRow> SweepLambda(const std::vector<SweepInput> &inputs) {
  if (inputs.empty()) throw Error(ErrorCode::kInvalidArgument, "no lambda values to sweep");
  std::vector<SweepRow> rows;
  for (const SweepInput &in : inputs) {
    if (!(in.lambda >= 0.0) || !std::isfinite(in.lambda)) {
      throw Error(ErrorCode::kInvalidArgument, "lambda values must be finite and >= 0");
    }
    if (in.ce.size() != in.fcl.size()) {
      throw Error(ErrorCode::kInvalidArgument, "ce and fcl vectors differ in length");
    }
    ScoringConfig config;
    config.lambda = in.lambda;
    SweepRow row;
    row.lambda = in.lambda;
    row.n = in.ce.size();
    double ce = 0.0, fcl = 0.0, total = 0.0;
    for (std::size_t i = 0; i < in.ce.size(); ++i) {
      FclBreakdown b;
      b.total = in.fcl[i];
      ce += in.ce[i];
      fcl += in.fcl[i];
      total += TotalLoss(in.ce[i], b, config);
    }
    if (row.n > 0) {
      double n = static_cast<double>(row.n);
      row.mean_ce = ce / n;
      row.mean_fcl = fcl / n;
      row.mean_total = total / n;
    }
    row.metrics = in.metrics;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string RenderSweepTsv(const std::vector<SweepRow> &rows, std::string_view comment) {
  bool with_metrics = std::any_of(rows.begin(), rows.end(),
                                  [](const SweepRow &r) { return r.metrics.has_value(); });
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << '\n';
  out << "lambda\tn\tmean_ce\tmean_fcl\tmean_total";
  if (with_metrics) {
    for (VhType type : kAllVhTypes) out << "\tacc_" << VhTypeConfigKey(type);
    out << "\tacc_average";
  }
  out << '\n';
  for (const SweepRow &r : rows) {
    out << Shortest(r.lambda) << '\t' << r.n << '\t' << Shortest(r.mean_ce) << '\t'
        << Shortest(r.mean_fcl) << '\t' << Shortest(r.mean_total);
    if (with_metrics) {
      for (VhType type : kAllVhTypes) {
        out << '\t' << (r.metrics ? Shortest(r.metrics->per_type[Index(type)]) : "");
      }
      out << '\t' << (r.metrics ? Shortest(r.metrics->average) : "");
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace gvf
