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

// gvf: command-line driver for the GVF toolkit.
//
// Exit codes: 0 success, 1 validate found bad records, 2 I/O failure,
// 3 invalid input data, 4 configuration or usage error.
// Data goes to stdout or --output; diagnostics go to stderr.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gvf/anchor_dsl.h"
#include "gvf/augmentation.h"
#include "gvf/config.h"
#include "gvf/error.h"
#include "gvf/evaluation.h"
#include "gvf/fcl_scoring.h"
#include "gvf/jsonl.h"
#include "gvf/records.h"
#include "gvf/version.h"

namespace gvf {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInvalidRecords = 1;
constexpr int kExitIo = 2;
constexpr int kExitValidation = 3;
constexpr int kExitConfig = 4;

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo: return kExitIo;
    case ErrorCode::kConfig:
    case ErrorCode::kInvalidArgument: return kExitConfig;
    default: return kExitValidation;
  }
}

struct Flags {
  std::optional<std::string> config;
  std::string input;
  std::string output;
  std::vector<std::string> predictions;
  std::optional<std::uint64_t> seed;
  std::optional<double> lambda;
  std::vector<std::string> gammas;
  std::optional<std::string> style;
  std::optional<double> ratio;
  std::optional<double> fraction;
  std::string lambdas;
  std::string metric = "oeq";
  std::optional<std::size_t> workers;
  bool verbose = false;
  bool quiet = false;
};

class Logger {
 public:
  explicit Logger(Verbosity v) : level_(v) {}
  void Warn(const std::string &msg) const {
    if (level_ >= Verbosity::kWarn) std::cerr << "gvf: " << msg << '\n';
  }
  void Info(const std::string &msg) const {
    if (level_ >= Verbosity::kInfo) std::cerr << "gvf: " << msg << '\n';
  }

 private:
  Verbosity level_;
};

// Defaults, then the config file (--config or GVF_CONFIG), then flags.
RunConfig ResolveConfig(const Flags &f) {
  RunConfig config;
  std::optional<std::string> path = f.config;
  if (!path) {
    if (const char *env = std::getenv("GVF_CONFIG"); env != nullptr && *env != '\0') path = env;
  }
  if (path) config = RunConfig::Load(*path);
  if (f.seed) config.seed = *f.seed;
  if (f.lambda) config.scoring.lambda = *f.lambda;
  for (const std::string &g : f.gammas) {
    auto eq = g.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kConfig, "--gamma expects <type>=<weight>, got '" + g + "'");
    }
    std::string key = g.substr(0, eq);
    std::optional<VhType> type = VhTypeFromConfigKey(key);
    if (!type) type = VhTypeFromToken(key);
    if (!type) throw Error(ErrorCode::kConfig, "--gamma: unknown type '" + key + "'");
    try {
      std::size_t used = 0;
      config.scoring.gamma[Index(*type)] = std::stod(g.substr(eq + 1), &used);
      if (used != g.size() - eq - 1) throw std::invalid_argument(g);
    } catch (const std::exception &) {
      throw Error(ErrorCode::kConfig, "--gamma: bad weight in '" + g + "'");
    }
  }
  if (f.style) {
    std::optional<InstructionStyle> s = InstructionStyleFromName(*f.style);
    if (!s) throw Error(ErrorCode::kConfig, "--style must be full or bare");
    config.style = *s;
  }
  if (f.ratio) config.counterfactual_ratio = *f.ratio;
  if (f.fraction) config.train_fraction = *f.fraction;
  if (f.workers) config.workers = *f.workers;
  if (f.verbose) config.verbosity = Verbosity::kInfo;
  if (f.quiet) config.verbosity = Verbosity::kQuiet;
  config.scoring.Validate();
  return config;
}

void RequireInput(const std::string &path) {
  if (!std::filesystem::exists(path)) throw Error(ErrorCode::kIo, "no such file: " + path);
}

void Emit(const std::string &output, const std::string &contents) {
  if (output.empty() || output == "-") {
    std::cout << contents;
  } else {
    WriteFileAtomic(output, contents);
  }
}

void PrintDiagnostics(const std::string &file, const std::vector<LineDiagnostic> &diags) {
  for (const LineDiagnostic &d : diags) std::cerr << file << ":" << d.line << ": " << d.message << '\n';
}

int CmdValidate(const Flags &f, const RunConfig &config) {
  RequireInput(f.input);
  Lexicons lexicons = config.LoadLexicons();
  std::vector<JsonlLine> lines = ReadJsonl(f.input);
  if (lines.empty()) {
    std::cerr << f.input << ": no records\n";
    return kExitInvalidRecords;
  }
  std::vector<LineDiagnostic> diags;
  for (const JsonlLine &l : lines) {
    try {
      Json j = Json::parse(l.text, nullptr, false);
      if (j.is_object() && j.contains("instruction")) {
        AugmentedRecord rec = ParseAugmentedRecord(l.text);
        AnchorSet anchors = ParseAnchorSet(rec.anchors, lexicons);
        FindTokens(rec.instruction);
        if (anchors.Find(rec.target_anchor) == nullptr) {
          throw Error(ErrorCode::kInvalidRecord,
                      "target_anchor '" + rec.target_anchor + "' is not among the anchors");
        }
      } else {
        SceneRecord scene = ParseSceneRecord(l.text);
        AnchorSet anchors = DeriveAnchors(scene, lexicons);
        TargetAnchor(scene, anchors, lexicons);
      }
    } catch (const Error &e) {
      diags.push_back({l.line_number, e.what()});
    }
  }
  PrintDiagnostics(f.input, diags);
  std::cout << lines.size() - diags.size() << " of " << lines.size() << " records valid\n";
  return diags.empty() ? kExitOk : kExitInvalidRecords;
}

Json SummaryJson(const AugmentSummary &s) {
  Json per_type = Json::object();
  for (VhType t : kAllVhTypes) {
    per_type[std::string(VhTypeToken(t))] = {{"original", s.originals[Index(t)]},
                                             {"counterfactual", s.counterfactuals[Index(t)]}};
  }
  return {{"records_in", s.records_in}, {"records_out", s.records_out}, {"per_type", per_type}};
}

int CmdAugment(const Flags &f, const RunConfig &config, const Logger &log) {
  RequireInput(f.input);
  if (f.output.empty()) throw Error(ErrorCode::kConfig, "augment needs --output");
  Lexicons lexicons = config.LoadLexicons();
  Templates templates = config.LoadTemplates();
  AugmentConfig ac{config.seed, config.style, config.counterfactual_ratio, config.workers};
  AugmentSummary summary =
      AugmentDataset(f.input, f.output, ac, config.Hash(lexicons, templates), lexicons, templates);
  log.Info("wrote " + std::to_string(summary.records_out) + " records to " + f.output);
  std::cout << SummaryJson(summary).dump() << '\n';
  return kExitOk;
}

int CmdSplit(const Flags &f, const RunConfig &config, const Logger &log) {
  RequireInput(f.input);
  if (f.output.empty()) throw Error(ErrorCode::kConfig, "split needs --output <directory>");
  std::filesystem::create_directories(f.output);
  std::filesystem::path dir(f.output);
  Lexicons lexicons = config.LoadLexicons();
  Templates templates = config.LoadTemplates();
  SplitResult r = SplitDataset(f.input, dir / "train.jsonl", dir / "test.jsonl",
                               config.train_fraction, config.seed,
                               config.Hash(lexicons, templates));
  log.Info("wrote " + (dir / "train.jsonl").string() + " and " + (dir / "test.jsonl").string());
  Json per_type = Json::object();
  for (VhType t : kAllVhTypes) {
    if (r.train_per_type[Index(t)] + r.test_per_type[Index(t)] == 0) continue;
    per_type[std::string(VhTypeToken(t))] = {{"train", r.train_per_type[Index(t)]},
                                             {"test", r.test_per_type[Index(t)]}};
  }
  std::cout << Json{{"train", r.train.size()}, {"test", r.test.size()}, {"per_type", per_type}}.dump()
            << '\n';
  return kExitOk;
}

// Anchors, answer and CE per record, joined with optional predictions.
struct ScoreInputs {
  std::vector<ScoreRequest> requests;
  std::vector<std::optional<double>> ce;
};

// Existence records read a bare "yes"/"no" as a claim about the target.
ExtractionContext PolarContext(const Json &record, const std::vector<std::string> &anchors,
                               const Lexicons &lexicons) {
  if (!record.contains("vh_type") || record["vh_type"] != "EXISTENCE" ||
      !record.contains("target_anchor") || !record["target_anchor"].is_string()) {
    return {};
  }
  const std::string target = record["target_anchor"].get<std::string>();
  for (const std::string &token : anchors) {
    try {
      FactualAnchor a = ParseAnchor(token, lexicons);
      if (a.anchor_id() != target) continue;
      if (const auto *e = std::get_if<ExistenceFact>(&a.value())) return {e->subject, true};
    } catch (const Error &) {
      // Reported when the record is scored.
    }
  }
  return {};
}

ScoreInputs BuildScoreInputs(const std::string &records_path, const std::string &predictions_path,
                             const Lexicons &lexicons) {
  std::vector<JsonlLine> lines = ReadJsonl(records_path);
  std::map<std::string, Prediction> preds;
  if (!predictions_path.empty()) {
    RequireInput(predictions_path);
    for (Prediction &p : LoadPredictions(ReadJsonl(predictions_path))) {
      std::string id = p.record_id;
      preds.emplace(id, std::move(p));
    }
  }
  ScoreInputs in;
  std::vector<LineDiagnostic> diags;
  for (const JsonlLine &l : lines) {
    Json j = Json::parse(l.text, nullptr, false);
    if (!j.is_object() || !j.contains("record_id") || !j["record_id"].is_string() ||
        !j.contains("anchors") || !j["anchors"].is_array()) {
      diags.push_back({l.line_number, "record needs a string record_id and an anchors array"});
      continue;
    }
    ScoreRequest req;
    req.record_id = j["record_id"].get<std::string>();
    for (const Json &a : j["anchors"]) {
      if (a.is_string()) req.anchors.push_back(a.get<std::string>());
    }
    req.context = PolarContext(j, req.anchors, lexicons);
    std::optional<double> ce;
    if (j.contains("ce") && j["ce"].is_number()) ce = j["ce"].get<double>();
    if (!predictions_path.empty()) {
      auto it = preds.find(req.record_id);
      if (it == preds.end()) continue;  // only predicted records are scored
      req.answer = it->second.text;
      if (it->second.ce) ce = it->second.ce;
    } else if (j.contains("answer") && j["answer"].is_string()) {
      req.answer = j["answer"].get<std::string>();
    } else if (j.contains("expected_answer") && j["expected_answer"].is_string()) {
      req.answer = j["expected_answer"].get<std::string>();
    } else {
      diags.push_back({l.line_number, "record has no answer text to score"});
      continue;
    }
    in.requests.push_back(std::move(req));
    in.ce.push_back(ce);
  }
  if (!diags.empty()) throw DatasetError(ErrorCode::kInvalidRecord, std::move(diags));
  return in;
}

Json BreakdownJson(const FclBreakdown &b) {
  Json per_anchor = Json::array();
  for (const AnchorScore &s : b.per_anchor) {
    Json e = {{"anchor_id", s.anchor_id},
              {"indicator", s.indicator},
              {"gamma", s.gamma},
              {"contribution", s.contribution}};
    e["claim"] = s.claim ? Json(DescribeFact(s.claim->value)) : Json(nullptr);
    per_anchor.push_back(std::move(e));
  }
  return per_anchor;
}

int CmdScore(const Flags &f, const RunConfig &config, const Logger &log) {
  RequireInput(f.input);
  if (f.predictions.size() > 1) throw Error(ErrorCode::kConfig, "score takes one --predictions file");
  Lexicons lexicons = config.LoadLexicons();
  Templates templates = config.LoadTemplates();
  ScoreInputs in =
      BuildScoreInputs(f.input, f.predictions.empty() ? "" : f.predictions.front(), lexicons);
  std::vector<ScoreOutcome> outcomes =
      ScoreBatch(in.requests, config.scoring, lexicons, config.workers);

  std::string out = ProvenanceLine("gvf score", config.seed, config.Hash(lexicons, templates)) + "\n";
  std::size_t failures = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const ScoreOutcome &o = outcomes[i];
    Json j;
    j["record_id"] = o.record_id;
    if (!o.breakdown) {
      ++failures;
      std::cerr << f.input << ": record '" << o.record_id << "': " << o.error->what() << '\n';
      j["error"] = o.error->what();
      out += j.dump() + "\n";
      continue;
    }
    j["fcl"] = o.breakdown->total;
    if (in.ce[i]) {
      j["ce"] = *in.ce[i];
      j["total"] = TotalLoss(*in.ce[i], *o.breakdown, config.scoring);
    }
    j["per_anchor"] = BreakdownJson(*o.breakdown);
    out += j.dump() + "\n";
  }
  Emit(f.output, out);
  log.Info("scored " + std::to_string(outcomes.size() - failures) + " records");
  return failures == 0 ? kExitOk : kExitValidation;
}

// "name=path" or a bare path (column named after the file stem).
std::pair<std::string, std::string> NamedPath(const std::string &arg) {
  auto eq = arg.find('=');
  if (eq != std::string::npos && eq > 0) return {arg.substr(0, eq), arg.substr(eq + 1)};
  return {std::filesystem::path(arg).stem().string(), arg};
}

void WarnCoverage(const Logger &log, const std::string &name, const std::vector<std::string> &missing,
                  const std::vector<std::string> &unmatched) {
  if (!missing.empty()) {
    log.Warn(name + ": " + std::to_string(missing.size()) +
             " gold record(s) without a prediction scored as incorrect");
  }
  if (!unmatched.empty()) {
    log.Warn(name + ": " + std::to_string(unmatched.size()) + " prediction(s) without gold ignored");
  }
}

int CmdEvaluate(const Flags &f, const RunConfig &config, const Logger &log) {
  RequireInput(f.input);
  if (f.predictions.empty()) throw Error(ErrorCode::kConfig, "evaluate needs --predictions");
  std::optional<MetricKind> metric = MetricKindFromName(f.metric);
  if (!metric) throw Error(ErrorCode::kConfig, "--metric must be oeq, ynq or f1");
  Lexicons lexicons = config.LoadLexicons();
  std::vector<GoldRecord> gold = LoadGold(ReadJsonl(f.input));

  std::string table;
  std::string json;
  if (*metric == MetricKind::kF1) {
    std::vector<std::pair<std::string, F1Report>> columns;
    for (const std::string &arg : f.predictions) {
      auto [name, path] = NamedPath(arg);
      RequireInput(path);
      F1Report r = EvalExistenceF1(LoadPredictions(ReadJsonl(path)), gold);
      WarnCoverage(log, name, r.missing, r.unmatched);
      columns.emplace_back(name, std::move(r));
    }
    table = RenderF1Table(columns);
    json = F1ReportJson(columns);
  } else {
    std::vector<std::pair<std::string, EvalReport>> columns;
    for (const std::string &arg : f.predictions) {
      auto [name, path] = NamedPath(arg);
      RequireInput(path);
      std::vector<Prediction> preds = LoadPredictions(ReadJsonl(path));
      EvalReport r = *metric == MetricKind::kOeq ? EvalOeq(preds, gold, lexicons)
                                                 : EvalYnq(preds, gold);
      WarnCoverage(log, name, r.missing, r.unmatched);
      columns.emplace_back(name, std::move(r));
    }
    table = RenderTable(columns);
    json = ReportJson(columns);
  }
  std::cout << table;
  if (!f.output.empty()) WriteFileAtomic(f.output, json);
  return kExitOk;
}

std::vector<double> ParseLambdas(const std::string &text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      double v = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception &) {
      throw Error(ErrorCode::kConfig, "--lambdas: bad value '" + item + "'");
    }
  }
  if (out.empty()) throw Error(ErrorCode::kConfig, "--lambdas needs at least one value");
  return out;
}

int CmdSweep(const Flags &f, const RunConfig &config, const Logger &log) {
  RequireInput(f.input);
  std::vector<double> lambdas = ParseLambdas(f.lambdas.empty() ? "0,0.5,1,2" : f.lambdas);
  if (f.predictions.size() > 1 && f.predictions.size() != lambdas.size()) {
    throw Error(ErrorCode::kConfig, "give one --predictions file, or one per lambda");
  }
  std::optional<MetricKind> metric;
  if (f.metric != "none") {
    metric = MetricKindFromName(f.metric);
    if (!metric || *metric == MetricKind::kF1) {
      throw Error(ErrorCode::kConfig, "sweep --metric must be oeq, ynq or none");
    }
  }
  Lexicons lexicons = config.LoadLexicons();
  Templates templates = config.LoadTemplates();
  std::vector<GoldRecord> gold;
  if (metric && !f.predictions.empty()) gold = LoadGold(ReadJsonl(f.input));

  std::vector<SweepInput> inputs;
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    std::string preds_path;
    if (!f.predictions.empty()) preds_path = f.predictions[f.predictions.size() == 1 ? 0 : k];
    ScoreInputs in = BuildScoreInputs(f.input, preds_path, lexicons);
    ScoringConfig sc = config.scoring;
    sc.lambda = lambdas[k];
    std::vector<ScoreOutcome> outcomes = ScoreBatch(in.requests, sc, lexicons, config.workers);
    SweepInput si;
    si.lambda = lambdas[k];
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      if (!outcomes[i].breakdown) {
        throw Error(outcomes[i].error->code(),
                    "record '" + outcomes[i].record_id + "': " + outcomes[i].error->what());
      }
      si.ce.push_back(in.ce[i].value_or(0.0));
      si.fcl.push_back(outcomes[i].breakdown->total);
    }
    if (metric && !preds_path.empty()) {
      std::vector<Prediction> preds = LoadPredictions(ReadJsonl(preds_path));
      si.metrics =
          *metric == MetricKind::kOeq ? EvalOeq(preds, gold, lexicons) : EvalYnq(preds, gold);
    }
    inputs.push_back(std::move(si));
  }
  std::string comment = std::string("gvf sweep version=") + kVersion +
                        " seed=" + std::to_string(config.seed) +
                        " config_hash=" + config.Hash(lexicons, templates);
  Emit(f.output, RenderSweepTsv(SweepLambda(inputs), comment));
  log.Info("swept " + std::to_string(lambdas.size()) + " lambda values");
  return kExitOk;
}

}  // namespace
}  // namespace gvf

int main(int argc, char **argv) {
  using namespace gvf;
  CLI::App app{"GVF toolkit: factual anchors, counter-factual augmentation, FCL scoring"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Flags f;
  app.add_option("--config", f.config, "TOML run configuration (default: $GVF_CONFIG)");
  app.add_flag("-v,--verbose", f.verbose, "Progress messages on stderr");
  app.add_flag("-q,--quiet", f.quiet, "Suppress warnings");

  auto add_common = [&](CLI::App *sub, bool needs_output) {
    sub->add_option("--input", f.input, "Input JSON Lines file")->required();
    auto *out = sub->add_option("--output", f.output, "Output path");
    if (needs_output) out->required();
    sub->add_option("--seed", f.seed, "Random seed (default 42)");
    sub->add_option("--workers", f.workers, "Worker threads (0 = one per core)");
  };
  auto add_scoring = [&](CLI::App *sub) {
    sub->add_option("--lambda", f.lambda, "Weight of the consistency loss");
    sub->add_option("--gamma", f.gammas, "Per-type weight, <type>=<w> (repeatable)");
  };

  CLI::App *validate = app.add_subcommand("validate", "Check scene or augmented records");
  validate->add_option("--input", f.input, "Input JSON Lines file")->required();

  CLI::App *augment = app.add_subcommand("augment", "Emit fact-aware and counter-factual records");
  add_common(augment, true);
  augment->add_option("--style", f.style, "Instruction style: full or bare");
  augment->add_option("--ratio", f.ratio, "Probability of a counter-factual sibling per scene");

  CLI::App *split = app.add_subcommand("split", "Stratified train/test split by vh_type");
  add_common(split, true);
  split->add_option("--fraction", f.fraction, "Train fraction (default 0.8)");

  CLI::App *score = app.add_subcommand("score", "Factual-consistency loss per record");
  add_common(score, false);
  add_scoring(score);
  score->add_option("--predictions", f.predictions, "Predictions {record_id, text, ce?}");

  CLI::App *evaluate = app.add_subcommand("evaluate", "Accuracy / F1 report tables");
  add_common(evaluate, false);
  evaluate->add_option("--predictions", f.predictions, "[name=]path, repeatable")->required();
  evaluate->add_option("--metric", f.metric, "oeq, ynq or f1");

  CLI::App *sweep = app.add_subcommand("sweep", "Mean losses and metrics across lambda values");
  add_common(sweep, false);
  add_scoring(sweep);
  sweep->add_option("--predictions", f.predictions, "One file, or one per lambda");
  sweep->add_option("--lambdas", f.lambdas, "Comma-separated values (default 0,0.5,1,2)");
  sweep->add_option("--metric", f.metric, "oeq, ynq or none");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 4;
  }

  try {
    RunConfig config = ResolveConfig(f);
    Logger log(config.verbosity);
    if (validate->parsed()) return CmdValidate(f, config);
    if (augment->parsed()) return CmdAugment(f, config, log);
    if (split->parsed()) return CmdSplit(f, config, log);
    if (score->parsed()) return CmdScore(f, config, log);
    if (evaluate->parsed()) return CmdEvaluate(f, config, log);
    if (sweep->parsed()) return CmdSweep(f, config, log);
  } catch (const DatasetError &e) {
    PrintDiagnostics(f.input, e.diagnostics());
    std::cerr << "gvf: " << e.what() << '\n';
    return ExitCodeFor(e.code());
  } catch (const Error &e) {
    std::cerr << "gvf: " << ErrorCodeName(e.code()) << ": " << e.what() << '\n';
    return ExitCodeFor(e.code());
  } catch (const std::filesystem::filesystem_error &e) {
    std::cerr << "gvf: " << e.what() << '\n';
    return 2;
  }
  return 4;
}
