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

#include "gvf/config.h"

#include <cstdio>

#include "gvf/error.h"
#include "gvf/jsonl.h"
#include "gvf/random.h"
#include "toml_util.h"

namespace gvf {

namespace {

[[noreturn]] void Bad(std::string_view source, const std::string &message) {
  throw Error(ErrorCode::kConfig, std::string(source) + ": " + message);
}

double Number(const toml::node &node, std::string_view source, const std::string &key) {
  std::optional<double> v = node.value<double>();
  if (!v) Bad(source, key + " must be a number");
  return *v;
}

std::string String(const toml::node &node, std::string_view source, const std::string &key) {
  std::optional<std::string> v = node.value<std::string>();
  if (!v) Bad(source, key + " must be a string");
  return *v;
}

void MixDouble(std::uint64_t &h, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g;", v);
  h = Fnv1a64(buf, h);
}

}  // namespace

std::optional<Verbosity> VerbosityFromName(std::string_view name) {
  if (name == "quiet") return Verbosity::kQuiet;
  if (name == "warn") return Verbosity::kWarn;
  if (name == "info") return Verbosity::kInfo;
  if (name == "debug") return Verbosity::kDebug;
  return std::nullopt;
}

RunConfig RunConfig::FromToml(std::string_view toml_text, std::string_view source,
                              const std::filesystem::path &base_dir) {
  toml::table root = internal::ParseToml(toml_text, source);
  RunConfig config;
  config.scoring = ScoringConfig::FromToml(toml_text, source);
  for (const auto &[key, node] : root) {
    if (key != "run" && key != "paths" && key != "scoring") {
      Bad(source, "unknown table [" + std::string(key.str()) + "]");
    }
  }
  if (const toml::table *run = root["run"].as_table()) {
    for (const auto &[k, node] : *run) {
      std::string key(k.str());
      if (key == "seed") {
        std::optional<std::int64_t> v = node.value<std::int64_t>();
        if (!v || *v < 0) Bad(source, "run.seed must be a non-negative integer");
        config.seed = static_cast<std::uint64_t>(*v);
      } else if (key == "style") {
        std::optional<InstructionStyle> s = InstructionStyleFromName(String(node, source, "run.style"));
        if (!s) Bad(source, "run.style must be \"full\" or \"bare\"");
        config.style = *s;
      } else if (key == "counterfactual_ratio") {
        config.counterfactual_ratio = Number(node, source, "run.counterfactual_ratio");
        if (!(config.counterfactual_ratio >= 0.0 && config.counterfactual_ratio <= 1.0)) {
          Bad(source, "run.counterfactual_ratio must be within [0, 1]");
        }
      } else if (key == "train_fraction") {
        config.train_fraction = Number(node, source, "run.train_fraction");
        if (!(config.train_fraction > 0.0 && config.train_fraction < 1.0)) {
          Bad(source, "run.train_fraction must be strictly between 0 and 1");
        }
      } else if (key == "workers") {
        std::optional<std::int64_t> v = node.value<std::int64_t>();
        if (!v || *v < 0) Bad(source, "run.workers must be a non-negative integer");
        config.workers = static_cast<std::size_t>(*v);
      } else if (key == "verbosity") {
        std::optional<Verbosity> v = VerbosityFromName(String(node, source, "run.verbosity"));
        if (!v) Bad(source, "run.verbosity must be quiet, warn, info or debug");
        config.verbosity = *v;
      } else {
        Bad(source, "unknown key run." + key);
      }
    }
  }
  if (const toml::table *paths = root["paths"].as_table()) {
    for (const auto &[k, node] : *paths) {
      std::string key(k.str());
      std::filesystem::path p = String(node, source, "paths." + key);
      if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
      if (key == "lexicons") {
        config.lexicons_path = p;
      } else if (key == "templates") {
        config.templates_path = p;
      } else {
        Bad(source, "unknown key paths." + key);
      }
    }
  }
  return config;
}

RunConfig RunConfig::Load(const std::filesystem::path &path) {
  std::string text;
  try {
    text = ReadFile(path);
  } catch (const Error &e) {
    throw Error(ErrorCode::kConfig, e.what());
  }
  return FromToml(text, path.string(), path.parent_path());
}

Lexicons RunConfig::LoadLexicons() const {
  return lexicons_path ? Lexicons::LoadFile(*lexicons_path) : Lexicons::Default();
}

Templates RunConfig::LoadTemplates() const {
  return templates_path ? Templates::LoadFile(*templates_path) : Templates::Default();
}

std::string RunConfig::Hash(const Lexicons &lexicons, const Templates &templates) const {
  std::uint64_t h = Fnv1a64("gvf-config-v1;");
  h = Fnv1a64(InstructionStyleName(style), h);
  MixDouble(h, counterfactual_ratio);
  MixDouble(h, train_fraction);
  MixDouble(h, scoring.lambda);
  for (double g : scoring.gamma) MixDouble(h, g);
  h = Fnv1a64(HexDigest(lexicons.fingerprint()), h);
  h = Fnv1a64(HexDigest(templates.fingerprint()), h);
  return HexDigest(h);
}

}  // namespace gvf
