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

// Run configuration shared by the CLI subcommands. Values come from an
// optional TOML file and are then overridden by command-line flags.
//
//   [run]      seed, style ("full"|"bare"), counterfactual_ratio,
//              train_fraction, workers, verbosity
//   [paths]    lexicons, templates (relative to the config file)
//   [scoring]  lambda, [scoring.gamma] per type

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "gvf/augmentation.h"
#include "gvf/fcl_scoring.h"
#include "gvf/lexicons.h"
#include "gvf/templates.h"

namespace gvf {

enum class Verbosity { kQuiet, kWarn, kInfo, kDebug };

struct RunConfig {
  std::uint64_t seed = 42;
  ScoringConfig scoring;
  InstructionStyle style = InstructionStyle::kFull;
  double counterfactual_ratio = 1.0;
  double train_fraction = 0.8;
  std::size_t workers = 0;
  Verbosity verbosity = Verbosity::kWarn;
  std::optional<std::filesystem::path> lexicons_path;
  std::optional<std::filesystem::path> templates_path;

  // Throw Error(kConfig).
  static RunConfig FromToml(std::string_view toml_text, std::string_view source = "config",
                            const std::filesystem::path &base_dir = {});
  static RunConfig Load(const std::filesystem::path &path);

  Lexicons LoadLexicons() const;
  Templates LoadTemplates() const;

  // Hex digest over every setting that changes generated data or scores,
  // including the lexicon and template contents. Seed is reported separately.
  std::string Hash(const Lexicons &lexicons, const Templates &templates) const;
};

std::optional<Verbosity> VerbosityFromName(std::string_view name);

}  // namespace gvf
