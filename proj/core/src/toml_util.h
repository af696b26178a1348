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

// Thin helpers over toml++ shared by the configuration loaders.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <toml.hpp>

#include "gvf/error.h"

namespace gvf::internal {

inline toml::table ParseToml(std::string_view text, std::string_view source) {
  try {
    return toml::parse(text, source);
  } catch (const toml::parse_error &e) {
    const auto &where = e.source().begin;
    throw Error(ErrorCode::kConfig, std::string(source) + ":" + std::to_string(where.line) +
                                        ":" + std::to_string(where.column) + ": " +
                                        std::string(e.description()));
  }
}

inline const toml::table *RequireTable(const toml::table &root, std::string_view key,
                                       std::string_view source) {
  const toml::table *t = root[key].as_table();
  if (t == nullptr) {
    throw Error(ErrorCode::kConfig,
                std::string(source) + ": missing table [" + std::string(key) + "]");
  }
  return t;
}

inline std::vector<std::string> RequireStringArray(const toml::table &table, std::string_view key,
                                                   const std::string &context,
                                                   std::string_view source) {
  const toml::array *arr = table[key].as_array();
  if (arr == nullptr) {
    throw Error(ErrorCode::kConfig, std::string(source) + ": [" + context + "] needs array '" +
                                        std::string(key) + "'");
  }
  std::vector<std::string> out;
  for (const toml::node &n : *arr) {
    auto s = n.value<std::string>();
    if (!s) {
      throw Error(ErrorCode::kConfig, std::string(source) + ": [" + context + "]." +
                                          std::string(key) + " must contain strings");
    }
    out.push_back(*s);
  }
  return out;
}

}  // namespace gvf::internal
