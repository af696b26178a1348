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

// Line-oriented file IO shared by the dataset commands.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace gvf {

struct JsonlLine {
  std::size_t line_number = 0;  // 1-based
  std::string text;
};

// Throws Error(kIo) if the file cannot be read.
std::string ReadFile(const std::filesystem::path &path);

// Non-blank lines, skipping provenance header lines.
std::vector<JsonlLine> SplitJsonl(std::string_view contents);
std::vector<JsonlLine> ReadJsonl(const std::filesystem::path &path);

// Writes through a temporary sibling and renames it into place.
void WriteFileAtomic(const std::filesystem::path &path, std::string_view contents);

// {"_provenance":{"config_hash":...,"seed":...,"tool":...,"version":...}}
std::string ProvenanceLine(std::string_view tool, std::uint64_t seed,
                           std::string_view config_hash);
bool IsProvenanceLine(std::string_view line);

std::string HexDigest(std::uint64_t value);

}  // namespace gvf
