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

#include "gvf/jsonl.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gvf/error.h"
#include "gvf/version.h"

namespace gvf {

std::string ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  return ss.str();
}

std::vector<JsonlLine> SplitJsonl(std::string_view contents) {
  std::vector<JsonlLine> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos < contents.size()) {
    std::size_t nl = contents.find('\n', pos);
    if (nl == std::string_view::npos) nl = contents.size();
    std::string_view line = contents.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++number;
    pos = nl + 1;
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    if (IsProvenanceLine(line)) continue;
    lines.push_back({number, std::string(line)});
  }
  return lines;
}

std::vector<JsonlLine> ReadJsonl(const std::filesystem::path &path) {
  return SplitJsonl(ReadFile(path));
}

void WriteFileAtomic(const std::filesystem::path &path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw Error(ErrorCode::kIo, "short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::kIo, "cannot replace " + path.string());
  }
}

std::string ProvenanceLine(std::string_view tool, std::uint64_t seed,
                           std::string_view config_hash) {
  nlohmann::json j;
  j["_provenance"] = {{"tool", tool}, {"version", kVersion}, {"seed", seed},
                      {"config_hash", config_hash}};
  return j.dump();
}

bool IsProvenanceLine(std::string_view line) {
  return line.substr(0, 16) == "{\"_provenance\":{";
}

std::string HexDigest(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

}  // namespace gvf
