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

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gvf {

// Failure classes raised by the toolkit. The CLI maps these onto exit codes.
enum class ErrorCode {
  kMalformedToken,
  kTypeMismatch,
  kMissingSubject,
  kDuplicateKey,
  kKeyMismatch,
  kInvalidScene,
  kInvalidRecord,
  kExhaustedPerturbations,
  kTypeTooSmall,
  kInvalidArgument,
  kConfig,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message);
  // For parse errors that can point at a character offset in the input.
  Error(ErrorCode code, const std::string &message, std::size_t position);

  ErrorCode code() const { return code_; }
  const std::optional<std::size_t> &position() const { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace gvf
