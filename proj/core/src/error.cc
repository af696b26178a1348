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

#include "gvf/error.h"

namespace gvf {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedToken: return "MalformedToken";
    case ErrorCode::kTypeMismatch: return "TypeMismatch";
    case ErrorCode::kMissingSubject: return "MissingSubject";
    case ErrorCode::kDuplicateKey: return "DuplicateKey";
    case ErrorCode::kKeyMismatch: return "KeyMismatch";
    case ErrorCode::kInvalidScene: return "InvalidScene";
    case ErrorCode::kInvalidRecord: return "InvalidRecord";
    case ErrorCode::kExhaustedPerturbations: return "ExhaustedPerturbations";
    case ErrorCode::kTypeTooSmall: return "TypeTooSmall";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kConfig: return "ConfigError";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

Error::Error(ErrorCode code, const std::string &message, std::size_t position)
    : std::runtime_error(std::string(ErrorCodeName(code)) + " at " +
                         std::to_string(position) + ": " + message),
      code_(code),
      position_(position) {}

}  // namespace gvf
