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

// Dataset records exchanged as JSON Lines: structured scenes going into
// augmentation and the augmented training records coming out.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gvf/error.h"
#include "gvf/fact_model.h"

namespace gvf {

struct SceneObject {
  std::string name;  // canonical noun
  std::uint32_t count = 1;
  std::optional<std::string> color;
  std::optional<std::string> shape;
  std::optional<std::string> orientation;
  std::optional<std::string> text;
  bool operator==(const SceneObject &) const = default;
};

struct SceneRelation {
  std::string subject_a;
  std::string subject_b;
  std::variant<SizeRelation, PositionRelation> relation;
  bool operator==(const SceneRelation &) const = default;
};

struct SceneRecord {
  std::string record_id;
  std::vector<SceneObject> objects;
  std::vector<SceneRelation> relations;
  std::string question;
  std::string answer;
  VhType vh_type = VhType::kExistence;
  bool operator==(const SceneRecord &) const = default;
};

enum class TaskKind { kOriginal, kCounterfactual };

std::string_view TaskKindToken(TaskKind task);

struct AugmentedRecord {
  std::string record_id;
  std::string instruction;
  std::string expected_answer;
  std::vector<std::string> anchors;  // DSL tokens
  TaskKind task = TaskKind::kOriginal;
  std::string sibling_id;            // empty when the record has no sibling
  VhType vh_type = VhType::kExistence;
  std::string target_anchor;         // anchor id the instruction is about
  bool operator==(const AugmentedRecord &) const = default;
};

// Parsers throw Error(kInvalidRecord) describing the first problem found.
// Field-level checks only; scene semantics are checked by augmentation.
SceneRecord ParseSceneRecord(std::string_view json_line);
AugmentedRecord ParseAugmentedRecord(std::string_view json_line);

std::string ToJson(const SceneRecord &record);
std::string ToJson(const AugmentedRecord &record);

// Reads the "vh_type" field of any record line.
VhType RecordVhType(std::string_view json_line);

struct LineDiagnostic {
  std::size_t line = 0;
  std::string message;
};

// A dataset-level failure carrying one diagnostic per bad input line.
class DatasetError : public Error {
 public:
  DatasetError(ErrorCode code, std::vector<LineDiagnostic> diagnostics);
  const std::vector<LineDiagnostic> &diagnostics() const { return diagnostics_; }

 private:
  std::vector<LineDiagnostic> diagnostics_;
};

}  // namespace gvf
