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

#include "gvf/records.h"

#include <json.hpp>

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

std::string RequireString(const Json &j, const char *key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) {
    Invalid(std::string("field '") + key + "' must be a string");
  }
  return it->get<std::string>();
}

std::optional<std::string> OptionalString(const Json &j, const char *key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) Invalid(std::string("field '") + key + "' must be a string");
  return it->get<std::string>();
}

const Json &RequireArray(const Json &j, const char *key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_array()) {
    Invalid(std::string("field '") + key + "' must be an array");
  }
  return *it;
}

VhType RequireVhType(const Json &j) {
  std::string token = RequireString(j, "vh_type");
  std::optional<VhType> type = VhTypeFromToken(token);
  if (!type) Invalid("unknown vh_type '" + token + "'");
  return *type;
}

SceneObject ParseObjectEntry(const Json &o) {
  if (!o.is_object()) Invalid("objects[] entries must be objects");
  SceneObject obj;
  obj.name = RequireString(o, "name");
  auto count = o.find("count");
  if (count != o.end()) {
    if (!count->is_number_unsigned()) Invalid("object '" + obj.name + "' count must be >= 0");
    std::uint64_t n = count->get<std::uint64_t>();
    if (n > 1'000'000) Invalid("object '" + obj.name + "' count is implausibly large");
    obj.count = static_cast<std::uint32_t>(n);
  }
  obj.color = OptionalString(o, "color");
  obj.shape = OptionalString(o, "shape");
  obj.orientation = OptionalString(o, "orientation");
  obj.text = OptionalString(o, "text");
  return obj;
}

SceneRelation ParseRelationEntry(const Json &r) {
  if (!r.is_object()) Invalid("relations[] entries must be objects");
  SceneRelation rel;
  rel.subject_a = RequireString(r, "subject_a");
  rel.subject_b = RequireString(r, "subject_b");
  std::string kind = RequireString(r, "kind");
  std::string token = RequireString(r, "relation");
  if (kind == "SIZE") {
    auto s = SizeRelationFromToken(token);
    if (!s) Invalid("unknown SIZE relation '" + token + "'");
    rel.relation = *s;
  } else if (kind == "POSITION") {
    auto p = PositionRelationFromToken(token);
    if (!p) Invalid("unknown POSITION relation '" + token + "'");
    rel.relation = *p;
  } else {
    Invalid("relation kind must be SIZE or POSITION, got '" + kind + "'");
  }
  return rel;
}

}  // namespace

std::string_view TaskKindToken(TaskKind task) {
  return task == TaskKind::kOriginal ? "ORIGINAL" : "COUNTERFACTUAL";
}

SceneRecord ParseSceneRecord(std::string_view json_line) {
  Json j = ParseObject(json_line);
  SceneRecord rec;
  rec.record_id = RequireString(j, "record_id");
  if (rec.record_id.empty()) Invalid("record_id must not be empty");
  for (const Json &o : RequireArray(j, "objects")) rec.objects.push_back(ParseObjectEntry(o));
  if (j.contains("relations")) {
    for (const Json &r : RequireArray(j, "relations")) {
      rec.relations.push_back(ParseRelationEntry(r));
    }
  }
  rec.question = RequireString(j, "question");
  rec.answer = RequireString(j, "answer");
  rec.vh_type = RequireVhType(j);
  return rec;
}

AugmentedRecord ParseAugmentedRecord(std::string_view json_line) {
  Json j = ParseObject(json_line);
  AugmentedRecord rec;
  rec.record_id = RequireString(j, "record_id");
  rec.instruction = RequireString(j, "instruction");
  rec.expected_answer = RequireString(j, "expected_answer");
  for (const Json &a : RequireArray(j, "anchors")) {
    if (!a.is_string()) Invalid("anchors[] entries must be DSL token strings");
    rec.anchors.push_back(a.get<std::string>());
  }
  std::string task = RequireString(j, "task");
  if (task == "ORIGINAL") {
    rec.task = TaskKind::kOriginal;
  } else if (task == "COUNTERFACTUAL") {
    rec.task = TaskKind::kCounterfactual;
  } else {
    Invalid("task must be ORIGINAL or COUNTERFACTUAL, got '" + task + "'");
  }
  rec.sibling_id = OptionalString(j, "sibling_id").value_or("");
  rec.vh_type = RequireVhType(j);
  rec.target_anchor = RequireString(j, "target_anchor");
  return rec;
}

std::string ToJson(const SceneRecord &record) {
  Json j;
  j["record_id"] = record.record_id;
  Json objects = Json::array();
  for (const SceneObject &o : record.objects) {
    Json e;
    e["name"] = o.name;
    e["count"] = o.count;
    if (o.color) e["color"] = *o.color;
    if (o.shape) e["shape"] = *o.shape;
    if (o.orientation) e["orientation"] = *o.orientation;
    if (o.text) e["text"] = *o.text;
    objects.push_back(std::move(e));
  }
  j["objects"] = std::move(objects);
  Json relations = Json::array();
  for (const SceneRelation &r : record.relations) {
    Json e;
    e["subject_a"] = r.subject_a;
    e["subject_b"] = r.subject_b;
    if (const auto *s = std::get_if<SizeRelation>(&r.relation)) {
      e["kind"] = "SIZE";
      e["relation"] = RelationToken(*s);
    } else {
      e["kind"] = "POSITION";
      e["relation"] = RelationToken(std::get<PositionRelation>(r.relation));
    }
    relations.push_back(std::move(e));
  }
  j["relations"] = std::move(relations);
  j["question"] = record.question;
  j["answer"] = record.answer;
  j["vh_type"] = VhTypeToken(record.vh_type);
  return j.dump();
}

std::string ToJson(const AugmentedRecord &record) {
  Json j;
  j["record_id"] = record.record_id;
  j["instruction"] = record.instruction;
  j["expected_answer"] = record.expected_answer;
  j["anchors"] = record.anchors;
  j["task"] = TaskKindToken(record.task);
  j["sibling_id"] = record.sibling_id;
  j["vh_type"] = VhTypeToken(record.vh_type);
  j["target_anchor"] = record.target_anchor;
  return j.dump();
}

VhType RecordVhType(std::string_view json_line) { return RequireVhType(ParseObject(json_line)); }

DatasetError::DatasetError(ErrorCode code, std::vector<LineDiagnostic> diagnostics)
    : Error(code, std::to_string(diagnostics.size()) + " bad input line(s)" +
                      (diagnostics.empty() ? std::string()
                                           : "; first at line " +
                                                 std::to_string(diagnostics.front().line) +
                                                 ": " + diagnostics.front().message)),
      diagnostics_(std::move(diagnostics)) {}

}  // namespace gvf
