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

#include "gvf/augmentation.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <set>

#include "gvf/anchor_dsl.h"
#include "gvf/claim_extraction.h"
#include "gvf/error.h"
#include "gvf/random.h"
#include "parallel.h"

namespace gvf {

namespace {

[[noreturn]] void BadScene(const SceneRecord &scene, const std::string &message) {
  throw Error(ErrorCode::kInvalidScene, "scene '" + scene.record_id + "': " + message);
}

std::string Canonicalize(const SceneRecord &scene, const Lexicons &lexicons, VhType type,
                         const std::string &token) {
  std::optional<std::string> c;
  switch (type) {
    case VhType::kColor: c = lexicons.CanonicalColor(token); break;
    case VhType::kShape: c = lexicons.CanonicalShape(token); break;
    default: c = lexicons.CanonicalOrientation(token); break;
  }
  if (!c) {
    BadScene(scene, "'" + token + "' is not a known " + std::string(VhTypeConfigKey(type)));
  }
  return *c;
}

std::vector<std::string> Words(std::string_view text) {
  std::vector<std::string> words;
  std::string cur;
  for (char ch : text) {
    auto c = static_cast<unsigned char>(ch);
    if (std::isalnum(c) || ((ch == '\'' || ch == '-') && !cur.empty())) {
      cur += static_cast<char>(std::tolower(c));
    } else if (!cur.empty()) {
      words.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) words.push_back(std::move(cur));
  return words;
}

std::string Article(std::string_view display) {
  return !display.empty() && std::string_view("aeiou").find(display[0]) != std::string_view::npos
             ? "an"
             : "a";
}

std::string CountWord(std::uint32_t n, const Lexicons &lexicons) {
  return lexicons.NumberToWord(n);
}

const std::string *SubjectOf(const FactValue &value) {
  return std::visit(
      [](const auto &f) -> const std::string * {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, CountingFact> || std::is_same_v<T, OcrFact>) {
          return f.subject ? &*f.subject : nullptr;
        } else if constexpr (std::is_same_v<T, SizeFact> || std::is_same_v<T, PositionFact>) {
          return nullptr;
        } else {
          return &f.subject;
        }
      },
      value);
}

bool Mentions(const FactValue &value, const std::string &noun) {
  if (const auto *s = std::get_if<SizeFact>(&value)) {
    return s->subject_a == noun || s->subject_b == noun;
  }
  if (const auto *p = std::get_if<PositionFact>(&value)) {
    return p->subject_a == noun || p->subject_b == noun;
  }
  const std::string *subject = SubjectOf(value);
  return subject != nullptr && *subject == noun;
}

template <typename T>
T Pick(SplitMix64 &rng, const std::vector<T> &options) {
  return options[rng.UniformIndex(options.size())];
}

[[noreturn]] void Exhausted(const SceneRecord &scene, const FactualAnchor &anchor,
                            const std::string &why) {
  throw Error(ErrorCode::kExhaustedPerturbations,
              "scene '" + scene.record_id + "': cannot perturb " + anchor.anchor_id() + ": " + why);
}

std::string Upper(std::string s) {
  for (char &c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

std::optional<InstructionStyle> InstructionStyleFromName(std::string_view name) {
  if (name == "full") return InstructionStyle::kFull;
  if (name == "bare") return InstructionStyle::kNoFactTokens;
  return std::nullopt;
}

std::string_view InstructionStyleName(InstructionStyle style) {
  return style == InstructionStyle::kFull ? "full" : "bare";
}

void ValidateScene(const SceneRecord &scene, const Lexicons &lexicons) {
  if (scene.objects.empty()) BadScene(scene, "no objects to anchor");
  std::map<std::string, const SceneObject *> by_name;
  for (const SceneObject &o : scene.objects) {
    if (lexicons.CanonicalNoun(o.name) != o.name) {
      BadScene(scene, "object name '" + o.name + "' is not a canonical lexicon noun");
    }
    if (!by_name.emplace(o.name, &o).second) BadScene(scene, "duplicate object '" + o.name + "'");
    if (o.count == 0 && (o.color || o.shape || o.orientation || o.text)) {
      BadScene(scene, "absent object '" + o.name + "' cannot carry attributes");
    }
    if (o.color) Canonicalize(scene, lexicons, VhType::kColor, *o.color);
    if (o.shape) Canonicalize(scene, lexicons, VhType::kShape, *o.shape);
    if (o.orientation) Canonicalize(scene, lexicons, VhType::kOrientation, *o.orientation);
    if (o.text && NormalizeOcr(*o.text).empty()) {
      BadScene(scene, "object '" + o.name + "' has empty text");
    }
  }
  std::set<std::pair<bool, std::pair<std::string, std::string>>> pairs;
  for (const SceneRelation &r : scene.relations) {
    for (const std::string *name : {&r.subject_a, &r.subject_b}) {
      auto it = by_name.find(*name);
      if (it == by_name.end()) BadScene(scene, "relation references unknown object '" + *name + "'");
      if (it->second->count == 0) {
        BadScene(scene, "relation references absent object '" + *name + "'");
      }
    }
    if (r.subject_a == r.subject_b) BadScene(scene, "relation between '" + r.subject_a + "' and itself");
    bool is_size = std::holds_alternative<SizeRelation>(r.relation);
    auto key = std::minmax(r.subject_a, r.subject_b);
    if (!pairs.insert({is_size, {key.first, key.second}}).second) {
      BadScene(scene, "more than one " + std::string(is_size ? "size" : "position") +
                          " relation between '" + r.subject_a + "' and '" + r.subject_b + "'");
    }
  }
}

std::size_t QuestionedObject(const SceneRecord &scene, const Lexicons &lexicons) {
  std::vector<std::string> words = Words(scene.question);
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::size_t max_len = std::min(lexicons.max_phrase_words(), words.size() - i);
    for (std::size_t len = max_len; len >= 1; --len) {
      std::string phrase = words[i];
      for (std::size_t k = i + 1; k < i + len; ++k) phrase += " " + words[k];
      const PhraseEntry *e = lexicons.FindPhrase(phrase);
      if (e == nullptr || e->category != LexiconCategory::kNoun) continue;
      for (std::size_t o = 0; o < scene.objects.size(); ++o) {
        if (scene.objects[o].name == e->canonical) return o;
      }
    }
  }
  return 0;
}

AnchorSet DeriveAnchors(const SceneRecord &scene, const Lexicons &lexicons) {
  ValidateScene(scene, lexicons);
  const SceneObject &questioned = scene.objects[QuestionedObject(scene, lexicons)];
  std::vector<FactualAnchor> anchors;
  anchors.emplace_back(CountingFact{questioned.count, std::nullopt});
  for (const SceneObject &o : scene.objects) {
    anchors.emplace_back(ExistenceFact{o.name, o.count > 0});
    if (o.color) {
      anchors.emplace_back(ColorFact{o.name, Canonicalize(scene, lexicons, VhType::kColor, *o.color)});
    }
    if (o.shape) {
      anchors.emplace_back(ShapeFact{o.name, Canonicalize(scene, lexicons, VhType::kShape, *o.shape)});
    }
    if (o.orientation) {
      anchors.emplace_back(OrientationFact{
          o.name, Canonicalize(scene, lexicons, VhType::kOrientation, *o.orientation)});
    }
    if (o.text) {
      std::optional<std::string> subject;
      if (&o != &questioned) subject = o.name;
      anchors.emplace_back(OcrFact{NormalizeOcr(*o.text), subject});
    }
  }
  for (const SceneRelation &r : scene.relations) {
    if (const auto *s = std::get_if<SizeRelation>(&r.relation)) {
      anchors.emplace_back(SizeFact{r.subject_a, r.subject_b, *s});
    } else {
      anchors.emplace_back(
          PositionFact{r.subject_a, r.subject_b, std::get<PositionRelation>(r.relation)});
    }
  }
  return AnchorSet(std::move(anchors));
}

const FactualAnchor &TargetAnchor(const SceneRecord &scene, const AnchorSet &anchors,
                                  const Lexicons &lexicons) {
  const std::string &questioned = scene.objects[QuestionedObject(scene, lexicons)].name;
  const FactualAnchor *first = nullptr;
  for (const FactualAnchor &a : anchors) {
    if (a.vh_type() != scene.vh_type) continue;
    if (first == nullptr) first = &a;
    if (scene.vh_type == VhType::kOcr) {
      // The record-level OCR anchor belongs to the questioned object.
      if (SubjectOf(a.value()) == nullptr) return a;
    } else if (Mentions(a.value(), questioned)) {
      return a;
    }
  }
  if (first == nullptr) {
    BadScene(scene, "no " + std::string(VhTypeDisplayName(scene.vh_type)) +
                        " ground truth for the question");
  }
  return *first;
}

Counterfactual GenerateCounterfactual(const SceneRecord &scene, const AnchorSet &anchors,
                                      std::uint64_t seed, const Lexicons &lexicons,
                                      const Templates &templates) {
  SplitMix64 rng = RecordRng(seed, scene.record_id, "counterfactual");
  std::vector<const FactualAnchor *> candidates;
  for (const FactualAnchor &a : anchors) {
    if (a.vh_type() == scene.vh_type) candidates.push_back(&a);
  }
  if (candidates.empty()) {
    for (const FactualAnchor &a : anchors) candidates.push_back(&a);
  }
  const FactualAnchor &target = *Pick(rng, candidates);
  const SceneObject &questioned = scene.objects[QuestionedObject(scene, lexicons)];
  const CounterfactualWording &wording = templates.wording(target.vh_type());

  Slots slots;
  auto set_subject = [&](const std::string &noun) {
    std::string display = DisplayToken(noun);
    slots["subject"] = display;
    slots["subject_plural"] = lexicons.Plural(noun);
    slots["article"] = Article(display);
  };
  std::vector<FactualAnchor> out_anchors = anchors.anchors();
  std::string target_id = target.anchor_id();
  std::string question_pattern = wording.question;
  std::string answer_pattern = wording.answer;
  FactValue perturbed = target.value();

  switch (target.vh_type()) {
    case VhType::kCounting: {
      std::uint32_t truth = std::get<CountingFact>(target.value()).count;
      std::vector<std::uint32_t> options;
      for (std::int64_t d : {-2, -1, 1, 2}) {
        std::int64_t v = static_cast<std::int64_t>(truth) + d;
        if (v >= 0) options.push_back(static_cast<std::uint32_t>(v));
      }
      std::uint32_t value = Pick(rng, options);
      perturbed = CountingFact{value, std::nullopt};
      set_subject(questioned.name);
      slots["count"] = std::to_string(value);
      slots["count_word"] = CountWord(value, lexicons);
      slots["true_count"] = std::to_string(truth);
      slots["true_count_word"] = CountWord(truth, lexicons);
      if (value == 1) question_pattern = wording.question_one;
      if (truth == 1) answer_pattern = wording.answer_one;
      if (truth == 0) answer_pattern = wording.answer_zero;
      break;
    }
    case VhType::kExistence: {
      const auto &fact = std::get<ExistenceFact>(target.value());
      std::string subject = fact.subject;
      if (fact.present) {
        std::vector<std::string> options;
        for (const std::string &d : templates.distractors()) {
          bool in_scene = std::any_of(scene.objects.begin(), scene.objects.end(),
                                      [&](const SceneObject &o) { return o.name == d; });
          if (!in_scene) options.push_back(d);
        }
        if (options.empty()) Exhausted(scene, target, "every distractor noun is in the scene");
        subject = Pick(rng, options);
        FactualAnchor absent(ExistenceFact{subject, false});
        target_id = absent.anchor_id();
        out_anchors.push_back(std::move(absent));
      }
      perturbed = ExistenceFact{subject, true};
      set_subject(subject);
      break;
    }
    case VhType::kColor:
    case VhType::kShape:
    case VhType::kOrientation: {
      VhType type = target.vh_type();
      const std::string &subject = *SubjectOf(target.value());
      std::string truth = std::visit(
          [](const auto &f) -> std::string {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, ColorFact>) return f.color;
            else if constexpr (std::is_same_v<T, ShapeFact>) return f.shape;
            else if constexpr (std::is_same_v<T, OrientationFact>) return f.orientation;
            else return {};
          },
          target.value());
      std::vector<std::string> options;
      for (const std::string &t : lexicons.AttributeTokens(type)) {
        if (t != truth) options.push_back(t);
      }
      if (options.empty()) Exhausted(scene, target, "the lexicon has no other token");
      std::string value = Pick(rng, options);
      if (type == VhType::kColor) perturbed = ColorFact{subject, value};
      if (type == VhType::kShape) perturbed = ShapeFact{subject, value};
      if (type == VhType::kOrientation) perturbed = OrientationFact{subject, value};
      set_subject(subject);
      slots["value"] = DisplayToken(value);
      slots["true_value"] = DisplayToken(truth);
      break;
    }
    case VhType::kOcr: {
      const auto &fact = std::get<OcrFact>(target.value());
      std::vector<std::string> words;
      for (std::size_t pos = 0; pos <= fact.text.size();) {
        std::size_t sp = std::min(fact.text.find(' ', pos), fact.text.size());
        words.push_back(fact.text.substr(pos, sp - pos));
        pos = sp + 1;
      }
      std::size_t slot = rng.UniformIndex(words.size());
      std::vector<std::string> options;
      for (const std::string &s : templates.ocr_substitutes()) {
        if (s != words[slot]) options.push_back(s);
      }
      if (options.empty()) Exhausted(scene, target, "no OCR substitute differs from the text");
      words[slot] = Pick(rng, options);
      std::string text = words[0];
      for (std::size_t i = 1; i < words.size(); ++i) text += " " + words[i];
      perturbed = OcrFact{text, fact.subject};
      set_subject(fact.subject ? *fact.subject : questioned.name);
      slots["value"] = Upper(text);
      slots["true_value"] = Upper(fact.text);
      break;
    }
    case VhType::kSize: {
      const auto &fact = std::get<SizeFact>(target.value());
      SizeRelation value = Inverse(fact.relation);
      if (value == fact.relation) {
        std::vector<SizeRelation> options;
        for (SizeRelation r : kAllSizeRelations) {
          if (r != fact.relation) options.push_back(r);
        }
        value = Pick(rng, options);
      }
      perturbed = SizeFact{fact.subject_a, fact.subject_b, value};
      slots["subject_a"] = DisplayToken(fact.subject_a);
      slots["subject_b"] = DisplayToken(fact.subject_b);
      slots["relation_phrase"] = templates.RelationPhrase(RelationToken(value));
      slots["true_relation_phrase"] = templates.RelationPhrase(RelationToken(fact.relation));
      break;
    }
    case VhType::kPosition: {
      const auto &fact = std::get<PositionFact>(target.value());
      std::optional<PositionRelation> value = Inverse(fact.relation);
      if (!value) {
        std::vector<PositionRelation> options;
        for (PositionRelation r : kAllPositionRelations) {
          if (r != fact.relation) options.push_back(r);
        }
        value = Pick(rng, options);
      }
      perturbed = PositionFact{fact.subject_a, fact.subject_b, *value};
      slots["subject_a"] = DisplayToken(fact.subject_a);
      slots["subject_b"] = DisplayToken(fact.subject_b);
      slots["relation_phrase"] = templates.RelationPhrase(RelationToken(*value));
      slots["true_relation_phrase"] = templates.RelationPhrase(RelationToken(fact.relation));
      break;
    }
  }

  std::string prompt = Templates::Render(question_pattern, slots);
  std::string answer = Templates::Render(answer_pattern, slots);
  std::string check = SerializeCheck(perturbed);
  return Counterfactual{std::move(prompt), std::move(answer),  std::move(target_id),
                        std::move(perturbed), std::move(check), AnchorSet(std::move(out_anchors))};
}

std::string FormatInstruction(const SceneRecord &scene, const AnchorSet &anchors, TaskKind mode,
                              const Counterfactual *cf, InstructionStyle style,
                              const Templates &templates, const Lexicons &lexicons) {
  if ((mode == TaskKind::kCounterfactual) != (cf != nullptr)) {
    throw Error(ErrorCode::kInvalidArgument,
                "a counter-factual is required exactly for COUNTERFACTUAL instructions");
  }
  std::string question;
  std::string token;
  VhType type = scene.vh_type;
  if (cf != nullptr) {
    question = cf->prompt;
    token = cf->check_token;
    type = TypeOf(cf->perturbed);
  } else {
    question = scene.question;
    const FactualAnchor &target = TargetAnchor(scene, anchors, lexicons);
    std::optional<std::string> subject;
    switch (type) {
      case VhType::kExistence:
      case VhType::kColor:
      case VhType::kShape:
      case VhType::kOrientation:
        subject = *SubjectOf(target.value());
        break;
      default:
        break;
    }
    token = SerializeQuery(type, subject);
  }
  std::string out = style == InstructionStyle::kFull ? token + " (" + question + ")" : question;
  if (type == VhType::kPosition && !templates.position_suffix().empty()) {
    out += " " + templates.position_suffix();
  }
  return out;
}

std::string OriginalAnswer(const SceneRecord &scene, const AnchorSet &anchors,
                           const Templates &templates, const Lexicons &lexicons) {
  if (scene.vh_type != VhType::kCounting || !templates.rewrite_counting()) return scene.answer;
  const auto &count = std::get<CountingFact>(TargetAnchor(scene, anchors, lexicons).value());
  const std::string &noun = scene.objects[QuestionedObject(scene, lexicons)].name;
  Slots slots{{"count", std::to_string(count.count)},
              {"count_word", CountWord(count.count, lexicons)},
              {"subject", DisplayToken(noun)},
              {"subject_plural", lexicons.Plural(noun)},
              {"article", Article(DisplayToken(noun))}};
  const std::string &pattern = count.count == 0   ? templates.counting_answer_zero()
                               : count.count == 1 ? templates.counting_answer_one()
                                                  : templates.counting_answer();
  return Templates::Render(pattern, slots);
}

std::vector<AugmentedRecord> AugmentScene(const SceneRecord &scene, const AugmentConfig &config,
                                          const Lexicons &lexicons, const Templates &templates) {
  AnchorSet anchors = DeriveAnchors(scene, lexicons);
  const FactualAnchor &target = TargetAnchor(scene, anchors, lexicons);

  std::vector<AugmentedRecord> out;
  AugmentedRecord original;
  original.record_id = scene.record_id;
  original.instruction =
      FormatInstruction(scene, anchors, TaskKind::kOriginal, nullptr, config.style, templates,
                        lexicons);
  original.expected_answer = OriginalAnswer(scene, anchors, templates, lexicons);
  original.anchors = Serialize(anchors);
  original.task = TaskKind::kOriginal;
  original.vh_type = scene.vh_type;
  original.target_anchor = target.anchor_id();
  out.push_back(std::move(original));

  SplitMix64 coin = RecordRng(config.seed, scene.record_id, "ratio");
  if (!coin.Bernoulli(config.counterfactual_ratio)) return out;

  Counterfactual cf = GenerateCounterfactual(scene, anchors, config.seed, lexicons, templates);
  AugmentedRecord record;
  record.record_id = scene.record_id + "#cf";
  record.instruction = FormatInstruction(scene, anchors, TaskKind::kCounterfactual, &cf,
                                         config.style, templates, lexicons);
  record.expected_answer = cf.expected_answer;
  record.anchors = Serialize(cf.anchors);
  record.task = TaskKind::kCounterfactual;
  record.sibling_id = scene.record_id;
  record.vh_type = scene.vh_type;
  record.target_anchor = cf.target_anchor;
  out.front().sibling_id = record.record_id;
  out.push_back(std::move(record));
  return out;
}

AugmentResult AugmentLines(const std::vector<JsonlLine> &lines, const AugmentConfig &config,
                           const Lexicons &lexicons, const Templates &templates) {
  if (!(config.counterfactual_ratio >= 0.0 && config.counterfactual_ratio <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "counter-factual ratio must be within [0, 1]");
  }
  templates.CheckAgainst(lexicons);

  struct Slot {
    std::vector<AugmentedRecord> records;
    std::optional<std::string> error;
  };
  std::vector<Slot> slots(lines.size());
  std::vector<std::optional<SceneRecord>> scenes(lines.size());
  std::vector<LineDiagnostic> diagnostics;
  std::set<std::string> ids;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      scenes[i] = ParseSceneRecord(lines[i].text);
      if (!ids.insert(scenes[i]->record_id).second) {
        diagnostics.push_back({lines[i].line_number,
                               "duplicate record_id '" + scenes[i]->record_id + "'"});
        scenes[i].reset();
      }
    } catch (const Error &e) {
      diagnostics.push_back({lines[i].line_number, e.what()});
    }
  }
  internal::ParallelFor(lines.size(), config.workers, [&](std::size_t i) {
    if (!scenes[i]) return;
    try {
      slots[i].records = AugmentScene(*scenes[i], config, lexicons, templates);
    } catch (const Error &e) {
      slots[i].error = e.what();
    }
  });
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (slots[i].error) diagnostics.push_back({lines[i].line_number, *slots[i].error});
  }
  if (!diagnostics.empty()) {
    std::stable_sort(diagnostics.begin(), diagnostics.end(),
                     [](const LineDiagnostic &a, const LineDiagnostic &b) { return a.line < b.line; });
    throw DatasetError(ErrorCode::kInvalidRecord, std::move(diagnostics));
  }

  AugmentResult result;
  result.summary.records_in = lines.size();
  for (const Slot &slot : slots) {
    for (const AugmentedRecord &r : slot.records) {
      result.lines.push_back(ToJson(r));
      auto &bucket = r.task == TaskKind::kOriginal ? result.summary.originals
                                                   : result.summary.counterfactuals;
      ++bucket[Index(r.vh_type)];
    }
  }
  result.summary.records_out = result.lines.size();
  return result;
}

AugmentSummary AugmentDataset(const std::filesystem::path &input,
                              const std::filesystem::path &output, const AugmentConfig &config,
                              std::string_view config_hash, const Lexicons &lexicons,
                              const Templates &templates) {
  AugmentResult result = AugmentLines(ReadJsonl(input), config, lexicons, templates);
  std::string contents = ProvenanceLine("gvf augment", config.seed, config_hash) + "\n";
  for (const std::string &line : result.lines) contents += line + "\n";
  WriteFileAtomic(output, contents);
  return result.summary;
}

SplitResult SplitLines(const std::vector<JsonlLine> &lines, double train_fraction,
                       std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "train fraction must be strictly between 0 and 1");
  }
  std::array<std::vector<std::size_t>, kNumVhTypes> by_type;
  std::vector<LineDiagnostic> diagnostics;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      by_type[Index(RecordVhType(lines[i].text))].push_back(i);
    } catch (const Error &e) {
      diagnostics.push_back({lines[i].line_number, e.what()});
    }
  }
  if (!diagnostics.empty()) throw DatasetError(ErrorCode::kInvalidRecord, std::move(diagnostics));

  std::vector<bool> in_train(lines.size(), false);
  SplitResult result;
  for (VhType type : kAllVhTypes) {
    std::vector<std::size_t> &idx = by_type[Index(type)];
    std::size_t n = idx.size();
    if (n == 0) continue;
    if (n < 2) {
      throw Error(ErrorCode::kTypeTooSmall, std::string(VhTypeDisplayName(type)) +
                                                " has a single record; cannot split");
    }
    auto n_train = static_cast<std::size_t>(std::llround(static_cast<double>(n) * train_fraction));
    n_train = std::clamp<std::size_t>(n_train, 1, n - 1);
    SplitMix64 rng = RecordRng(seed, VhTypeToken(type), "split");
    for (std::size_t i = n - 1; i > 0; --i) std::swap(idx[i], idx[rng.UniformIndex(i + 1)]);
    for (std::size_t k = 0; k < n_train; ++k) in_train[idx[k]] = true;
    result.train_per_type[Index(type)] = n_train;
    result.test_per_type[Index(type)] = n - n_train;
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    (in_train[i] ? result.train : result.test).push_back(lines[i]);
  }
  return result;
}

SplitResult SplitDataset(const std::filesystem::path &input,
                         const std::filesystem::path &train_output,
                         const std::filesystem::path &test_output, double train_fraction,
                         std::uint64_t seed, std::string_view config_hash) {
  SplitResult result = SplitLines(ReadJsonl(input), train_fraction, seed);
  std::string header = ProvenanceLine("gvf split", seed, config_hash) + "\n";
  std::string train = header;
  for (const JsonlLine &l : result.train) train += l.text + "\n";
  std::string test = header;
  for (const JsonlLine &l : result.test) test += l.text + "\n";
  WriteFileAtomic(train_output, train);
  WriteFileAtomic(test_output, test);
  return result;
}

}  // namespace gvf
