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

#include "fixtures.h"

#include <algorithm>
#include <optional>
#include <set>

#include <json.hpp>

#include "gvf/anchor_dsl.h"
#include "gvf/augmentation.h"
#include "gvf/claim_extraction.h"
#include "gvf/lexicons.h"
#include "gvf/random.h"

namespace gvf::fixtures {

namespace {

const std::vector<std::string> kObjects = {
    "apple", "ball", "dog", "cat", "cup", "book", "car", "chair", "bird", "vase",
    "box", "bottle", "clock", "hat", "kite", "lamp", "mug", "pen", "plate", "shoe",
    "umbrella", "toy", "bowl", "bag", "horse", "duck", "lemon", "candle"};
const std::vector<std::string> kTextObjects = {"sign", "book", "box", "bottle", "mug", "shirt",
                                               "bag"};
const std::vector<std::string> kTexts = {
    "STOP", "EXIT", "OPEN 24 HOURS", "FRESH BREAD", "PARKING", "MAIN STREET", "NO ENTRY",
    "SALE", "COFFEE", "WELCOME HOME", "ROUTE 66", "SLOW", "BUS STOP", "ORGANIC MILK"};

template <typename T>
const T &Pick(SplitMix64 &rng, const std::vector<T> &v) {
  return v[rng.UniformIndex(v.size())];
}

std::string Display(const std::string &noun) { return DisplayToken(noun); }

std::string Plural(const std::string &noun) { return Lexicons::Default().Plural(noun); }

std::string Article(const std::string &word) {
  return std::string("aeiou").find(word[0]) != std::string::npos ? "an" : "a";
}

// Distinct object names, none of them in `taken`.
std::string FreshNoun(SplitMix64 &rng, const std::vector<std::string> &pool,
                      const std::vector<SceneObject> &taken) {
  for (;;) {
    const std::string &n = Pick(rng, pool);
    bool used = std::any_of(taken.begin(), taken.end(),
                            [&](const SceneObject &o) { return o.name == n; });
    if (!used) return n;
  }
}

void AddExtras(SplitMix64 &rng, SceneRecord &scene, std::size_t max_extra) {
  const Lexicons &lex = Lexicons::Default();
  std::size_t extra = rng.UniformIndex(max_extra + 1);
  for (std::size_t i = 0; i < extra; ++i) {
    SceneObject o;
    o.name = FreshNoun(rng, kObjects, scene.objects);
    o.count = static_cast<std::uint32_t>(1 + rng.UniformIndex(3));
    if (rng.Bernoulli(0.5)) o.color = Pick(rng, lex.colors());
    if (rng.Bernoulli(0.3)) o.shape = Pick(rng, lex.shapes());
    scene.objects.push_back(std::move(o));
  }
}

std::string RelationPhrase(PositionRelation r) {
  switch (r) {
    case PositionRelation::kLeftOf: return "to the left of";
    case PositionRelation::kRightOf: return "to the right of";
    case PositionRelation::kAbove: return "above";
    case PositionRelation::kBelow: return "below";
    case PositionRelation::kInside: return "inside";
    case PositionRelation::kOn: return "on top of";
  }
  return "";
}

std::string RelationPhrase(SizeRelation r) {
  switch (r) {
    case SizeRelation::kLarger: return "larger than";
    case SizeRelation::kSmaller: return "smaller than";
    case SizeRelation::kEqual: return "the same size as";
  }
  return "";
}

SceneRecord MakeScene(VhType type, std::size_t index, SplitMix64 &rng) {
  const Lexicons &lex = Lexicons::Default();
  SceneRecord s;
  char id[64];
  std::snprintf(id, sizeof id, "%s-%04zu", std::string(VhTypeConfigKey(type)).c_str(), index);
  s.record_id = id;
  s.vh_type = type;

  SceneObject main;
  main.name = Pick(rng, type == VhType::kOcr ? kTextObjects : kObjects);
  main.count = static_cast<std::uint32_t>(1 + rng.UniformIndex(4));
  const std::string noun = Display(main.name);

  switch (type) {
    case VhType::kExistence: {
      bool present = rng.Bernoulli(0.5);
      if (!present) main.count = 0;
      s.question = "Is there " + Article(noun) + " " + noun + " in the image?";
      s.answer = present ? "Yes, there is " + Article(noun) + " " + noun + " in the image."
                         : "No, there is no " + noun + " in the image.";
      s.objects.push_back(main);
      break;
    }
    case VhType::kShape:
      main.shape = Pick(rng, lex.shapes());
      s.question = "What shape is the " + noun + "?";
      s.answer = "The " + noun + " is " + Display(*main.shape) + ".";
      s.objects.push_back(main);
      break;
    case VhType::kColor:
      main.color = Pick(rng, lex.colors());
      s.question = "What color is the " + noun + "?";
      s.answer = "The " + noun + " is " + *main.color + ".";
      s.objects.push_back(main);
      break;
    case VhType::kOrientation:
      main.orientation = Pick(rng, lex.orientations());
      s.question = "How is the " + noun + " oriented?";
      s.answer = "The " + noun + " is " + Display(*main.orientation) + ".";
      s.objects.push_back(main);
      break;
    case VhType::kOcr:
      main.count = 1;
      main.text = Pick(rng, kTexts);
      s.question = "What does the text on the " + noun + " say?";
      s.answer = "The " + noun + " says \"" + *main.text + "\".";
      s.objects.push_back(main);
      break;
    case VhType::kSize:
    case VhType::kPosition: {
      s.objects.push_back(main);
      SceneObject other;
      other.name = FreshNoun(rng, kObjects, s.objects);
      other.count = 1;
      s.objects.push_back(other);
      const std::string b = Display(other.name);
      if (type == VhType::kSize) {
        SizeRelation r = kAllSizeRelations[rng.UniformIndex(kAllSizeRelations.size())];
        s.relations.push_back({main.name, other.name, r});
        s.question = "How does the " + noun + " compare in size to the " + b + "?";
        s.answer = "The " + noun + " is " + RelationPhrase(r) + " the " + b + ".";
      } else {
        PositionRelation r = kAllPositionRelations[rng.UniformIndex(kAllPositionRelations.size())];
        s.relations.push_back({main.name, other.name, r});
        s.question = "Where is the " + noun + " relative to the " + b + "?";
        s.answer = "The " + noun + " is " + RelationPhrase(r) + " the " + b + ".";
      }
      break;
    }
    case VhType::kCounting: {
      main.count = static_cast<std::uint32_t>(rng.UniformIndex(9));
      const std::string plural = Plural(main.name);
      s.question = "How many " + plural + " are in the image?";
      if (main.count == 1) {
        s.answer = "There is one " + noun + " in the image.";
      } else {
        s.answer = "There are " + lex.NumberToWord(main.count) + " " + plural + " in the image.";
      }
      s.objects.push_back(main);
      break;
    }
  }
  AddExtras(rng, s, 2);
  return s;
}

std::string WrongValue(const std::vector<std::string> &tokens, const std::string &truth) {
  for (const std::string &t : tokens) {
    if (t != truth) return t;
  }
  return truth;
}

}  // namespace

std::vector<SceneRecord> MakeScenes(std::size_t per_type, std::uint64_t seed) {
  std::vector<SceneRecord> out;
  out.reserve(per_type * kNumVhTypes);
  for (VhType type : kAllVhTypes) {
    for (std::size_t i = 0; i < per_type; ++i) {
      SplitMix64 rng = RecordRng(seed, std::string(VhTypeToken(type)) + std::to_string(i), "scene");
      out.push_back(MakeScene(type, i, rng));
    }
  }
  return out;
}

std::string ToJsonl(const std::vector<SceneRecord> &scenes) {
  std::string out;
  for (const SceneRecord &s : scenes) out += ToJson(s) + "\n";
  return out;
}

std::string WrongAnswer(const SceneRecord &scene) {
  const Lexicons &lex = Lexicons::Default();
  const SceneObject &main = scene.objects.front();
  const std::string noun = Display(main.name);
  switch (scene.vh_type) {
    case VhType::kExistence:
      return main.count > 0 ? "No, there is no " + noun + " in the image."
                            : "Yes, there is " + Article(noun) + " " + noun + " in the image.";
    case VhType::kShape:
      return "The " + noun + " is " + Display(WrongValue(lex.shapes(), *main.shape)) + ".";
    case VhType::kColor:
      return "The " + noun + " is " + WrongValue(lex.colors(), *main.color) + ".";
    case VhType::kOrientation:
      return "The " + noun + " is " +
             Display(WrongValue(lex.orientations(), *main.orientation)) + ".";
    case VhType::kOcr:
      return "The " + noun + " says \"" + (*main.text == "SALE" ? "CLOSED" : "SALE") + "\".";
    case VhType::kSize: {
      const SceneRelation &r = scene.relations.front();
      SizeRelation truth = std::get<SizeRelation>(r.relation);
      SizeRelation wrong = truth == SizeRelation::kLarger ? SizeRelation::kSmaller : SizeRelation::kLarger;
      return "The " + noun + " is " + RelationPhrase(wrong) + " the " + Display(r.subject_b) + ".";
    }
    case VhType::kPosition: {
      const SceneRelation &r = scene.relations.front();
      PositionRelation truth = std::get<PositionRelation>(r.relation);
      PositionRelation wrong =
          truth == PositionRelation::kLeftOf ? PositionRelation::kRightOf : PositionRelation::kLeftOf;
      return "The " + noun + " is " + RelationPhrase(wrong) + " the " + Display(r.subject_b) + ".";
    }
    case VhType::kCounting:
      return "There are " + lex.NumberToWord(main.count + 2) + " " + Plural(main.name) +
             " in the image.";
  }
  return {};
}

std::vector<std::string> OeqGoldLines(const std::vector<SceneRecord> &scenes) {
  std::vector<std::string> out;
  for (const SceneRecord &s : scenes) {
    AnchorSet anchors = DeriveAnchors(s);
    nlohmann::ordered_json j;
    j["record_id"] = s.record_id;
    j["vh_type"] = VhTypeToken(s.vh_type);
    j["anchors"] = Serialize(anchors);
    j["target_anchor"] = TargetAnchor(s, anchors).anchor_id();
    out.push_back(j.dump());
  }
  return out;
}

std::vector<std::string> OeqPredictionLines(const std::vector<SceneRecord> &scenes,
                                            const Column &column) {
  std::array<std::size_t, kNumVhTypes> seen{};
  std::vector<std::string> out;
  for (const SceneRecord &s : scenes) {
    std::size_t k = seen[Index(s.vh_type)]++;
    nlohmann::ordered_json j;
    j["record_id"] = s.record_id;
    j["text"] = k < column.correct[Index(s.vh_type)] ? s.answer : WrongAnswer(s);
    out.push_back(j.dump());
  }
  return out;
}

std::vector<std::string> YnqGoldLines(std::size_t per_type) {
  std::vector<std::string> out;
  for (VhType type : kAllVhTypes) {
    for (std::size_t i = 0; i < per_type; ++i) {
      nlohmann::ordered_json j;
      j["record_id"] = "ynq-" + std::string(VhTypeConfigKey(type)) + "-" + std::to_string(i);
      j["vh_type"] = VhTypeToken(type);
      j["polarity"] = i % 2 == 0 ? "yes" : "no";
      out.push_back(j.dump());
    }
  }
  return out;
}

std::vector<std::string> YnqPredictionLines(const Column &column) {
  std::vector<std::string> out;
  for (VhType type : kAllVhTypes) {
    for (std::size_t i = 0; i < column.n_per_type; ++i) {
      bool yes = i % 2 == 0;
      if (i >= column.correct[Index(type)]) yes = !yes;
      nlohmann::ordered_json j;
      j["record_id"] = "ynq-" + std::string(VhTypeConfigKey(type)) + "-" + std::to_string(i);
      j["text"] = yes ? "Yes, it is." : "No, it is not.";
      out.push_back(j.dump());
    }
  }
  return out;
}

namespace {

std::string RandomSubject(SplitMix64 &rng) {
  const auto &nouns = Lexicons::Default().nouns();
  std::string s = nouns[rng.UniformIndex(nouns.size())];
  if (rng.Bernoulli(0.3)) s += "_" + std::to_string(rng.UniformIndex(20));
  return s;
}

std::optional<std::string> MaybeSubject(SplitMix64 &rng) {
  if (rng.Bernoulli(0.5)) return std::nullopt;
  return RandomSubject(rng);
}

template <typename Fact, typename Relation, std::size_t N>
Fact RandomRelation(SplitMix64 &rng, const std::array<Relation, N> &relations) {
  Fact f;
  f.subject_a = RandomSubject(rng);
  do {
    f.subject_b = RandomSubject(rng);
  } while (f.subject_b == f.subject_a);
  f.relation = relations[rng.UniformIndex(N)];
  return f;
}

}  // namespace

FactValue RandomFact(SplitMix64 &rng, VhType type) {
  const Lexicons &lex = Lexicons::Default();
  switch (type) {
    case VhType::kExistence: return ExistenceFact{RandomSubject(rng), rng.Bernoulli(0.5)};
    case VhType::kShape: return ShapeFact{RandomSubject(rng), Pick(rng, lex.shapes())};
    case VhType::kColor: return ColorFact{RandomSubject(rng), Pick(rng, lex.colors())};
    case VhType::kOrientation:
      return OrientationFact{RandomSubject(rng), Pick(rng, lex.orientations())};
    case VhType::kOcr: {
      std::string text;
      const std::size_t words = 1 + rng.UniformIndex(3);
      for (std::size_t i = 0; i < words; ++i) {
        if (i > 0) text += ' ';
        std::string w = NormalizeOcr(Pick(rng, kTexts));
        text += w.substr(0, w.find(' '));
      }
      return OcrFact{text, MaybeSubject(rng)};
    }
    case VhType::kSize: return RandomRelation<SizeFact>(rng, kAllSizeRelations);
    case VhType::kPosition: return RandomRelation<PositionFact>(rng, kAllPositionRelations);
    case VhType::kCounting:
      return CountingFact{static_cast<std::uint32_t>(rng.UniformIndex(1000)), MaybeSubject(rng)};
  }
  return ExistenceFact{RandomSubject(rng), true};
}

FactValue Perturb(SplitMix64 &rng, const FactValue &value) {
  for (;;) {
    FactValue other = RandomFact(rng, TypeOf(value));
    std::visit(
        [&](auto &o) {
          using T = std::decay_t<decltype(o)>;
          const T &v = std::get<T>(value);
          if constexpr (requires { o.subject_a; }) {
            o.subject_a = v.subject_a;
            o.subject_b = v.subject_b;
          } else {
            o.subject = v.subject;
          }
        },
        other);
    if (other != value) return other;
  }
}

ScoringCase RandomScoringCase(SplitMix64 &rng) {
  ScoringCase c;
  auto dyadic = [&rng](std::size_t max_eighths) {
    return static_cast<double>(rng.UniformIndex(max_eighths + 1)) / 8.0;
  };
  for (double &g : c.config.gamma) g = dyadic(32);
  c.config.lambda = dyadic(24);
  c.ce = dyadic(80);

  std::set<AnchorKey> keys;
  const std::size_t n = 1 + rng.UniformIndex(12);
  while (c.anchors.size() < n) {
    FactValue v = RandomFact(rng, kAllVhTypes[rng.UniformIndex(kNumVhTypes)]);
    AnchorKey key = KeyOf(v);
    AnchorKey reversed = key;
    if (const auto *s = std::get_if<SizeFact>(&v)) reversed.subject = s->subject_b + "|" + s->subject_a;
    if (const auto *p = std::get_if<PositionFact>(&v)) {
      reversed.subject = p->subject_b + "|" + p->subject_a;
    }
    if (keys.count(key) || keys.count(reversed)) continue;
    keys.insert(key);
    c.anchors.emplace_back(v);
    switch (rng.UniformIndex(3)) {
      case 0: c.indicators.push_back(0); break;
      case 1:
        c.claims.push_back({v, {}});
        c.indicators.push_back(0);
        break;
      default:
        c.claims.push_back({Perturb(rng, v), {}});
        c.indicators.push_back(1);
        break;
    }
  }
  // Claims about objects no anchor mentions pair with nothing.
  c.claims.push_back({ColorFact{"nothing_here", "red"}, {}});
  c.claims.push_back({ExistenceFact{"nothing_here", true}, {}});
  for (std::size_t i = c.claims.size(); i > 1; --i) {
    std::swap(c.claims[i - 1], c.claims[rng.UniformIndex(i)]);
  }
  for (std::size_t i = 0; i < c.claims.size(); ++i) c.claims[i].source_span = {2 * i, 2 * i + 1};
  return c;
}

double BruteForceFcl(const ScoringCase &c) {
  double total = 0.0;
  for (VhType t : kAllVhTypes) {
    int fired = 0;
    for (std::size_t i = 0; i < c.anchors.size(); ++i) {
      if (c.anchors[i].vh_type() == t) fired += c.indicators[i];
    }
    total += c.config.gamma[Index(t)] * fired;
  }
  return total;
}

double BruteForceTotal(const ScoringCase &c) { return c.ce + c.config.lambda * BruteForceFcl(c); }

std::optional<std::string> SubjectOf(const FactValue &value) {
  return std::visit(
      [](const auto &f) -> std::optional<std::string> {
        if constexpr (requires { f.subject_a; }) {
          return std::nullopt;
        } else {
          return f.subject;
        }
      },
      value);
}

}  // namespace gvf::fixtures
