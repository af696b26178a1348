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
#include <fstream>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "fixtures.h"
#include "gvf/anchor_dsl.h"
#include "gvf/contradiction.h"
#include "gvf/error.h"
#include "gvf/fcl_scoring.h"
#include "gvf/jsonl.h"

namespace gvf {
namespace {

SceneRecord Apples() {
  return {"apples", {{"apple", 2}}, {}, "How many apples are in the image?",
          "There are two apples.", VhType::kCounting};
}

SceneRecord Ball(const std::string &color) {
  SceneObject ball{"ball", 1, color};
  return {"ball", {ball}, {}, "What color is the ball?", "The ball is " + color + ".",
          VhType::kColor};
}

// The default lexicons with the colour list cut down to red and blue.
Lexicons TwoColorLexicons() {
  std::ifstream in(std::string(GVF_SOURCE_DIR) + "/core/data/lexicons.toml");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  auto begin = text.find("[colors]");
  auto end = text.find("[shapes]");
  text.replace(begin, end - begin, "[colors]\ntokens = [\"red\", \"blue\"]\n\n");
  return Lexicons::FromToml(text, "two colors");
}

std::vector<std::string> Tokens(const AnchorSet &anchors) { return Serialize(anchors); }

bool Contains(const std::vector<std::string> &v, const std::string &s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

TEST(DeriveAnchorsTest, TwoApples) {
  auto tokens = Tokens(DeriveAnchors(Apples()));
  EXPECT_EQ(tokens.front(), "[FACT: COUNT=2]");
  EXPECT_TRUE(Contains(tokens, "[FACT: EXISTENCE_APPLE=TRUE]"));
}

TEST(DeriveAnchorsTest, Relations) {
  SceneRecord s{"r", {{"dog", 1}, {"cat", 1}}, {{"dog", "cat", PositionRelation::kLeftOf}},
                "Where is the dog?", "The dog is to the left of the cat.", VhType::kPosition};
  AnchorSet anchors = DeriveAnchors(s);
  EXPECT_TRUE(Contains(Tokens(anchors), "[FACT: POSITION_DOG_LEFT_OF_CAT=TRUE]"));
  EXPECT_EQ(TargetAnchor(s, anchors).anchor_id(), "POSITION_DOG_CAT");
}

TEST(DeriveAnchorsTest, OneAnchorPerDeclaredFact) {
  for (const SceneRecord &s : fixtures::MakeScenes(120)) {
    std::size_t expected = 1 + s.relations.size();
    for (const SceneObject &o : s.objects) {
      expected += 1 + o.color.has_value() + o.shape.has_value() + o.orientation.has_value() +
                  o.text.has_value();
    }
    AnchorSet anchors = DeriveAnchors(s);
    ASSERT_EQ(anchors.size(), expected) << s.record_id;
    EXPECT_EQ(anchors[0].vh_type(), VhType::kCounting);
    EXPECT_EQ(TargetAnchor(s, anchors).vh_type(), s.vh_type) << s.record_id;
  }
}

TEST(ValidateSceneTest, RejectsBrokenScenes) {
  auto code = [](const SceneRecord &s) {
    try {
      ValidateScene(s);
      DeriveAnchors(s);
    } catch (const Error &e) {
      return e.code();
    }
    return ErrorCode::kIo;
  };
  SceneRecord empty = Apples();
  empty.objects.clear();
  EXPECT_EQ(code(empty), ErrorCode::kInvalidScene);

  SceneRecord s = Apples();
  s.objects[0].name = "unicorn";
  EXPECT_EQ(code(s), ErrorCode::kInvalidScene);
  s = Ball("plaid");
  EXPECT_EQ(code(s), ErrorCode::kInvalidScene);
  s = Apples();
  s.objects.push_back({"apple", 1});
  EXPECT_EQ(code(s), ErrorCode::kInvalidScene);
  s = Apples();
  s.relations.push_back({"apple", "cat", PositionRelation::kOn});
  EXPECT_EQ(code(s), ErrorCode::kInvalidScene);
  s = Apples();
  s.relations.push_back({"apple", "apple", PositionRelation::kOn});
  EXPECT_EQ(code(s), ErrorCode::kInvalidScene);
  s = Ball("red");
  s.objects[0].count = 0;
  EXPECT_EQ(code(s), ErrorCode::kInvalidScene);
  s = Ball("red");
  s.vh_type = VhType::kOcr;
  EXPECT_THROW(TargetAnchor(s, DeriveAnchors(s)), Error);
}

TEST(QuestionedObjectTest, EarliestMention) {
  SceneRecord s{"q", {{"cat", 1}, {"dog", 2}}, {}, "How many dogs are next to the cat?", "Two.",
                VhType::kCounting};
  EXPECT_EQ(QuestionedObject(s), 1u);
  s.question = "How many are there?";
  EXPECT_EQ(QuestionedObject(s), 0u);
  EXPECT_EQ(Tokens(DeriveAnchors(s)).front(), "[FACT: COUNT=1]");
}

TEST(CounterfactualTest, ApplesPrompt) {
  SceneRecord s = Apples();
  AnchorSet anchors = DeriveAnchors(s);
  bool saw_three = false;
  const std::set<std::string> allowed = {
      "Is there one apple in the image?", "Are there zero apples in the image?",
      "Are there three apples in the image?", "Are there four apples in the image?"};
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    Counterfactual cf = GenerateCounterfactual(s, anchors, seed);
    EXPECT_TRUE(allowed.count(cf.prompt)) << cf.prompt;
    EXPECT_EQ(cf.expected_answer, "No, there are only two.");
    EXPECT_EQ(cf.target_anchor, "COUNT");
    if (cf.prompt == "Are there three apples in the image?") {
      saw_three = true;
      EXPECT_EQ(cf.check_token, "[CHECK_COUNT: 3]");
      EXPECT_EQ(FormatInstruction(s, anchors, TaskKind::kCounterfactual, &cf,
                                  InstructionStyle::kFull),
                "[CHECK_COUNT: 3] (Are there three apples in the image?)");
    }
  }
  EXPECT_TRUE(saw_three);
}

TEST(CounterfactualTest, TwoColorLexiconForcesBlue) {
  Lexicons lex = TwoColorLexicons();
  SceneRecord s = Ball("red");
  AnchorSet anchors = DeriveAnchors(s, lex);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Counterfactual cf = GenerateCounterfactual(s, anchors, seed, lex);
    EXPECT_EQ(cf.check_token, "[CHECK_COLOR: BLUE]");
    EXPECT_EQ(cf.prompt, "Is this ball blue?");
    EXPECT_EQ(cf.expected_answer, "No, the ball is red.");
  }
}

TEST(CounterfactualTest, ExhaustedWhenNoAlternative) {
  std::ifstream in(std::string(GVF_SOURCE_DIR) + "/core/data/lexicons.toml");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  auto begin = text.find("[colors]");
  auto end = text.find("[shapes]");
  text.replace(begin, end - begin, "[colors]\ntokens = [\"red\"]\n\n");
  Lexicons lex = Lexicons::FromToml(text);
  SceneRecord s = Ball("red");
  try {
    GenerateCounterfactual(s, DeriveAnchors(s, lex), 1, lex);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kExhaustedPerturbations);
  }
}

TEST(CounterfactualTest, SoundOverFixtureScenes) {
  const Lexicons &lex = Lexicons::Default();
  for (std::uint64_t seed : {1u, 42u, 9001u}) {
    for (const SceneRecord &s : fixtures::MakeScenes(120)) {
      AnchorSet anchors = DeriveAnchors(s);
      Counterfactual cf = GenerateCounterfactual(s, anchors, seed);
      const FactualAnchor *target = cf.anchors.Find(cf.target_anchor);
      ASSERT_NE(target, nullptr) << s.record_id;
      EXPECT_EQ(target->vh_type(), s.vh_type);
      EXPECT_EQ(TypeOf(cf.perturbed), s.vh_type);

      FactValue asserted = CheckTokenValue(ParseToken(cf.check_token), fixtures::SubjectOf(target->value()));
      EXPECT_EQ(asserted, cf.perturbed);
      auto pairs = PairClaims(cf.anchors, {Claim{asserted, {0, 1}}}, lex);
      int fired = 0;
      for (const auto &p : pairs) {
        fired += p.indicator;
        if (p.indicator == 1) EXPECT_EQ(p.anchor.anchor_id(), cf.target_anchor);
      }
      EXPECT_EQ(fired, 1) << s.record_id << " " << cf.check_token;

      ExtractionContext ctx;
      if (s.vh_type == VhType::kExistence) {
        ctx = {fixtures::SubjectOf(cf.perturbed), true};
      }
      EXPECT_EQ(FclScore({cf.expected_answer, s.record_id}, cf.anchors, {}, lex, ctx).total, 0.0)
          << s.record_id << " " << cf.expected_answer;
      EXPECT_NE(cf.perturbed, target->value());
    }
  }
}

TEST(FormatInstructionTest, ExampleStrings) {
  SceneRecord s = Apples();
  AnchorSet anchors = DeriveAnchors(s);
  EXPECT_EQ(FormatInstruction(s, anchors, TaskKind::kOriginal, nullptr, InstructionStyle::kFull),
            "[FACT: COUNT=?] (How many apples are in the image?)");
  EXPECT_EQ(
      FormatInstruction(s, anchors, TaskKind::kOriginal, nullptr, InstructionStyle::kNoFactTokens),
      "How many apples are in the image?");

  Lexicons lex = TwoColorLexicons();
  SceneRecord ball = Ball("blue");
  AnchorSet ball_anchors = DeriveAnchors(ball, lex);
  Counterfactual cf = GenerateCounterfactual(ball, ball_anchors, 42, lex);
  EXPECT_EQ(FormatInstruction(ball, ball_anchors, TaskKind::kCounterfactual, &cf,
                              InstructionStyle::kFull, Templates::Default(), lex),
            "[CHECK_COLOR: RED] (Is this ball red?)");
  EXPECT_EQ(FormatInstruction(ball, ball_anchors, TaskKind::kOriginal, nullptr,
                              InstructionStyle::kFull, Templates::Default(), lex),
            "[FACT: COLOR_BALL=?] (What color is the ball?)");
  EXPECT_THROW(FormatInstruction(s, anchors, TaskKind::kCounterfactual, nullptr,
                                 InstructionStyle::kFull),
               Error);
}

TEST(FormatInstructionTest, PositionSuffix) {
  SceneRecord s{"p", {{"dog", 1}, {"cat", 1}}, {{"dog", "cat", PositionRelation::kLeftOf}},
                "Where is the dog relative to the cat?", "The dog is to the left of the cat.",
                VhType::kPosition};
  AnchorSet anchors = DeriveAnchors(s);
  EXPECT_EQ(FormatInstruction(s, anchors, TaskKind::kOriginal, nullptr, InstructionStyle::kFull),
            "[FACT: POSITION=?] (Where is the dog relative to the cat?) Answer based on the "
            "spatial layout.");
  EXPECT_EQ(
      FormatInstruction(s, anchors, TaskKind::kOriginal, nullptr, InstructionStyle::kNoFactTokens),
      "Where is the dog relative to the cat? Answer based on the spatial layout.");
}

TEST(OriginalAnswerTest, CountingRewrite) {
  SceneRecord s = Apples();
  EXPECT_EQ(OriginalAnswer(s, DeriveAnchors(s)), "There are two (2) apples in the image.");
  s.objects[0].count = 1;
  EXPECT_EQ(OriginalAnswer(s, DeriveAnchors(s)), "There is one (1) apple in the image.");
  SceneRecord ball = Ball("red");
  EXPECT_EQ(OriginalAnswer(ball, DeriveAnchors(ball)), "The ball is red.");
}

std::vector<JsonlLine> SceneLines(std::size_t per_type, std::uint64_t seed = 7) {
  return SplitJsonl(fixtures::ToJsonl(fixtures::MakeScenes(per_type, seed)));
}

TEST(AugmentTest, RecordShape) {
  SceneRecord s = Apples();
  auto records = AugmentScene(s, AugmentConfig{});
  ASSERT_EQ(records.size(), 2u);
  const AugmentedRecord &orig = records[0];
  const AugmentedRecord &cf = records[1];
  EXPECT_EQ(orig.record_id, "apples");
  EXPECT_EQ(orig.task, TaskKind::kOriginal);
  EXPECT_EQ(orig.sibling_id, "apples#cf");
  EXPECT_EQ(orig.expected_answer, "There are two (2) apples in the image.");
  EXPECT_EQ(orig.target_anchor, "COUNT");
  EXPECT_EQ(cf.record_id, "apples#cf");
  EXPECT_EQ(cf.task, TaskKind::kCounterfactual);
  EXPECT_EQ(cf.sibling_id, "apples");
  EXPECT_EQ(cf.vh_type, VhType::kCounting);
  EXPECT_EQ(cf.expected_answer, "No, there are only two.");
}

TEST(AugmentTest, RatioOneDoublesAndRatioZeroKeeps) {
  auto lines = SceneLines(120);
  AugmentConfig config;
  AugmentResult full = AugmentLines(lines, config);
  EXPECT_EQ(full.lines.size(), 1920u);
  EXPECT_EQ(full.summary.records_in, 960u);
  EXPECT_EQ(full.summary.records_out, 1920u);
  for (VhType t : kAllVhTypes) {
    EXPECT_EQ(full.summary.originals[Index(t)], 120u);
    EXPECT_EQ(full.summary.counterfactuals[Index(t)], 120u);
  }
  config.counterfactual_ratio = 0.0;
  AugmentResult none = AugmentLines(lines, config);
  ASSERT_EQ(none.lines.size(), 960u);
  for (const std::string &l : none.lines) {
    AugmentedRecord r = ParseAugmentedRecord(l);
    EXPECT_EQ(r.task, TaskKind::kOriginal);
    EXPECT_TRUE(r.sibling_id.empty());
  }
}

TEST(AugmentTest, RatioIsMonotone) {
  auto lines = SceneLines(40);
  auto cf_ids = [&](double ratio) {
    AugmentConfig config;
    config.counterfactual_ratio = ratio;
    std::set<std::string> ids;
    for (const std::string &l : AugmentLines(lines, config).lines) {
      AugmentedRecord r = ParseAugmentedRecord(l);
      if (r.task == TaskKind::kCounterfactual) ids.insert(r.record_id);
    }
    return ids;
  };
  auto low = cf_ids(0.3);
  auto high = cf_ids(0.6);
  EXPECT_TRUE(std::includes(high.begin(), high.end(), low.begin(), low.end()));
  EXPECT_GT(low.size(), 60u);
  EXPECT_LT(low.size(), 130u);
}

TEST(AugmentTest, DeterministicAcrossRunsAndWorkers) {
  auto lines = SceneLines(30);
  AugmentConfig config;
  config.workers = 1;
  auto a = AugmentLines(lines, config).lines;
  config.workers = 4;
  auto b = AugmentLines(lines, config).lines;
  EXPECT_EQ(a, b);
  config.seed = 43;
  EXPECT_NE(AugmentLines(lines, config).lines, a);
}

TEST(AugmentTest, FailsClosedWithLineNumbers) {
  auto lines = SceneLines(2);
  lines[3].text = "{broken";
  lines[5].text = lines[4].text;
  try {
    AugmentLines(lines, AugmentConfig{});
    FAIL();
  } catch (const DatasetError &e) {
    ASSERT_EQ(e.diagnostics().size(), 2u);
    EXPECT_EQ(e.diagnostics()[0].line, lines[3].line_number);
    EXPECT_EQ(e.diagnostics()[1].line, lines[5].line_number);
  }
}

TEST(AugmentTest, DatasetFileHasProvenance) {
  auto dir = std::filesystem::temp_directory_path() / "gvf_augment_test";
  std::filesystem::create_directories(dir);
  WriteFileAtomic(dir / "in.jsonl", fixtures::ToJsonl(fixtures::MakeScenes(3)));
  AugmentSummary summary =
      AugmentDataset(dir / "in.jsonl", dir / "out.jsonl", AugmentConfig{}, "feedface");
  EXPECT_EQ(summary.records_out, 48u);
  std::string text = ReadFile(dir / "out.jsonl");
  EXPECT_TRUE(IsProvenanceLine(text.substr(0, text.find('\n'))));
  EXPECT_NE(text.find("feedface"), std::string::npos);
  EXPECT_EQ(ReadJsonl(dir / "out.jsonl").size(), 48u);
  std::filesystem::remove_all(dir);
}

TEST(SplitTest, PerTypeCountsAndSetEquality) {
  auto lines = SceneLines(150, 8);
  SplitResult r = SplitLines(lines, 0.8, 42);
  for (VhType t : kAllVhTypes) {
    EXPECT_EQ(r.train_per_type[Index(t)], 120u);
    EXPECT_EQ(r.test_per_type[Index(t)], 30u);
  }
  std::multiset<std::string> input, output;
  std::set<std::string> train_ids;
  for (const auto &l : lines) input.insert(l.text);
  for (const auto &l : r.train) {
    output.insert(l.text);
    train_ids.insert(l.text);
  }
  for (const auto &l : r.test) {
    output.insert(l.text);
    EXPECT_FALSE(train_ids.count(l.text));
  }
  EXPECT_EQ(input, output);
  auto by_line = [](const JsonlLine &a, const JsonlLine &b) { return a.line_number < b.line_number; };
  EXPECT_TRUE(std::is_sorted(r.train.begin(), r.train.end(), by_line));
  EXPECT_TRUE(std::is_sorted(r.test.begin(), r.test.end(), by_line));
}

TEST(SplitTest, SmallAndDegenerate) {
  auto lines = SceneLines(2);
  SplitResult r = SplitLines(lines, 0.5, 1);
  for (VhType t : kAllVhTypes) {
    EXPECT_EQ(r.train_per_type[Index(t)], 1u);
    EXPECT_EQ(r.test_per_type[Index(t)], 1u);
  }
  r = SplitLines(lines, 0.99, 1);
  EXPECT_EQ(r.test.size(), 8u);

  std::vector<JsonlLine> single;
  for (const auto &l : lines) {
    if (RecordVhType(l.text) == VhType::kColor) {
      single.push_back(l);
      break;
    }
  }
  for (const auto &l : lines) {
    if (RecordVhType(l.text) == VhType::kShape) single.push_back(l);
  }
  try {
    SplitLines(single, 0.8, 1);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kTypeTooSmall);
  }
  EXPECT_THROW(SplitLines(lines, 1.0, 1), Error);
  EXPECT_THROW(SplitLines(lines, 0.0, 1), Error);
}

TEST(SplitTest, SeededSelection) {
  auto lines = SceneLines(20);
  auto ids = [](const SplitResult &r) {
    std::vector<std::size_t> out;
    for (const auto &l : r.train) out.push_back(l.line_number);
    return out;
  };
  EXPECT_EQ(ids(SplitLines(lines, 0.8, 5)), ids(SplitLines(lines, 0.8, 5)));
  EXPECT_NE(ids(SplitLines(lines, 0.8, 5)), ids(SplitLines(lines, 0.8, 6)));
}

}  // namespace
}  // namespace gvf
