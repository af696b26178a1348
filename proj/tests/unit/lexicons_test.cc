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


#include "gvf/lexicons.h"

#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "gvf/error.h"

namespace gvf {
namespace {

std::string DefaultText() {
  std::ifstream in(std::string(GVF_SOURCE_DIR) + "/core/data/lexicons.toml");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string Replace(std::string text, const std::string &from, const std::string &to) {
  auto pos = text.find(from);
  EXPECT_NE(pos, std::string::npos) << from;
  if (pos != std::string::npos) text.replace(pos, from.size(), to);
  return text;
}

ErrorCode LoadError(const std::string &text) {
  try {
    Lexicons::FromToml(text, "test");
  } catch (const Error &e) {
    return e.code();
  }
  return ErrorCode::kIo;
}

TEST(LexiconsTest, ShippedFileMatchesEmbeddedDefault) {
  Lexicons from_file = Lexicons::FromToml(DefaultText());
  EXPECT_EQ(from_file.fingerprint(), Lexicons::Default().fingerprint());
  EXPECT_EQ(from_file.colors(), Lexicons::Default().colors());
}

TEST(LexiconsTest, SynonymsByHand) {
  const Lexicons &lex = Lexicons::Default();
  const std::pair<const char *, const char *> colors[] = {
      {"crimson", "red"}, {"scarlet", "red"}, {"navy", "blue"}, {"sky blue", "blue"},
      {"grey", "gray"},   {"Red", "red"},     {"GRAY", "gray"}};
  for (auto [surface, canonical] : colors) EXPECT_EQ(lex.CanonicalColor(surface), canonical);
  EXPECT_EQ(lex.CanonicalShape("circular"), "round");
  EXPECT_EQ(lex.CanonicalShape("star-shaped"), "star_shaped");
  EXPECT_EQ(lex.CanonicalShape("star shaped"), "star_shaped");
  EXPECT_EQ(lex.CanonicalOrientation("inverted"), "upside_down");
  EXPECT_EQ(lex.CanonicalNoun("puppies"), "dog");
  EXPECT_EQ(lex.CanonicalNoun("knives"), "knife");
  EXPECT_EQ(lex.CanonicalNoun("traffic lights"), "traffic_light");
  EXPECT_EQ(lex.CanonicalNoun("teddy_bear"), "teddy_bear");
  EXPECT_FALSE(lex.CanonicalColor("plaid"));
  EXPECT_FALSE(lex.CanonicalNoun("red"));
}

TEST(LexiconsTest, CanonicalizationIsIdempotent) {
  const Lexicons &lex = Lexicons::Default();
  for (VhType t : {VhType::kColor, VhType::kShape, VhType::kOrientation}) {
    for (const std::string &token : lex.AttributeTokens(t)) {
      EXPECT_EQ(lex.CanonicalAttribute(t, token), token);
    }
  }
  for (const auto &[surface, target] : lex.color_synonyms()) {
    std::string once = lex.CanonicalAttribute(VhType::kColor, surface);
    EXPECT_EQ(once, target);
    EXPECT_EQ(lex.CanonicalAttribute(VhType::kColor, once), once);
  }
  for (const auto &[surface, target] : lex.shape_synonyms()) {
    EXPECT_EQ(lex.CanonicalAttribute(VhType::kShape, surface), target);
  }
  for (const std::string &noun : lex.nouns()) {
    EXPECT_EQ(lex.CanonicalNoun(noun), noun);
    EXPECT_EQ(lex.CanonicalNoun(lex.Plural(noun)), noun) << lex.Plural(noun);
  }
  EXPECT_EQ(lex.CanonicalAttribute(VhType::kColor, "plaid"), "plaid");
}

TEST(LexiconsTest, OppositesAreInvolutions) {
  const Lexicons &lex = Lexicons::Default();
  EXPECT_FALSE(lex.orientation_opposites().empty());
  for (const auto &[a, b] : lex.orientation_opposites()) {
    EXPECT_NE(a, b);
    EXPECT_EQ(lex.OppositeOrientation(b), a);
  }
  EXPECT_FALSE(lex.OppositeOrientation("tilted"));
}

TEST(LexiconsTest, PluralsAndNumbers) {
  const Lexicons &lex = Lexicons::Default();
  EXPECT_EQ(lex.Plural("apple"), "apples");
  EXPECT_EQ(lex.Plural("box"), "boxes");
  EXPECT_EQ(lex.Plural("knife"), "knives");
  EXPECT_EQ(lex.Plural("person"), "people");
  EXPECT_EQ(lex.Plural("traffic_light"), "traffic lights");
  EXPECT_EQ(lex.Plural("sheep"), "sheep");
  EXPECT_EQ(lex.NumberToWord(2), "two");
  EXPECT_EQ(lex.NumberToWord(0), "zero");
  EXPECT_EQ(lex.NumberToWord(42), "42");
  EXPECT_EQ(DisplayToken("upside_down"), "upside down");
}

TEST(LexiconsTest, PhraseTable) {
  const Lexicons &lex = Lexicons::Default();
  const PhraseEntry *left = lex.FindPhrase("to the left of");
  ASSERT_NE(left, nullptr);
  EXPECT_EQ(left->category, LexiconCategory::kSpatial);
  EXPECT_EQ(std::get<PositionRelation>(left->payload), PositionRelation::kLeftOf);
  const PhraseEntry *front = lex.FindPhrase("in front of");
  ASSERT_NE(front, nullptr);
  EXPECT_EQ(front->category, LexiconCategory::kBlocker);
  const PhraseEntry *two = lex.FindPhrase("two");
  ASSERT_NE(two, nullptr);
  EXPECT_EQ(std::get<std::uint32_t>(two->payload), 2u);
  EXPECT_GE(lex.max_phrase_words(), 4u);
  EXPECT_TRUE(lex.IsNegationCue("not"));
  EXPECT_FALSE(lex.IsNegationCue("yes"));
}

TEST(LexiconsTest, RejectsBrokenFiles) {
  const std::string text = DefaultText();
  EXPECT_EQ(LoadError("[colors"), ErrorCode::kConfig);
  EXPECT_EQ(LoadError(Replace(text, "crimson = \"red\"", "crimson = \"reddish\"")),
            ErrorCode::kConfig);
  EXPECT_EQ(LoadError(Replace(text, "vertical = \"horizontal\"", "vertical = \"upright\"")),
            ErrorCode::kConfig);
  EXPECT_EQ(LoadError(Replace(text, "\"window\",", "\"window\", \"left_shoe\",")),
            ErrorCode::kConfig);
  EXPECT_EQ(LoadError(Replace(text, "\"blue\",", "\"blue\", \"blue\",")), ErrorCode::kConfig);
  EXPECT_EQ(LoadError(Replace(text, "\"above\" = \"ABOVE\"", "\"above\" = \"UP\"")),
            ErrorCode::kConfig);
  EXPECT_EQ(LoadError(Replace(text, "twenty = 20", "twenty = 21")), ErrorCode::kConfig);
  EXPECT_THROW(Lexicons::LoadFile("/nonexistent/lexicons.toml"), Error);
}

TEST(LexiconsTest, FingerprintTracksContent) {
  const std::string text = DefaultText();
  auto a = Lexicons::FromToml(text);
  auto b = Lexicons::FromToml(text + "\n# comment\n");
  EXPECT_NE(a.fingerprint(), b.fingerprint());
}

}  // namespace
}  // namespace gvf
