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

#include "gvf/claim_extraction.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "gvf/error.h"

namespace gvf {

namespace {

enum class UnitKind {
  kWord,
  kPunct,
  kQuote,
  kNoun,
  kColor,
  kShape,
  kOrientation,
  kSpatial,
  kSize,
  kNumber,
  kBlocker,
};

struct RawToken {
  std::string text;  // lowercase word or single punctuation char
  std::size_t begin = 0;
  std::size_t end = 0;
  bool is_word = false;
  bool ends_sentence = false;
  int quote = -1;  // index into quotes for a quote placeholder
};

struct Quote {
  std::size_t begin = 0;  // opening quote
  std::size_t end = 0;    // one past closing quote
  std::string content;
};

struct Unit {
  UnitKind kind = UnitKind::kWord;
  std::string text;       // lowercase surface (words) or canonical token
  std::size_t begin = 0;
  std::size_t end = 0;
  PositionRelation position{};
  SizeRelation size{};
  std::uint32_t number = 0;
  int quote = -1;
};

using Clause = std::vector<Unit>;

bool IsWordChar(unsigned char c) { return std::isalnum(c) || c >= 0x80; }

bool IsApostrophe(std::string_view text, std::size_t i, std::size_t *width) {
  if (text[i] == '\'') {
    *width = 1;
    return true;
  }
  // U+2019 RIGHT SINGLE QUOTATION MARK
  if (text.substr(i, 3) == "\xE2\x80\x99") {
    *width = 3;
    return true;
  }
  return false;
}

// Locate quoted spans: "...", “...”, and '...' where the single quotes sit on
// word boundaries (so contractions are left alone).
std::vector<Quote> FindQuotes(std::string_view text) {
  std::vector<Quote> quotes;
  std::size_t i = 0;
  auto boundary_before = [&](std::size_t pos) {
    return pos == 0 || std::isspace(static_cast<unsigned char>(text[pos - 1])) ||
           text[pos - 1] == '(';
  };
  auto boundary_after = [&](std::size_t pos) {
    return pos >= text.size() || std::isspace(static_cast<unsigned char>(text[pos])) ||
           std::ispunct(static_cast<unsigned char>(text[pos]));
  };
  while (i < text.size()) {
    std::string_view open;
    std::string_view close;
    if (text[i] == '"') {
      open = close = "\"";
    } else if (text.substr(i, 3) == "\xE2\x80\x9C") {
      open = "\xE2\x80\x9C";
      close = "\xE2\x80\x9D";
    } else if (text[i] == '\'' && boundary_before(i)) {
      open = close = "'";
    }
    if (open.empty()) {
      ++i;
      continue;
    }
    std::size_t search = i + open.size();
    std::size_t found = std::string_view::npos;
    while ((search = text.find(close, search)) != std::string_view::npos) {
      if (close != "'" || boundary_after(search + 1)) {
        found = search;
        break;
      }
      ++search;
    }
    if (found == std::string_view::npos) {
      i += open.size();
      continue;
    }
    std::size_t inner = i + open.size();
    quotes.push_back({i, found + close.size(), std::string(text.substr(inner, found - inner))});
    i = found + close.size();
  }
  return quotes;
}

std::vector<RawToken> Tokenize(std::string_view text, const std::vector<Quote> &quotes) {
  std::vector<RawToken> tokens;
  std::size_t i = 0;
  std::size_t next_quote = 0;
  while (i < text.size()) {
    if (next_quote < quotes.size() && i == quotes[next_quote].begin) {
      RawToken t;
      t.begin = quotes[next_quote].begin;
      t.end = quotes[next_quote].end;
      t.quote = static_cast<int>(next_quote);
      tokens.push_back(t);
      i = quotes[next_quote].end;
      ++next_quote;
      continue;
    }
    auto c = static_cast<unsigned char>(text[i]);
    if (IsWordChar(c)) {
      RawToken t;
      t.begin = i;
      t.is_word = true;
      while (i < text.size()) {
        auto d = static_cast<unsigned char>(text[i]);
        std::size_t width = 0;
        if (IsWordChar(d) && !(next_quote < quotes.size() && i == quotes[next_quote].begin)) {
          // Multi-byte apostrophe is not a word character.
          if (d >= 0x80 && IsApostrophe(text, i, &width)) {
            if (i + width < text.size() && IsWordChar(static_cast<unsigned char>(text[i + width]))) {
              t.text += '\'';
              i += width;
              continue;
            }
            break;
          }
          t.text += static_cast<char>(std::tolower(d));
          ++i;
        } else if ((d == '-' || (IsApostrophe(text, i, &width) && width == 1)) &&
                   i + 1 < text.size() && IsWordChar(static_cast<unsigned char>(text[i + 1])) &&
                   !(next_quote < quotes.size() && i == quotes[next_quote].begin)) {
          t.text += static_cast<char>(d);
          ++i;
        } else {
          break;
        }
      }
      t.end = i;
      tokens.push_back(t);
      continue;
    }
    if (std::string_view(",;:().?!").find(static_cast<char>(c)) != std::string_view::npos) {
      RawToken t;
      t.text = std::string(1, static_cast<char>(c));
      t.begin = i;
      t.end = i + 1;
      if (c == '.' || c == '?' || c == '!') {
        t.ends_sentence = i + 1 >= text.size() ||
                          std::isspace(static_cast<unsigned char>(text[i + 1])) ||
                          text[i + 1] == '"' || text[i + 1] == '\'';
      }
      tokens.push_back(t);
    }
    ++i;
  }
  return tokens;
}

// "two (2)" reads as one number: drop a parenthesised digit gloss that
// repeats the preceding number word.
void FoldNumberGlosses(std::vector<RawToken> &tokens, const Lexicons &lex) {
  std::vector<RawToken> out;
  out.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    out.push_back(tokens[i]);
    if (!tokens[i].is_word || i + 3 >= tokens.size() || tokens[i + 1].text != "(" ||
        !tokens[i + 2].is_word || tokens[i + 3].text != ")") {
      continue;
    }
    auto word = lex.number_words().find(tokens[i].text);
    if (word == lex.number_words().end() || tokens[i + 2].text != std::to_string(word->second)) {
      continue;
    }
    out.back().end = tokens[i + 3].end;
    i += 3;
  }
  tokens = std::move(out);
}

UnitKind KindOf(LexiconCategory category) {
  switch (category) {
    case LexiconCategory::kNoun: return UnitKind::kNoun;
    case LexiconCategory::kColor: return UnitKind::kColor;
    case LexiconCategory::kShape: return UnitKind::kShape;
    case LexiconCategory::kOrientation: return UnitKind::kOrientation;
    case LexiconCategory::kSpatial: return UnitKind::kSpatial;
    case LexiconCategory::kSize: return UnitKind::kSize;
    case LexiconCategory::kNumber: return UnitKind::kNumber;
    case LexiconCategory::kBlocker: return UnitKind::kBlocker;
  }
  return UnitKind::kWord;
}

// Greedy longest-match of lexicon phrases over runs of word tokens.
std::vector<Unit> BuildUnits(const std::vector<RawToken> &tokens, std::size_t from,
                             std::size_t to, const Lexicons &lex) {
  std::vector<Unit> units;
  std::size_t i = from;
  while (i < to) {
    const RawToken &t = tokens[i];
    if (!t.is_word) {
      Unit u;
      u.kind = t.quote >= 0 ? UnitKind::kQuote : UnitKind::kPunct;
      u.text = t.text;
      u.begin = t.begin;
      u.end = t.end;
      u.quote = t.quote;
      units.push_back(u);
      ++i;
      continue;
    }
    bool matched = false;
    std::size_t max_len = std::min(lex.max_phrase_words(), to - i);
    for (std::size_t len = max_len; len >= 1 && !matched; --len) {
      std::string phrase;
      bool contiguous = true;
      for (std::size_t k = i; k < i + len; ++k) {
        if (!tokens[k].is_word) {
          contiguous = false;
          break;
        }
        if (k > i) phrase += ' ';
        phrase += tokens[k].text;
      }
      if (!contiguous) continue;
      const PhraseEntry *e = lex.FindPhrase(phrase);
      if (e == nullptr) continue;
      Unit u;
      u.kind = KindOf(e->category);
      u.text = e->canonical.empty() ? phrase : e->canonical;
      u.begin = tokens[i].begin;
      u.end = tokens[i + len - 1].end;
      if (const auto *p = std::get_if<PositionRelation>(&e->payload)) u.position = *p;
      if (const auto *s = std::get_if<SizeRelation>(&e->payload)) u.size = *s;
      if (const auto *n = std::get_if<std::uint32_t>(&e->payload)) u.number = *n;
      units.push_back(u);
      i += len;
      matched = true;
    }
    if (matched) continue;
    Unit u;
    u.text = t.text;
    u.begin = t.begin;
    u.end = t.end;
    if (!t.text.empty() && t.text.size() <= 9 &&
        std::all_of(t.text.begin(), t.text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      u.kind = UnitKind::kNumber;
      std::from_chars(t.text.data(), t.text.data() + t.text.size(), u.number);
    }
    units.push_back(u);
    ++i;
  }
  return units;
}

bool IsWord(const Unit &u, std::initializer_list<std::string_view> words) {
  if (u.kind != UnitKind::kWord) return false;
  return std::find(words.begin(), words.end(), u.text) != words.end();
}

bool IsAttribute(const Unit &u) {
  return u.kind == UnitKind::kColor || u.kind == UnitKind::kShape ||
         u.kind == UnitKind::kOrientation;
}

bool IsBe(const Unit &u) {
  return IsWord(u, {"is", "are", "isn't", "aren't", "was", "were", "wasn't", "weren't"});
}

bool StartsClause(const Unit &u) {
  return IsWord(u, {"the", "there", "there's", "it", "i", "this", "that", "these", "those",
                    "they", "its", "a", "an", "we", "you"});
}

std::vector<Clause> SplitClauses(const std::vector<Unit> &sentence) {
  std::vector<Clause> clauses(1);
  for (std::size_t i = 0; i < sentence.size(); ++i) {
    const Unit &u = sentence[i];
    if (u.kind == UnitKind::kPunct) {
      if (!clauses.back().empty()) clauses.emplace_back();
      continue;
    }
    if (IsWord(u, {"and", "but", "while", "whereas"}) && i + 1 < sentence.size() &&
        StartsClause(sentence[i + 1])) {
      if (!clauses.back().empty()) clauses.emplace_back();
      continue;
    }
    clauses.back().push_back(u);
  }
  if (clauses.back().empty()) clauses.pop_back();
  return clauses;
}

struct Draft {
  Claim claim;
  bool polarity = false;  // Existence claims flip under negation
};

class ClauseExtractor {
 public:
  ClauseExtractor(const Clause &clause, const std::vector<Quote> &quotes, bool sentence_has_noun,
                  std::vector<Draft> *out)
      : c_(clause), quotes_(quotes), sentence_has_noun_(sentence_has_noun), out_(out) {}

  void Run() {
    Existence();
    Counting();
    Attributes();
    Relations();
    Ocr();
  }

 private:
  // Index of a noun reached from `i` by skipping determiners/attributes.
  std::optional<std::size_t> NounAfter(std::size_t i, bool allow_det, std::size_t max_attrs = 3) const {
    while (allow_det && i < c_.size() &&
           IsWord(c_[i], {"a", "an", "some", "any", "no", "not", "the", "many", "several",
                          "multiple", "also", "this", "that", "these", "those"})) {
      ++i;
    }
    std::size_t attrs = 0;
    while (i < c_.size() && IsAttribute(c_[i]) && attrs < max_attrs) {
      ++i;
      ++attrs;
    }
    if (i < c_.size() && c_[i].kind == UnitKind::kNoun) return i;
    return std::nullopt;
  }

  void Emit(FactValue value, std::size_t begin, std::size_t end, bool polarity = false) {
    out_->push_back({Claim{std::move(value), Span{begin, end}}, polarity});
  }

  void Existence() {
    std::set<std::size_t> nouns;
    auto add = [&](std::size_t start, std::size_t noun) {
      if (!nouns.insert(noun).second) return;
      Emit(ExistenceFact{c_[noun].text, true}, c_[start].begin, c_[noun].end, true);
    };
    for (std::size_t i = 0; i < c_.size(); ++i) {
      const Unit &u = c_[i];
      // there is / there's / there are
      if (IsWord(u, {"there's"})) {
        if (auto n = NounAfter(i + 1, true)) add(i, *n);
      } else if (IsWord(u, {"there"}) && i + 1 < c_.size() && IsBe(c_[i + 1])) {
        if (auto n = NounAfter(i + 2, true)) add(i, *n);
      } else if (IsBe(u) && i + 1 < c_.size() && IsWord(c_[i + 1], {"there"})) {
        if (auto n = NounAfter(i + 2, true)) add(i, *n);
      } else if (IsWord(u, {"no"})) {
        if (auto n = NounAfter(i + 1, false)) add(i, *n);
      } else if (IsWord(u, {"see", "notice", "spot", "observe"})) {
        if (auto n = NounAfter(i + 1, true)) add(i, *n);
      } else if (u.kind == UnitKind::kNoun && i + 2 < c_.size() && IsBe(c_[i + 1]) &&
                 IsWord(c_[i + 2], {"present", "visible"})) {
        add(i, i);
      }
    }
  }

  void Counting() {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].kind != UnitKind::kNumber) continue;
      bool after_there = (i >= 1 && IsWord(c_[i - 1], {"there's"})) ||
                         (i >= 2 && IsWord(c_[i - 2], {"there"}) && IsBe(c_[i - 1])) ||
                         (i >= 3 && IsWord(c_[i - 3], {"there"}) &&
                          IsWord(c_[i - 1], {"only", "exactly", "just"}));
      bool qualifier = i >= 1 && IsWord(c_[i - 1], {"only", "exactly", "just"});
      if (!(i == 0 || after_there || qualifier || sentence_has_noun_)) continue;
      CountingFact fact{c_[i].number, std::nullopt};
      std::size_t end = c_[i].end;
      if (auto n = NounAfter(i + 1, false)) {
        fact.subject = c_[*n].text;
        end = c_[*n].end;
      }
      Emit(fact, c_[i].begin, end);
    }
  }

  FactValue MakeAttribute(const Unit &attr, const std::string &subject) const {
    switch (attr.kind) {
      case UnitKind::kColor: return ColorFact{subject, attr.text};
      case UnitKind::kShape: return ShapeFact{subject, attr.text};
      default: return OrientationFact{subject, attr.text};
    }
  }

  void Attributes() {
    std::set<std::size_t> used;
    auto add = [&](std::size_t attr, std::size_t noun) {
      if (!used.insert(attr).second) return;
      std::size_t lo = std::min(attr, noun);
      std::size_t hi = std::max(attr, noun);
      Emit(MakeAttribute(c_[attr], c_[noun].text), c_[lo].begin, c_[hi].end);
    };
    for (std::size_t i = 0; i < c_.size(); ++i) {
      // <noun> is [intensifier] <attr> [and <attr>]*
      if (c_[i].kind == UnitKind::kNoun && i + 1 < c_.size() &&
          (IsBe(c_[i + 1]) || IsWord(c_[i + 1], {"looks", "appears", "seems", "look", "appear"}))) {
        std::size_t j = i + 2;
        while (j < c_.size() &&
               IsWord(c_[j], {"very", "bright", "dark", "light", "completely", "mostly",
                              "entirely", "all", "also", "clearly"})) {
          ++j;
        }
        while (j < c_.size() && IsAttribute(c_[j])) {
          add(j, i);
          if (j + 2 < c_.size() && IsWord(c_[j + 1], {"and", "or"}) && IsAttribute(c_[j + 2])) {
            j += 2;
          } else {
            break;
          }
        }
      }
      // is [the|this] <noun> <attr>
      if (IsBe(c_[i])) {
        std::size_t j = i + 1;
        while (j < c_.size() && IsWord(c_[j], {"the", "this", "that", "these", "those", "a", "an"})) ++j;
        if (j + 1 < c_.size() && c_[j].kind == UnitKind::kNoun && IsAttribute(c_[j + 1])) {
          add(j + 1, j);
        }
      }
    }
    // <attr> [<attr>...] <noun>
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!IsAttribute(c_[i])) continue;
      if (auto n = NounAfter(i + 1, false, 2)) add(i, *n);
    }
  }

  void Relations() {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].kind != UnitKind::kSpatial && c_[i].kind != UnitKind::kSize) continue;
      std::optional<std::size_t> a;
      for (std::size_t k = i; k-- > 0;) {
        if (c_[k].kind == UnitKind::kSpatial || c_[k].kind == UnitKind::kSize) break;
        if (c_[k].kind == UnitKind::kNoun) {
          a = k;
          break;
        }
      }
      std::optional<std::size_t> b;
      for (std::size_t k = i + 1; k < c_.size(); ++k) {
        if (c_[k].kind == UnitKind::kSpatial || c_[k].kind == UnitKind::kSize) break;
        if (c_[k].kind == UnitKind::kNoun) {
          b = k;
          break;
        }
      }
      if (!a || !b || c_[*a].text == c_[*b].text) continue;
      if (c_[i].kind == UnitKind::kSpatial) {
        Emit(PositionFact{c_[*a].text, c_[*b].text, c_[i].position}, c_[*a].begin, c_[*b].end);
      } else {
        Emit(SizeFact{c_[*a].text, c_[*b].text, c_[i].size}, c_[*a].begin, c_[*b].end);
      }
    }
  }

  void Ocr() {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].kind != UnitKind::kQuote) continue;
      std::string text = NormalizeOcr(quotes_[static_cast<std::size_t>(c_[i].quote)].content);
      if (text.empty()) continue;
      OcrFact fact{text, std::nullopt};
      for (std::size_t k = i; k-- > 0;) {
        if (c_[k].kind == UnitKind::kNoun) {
          fact.subject = c_[k].text;
          break;
        }
      }
      Emit(fact, c_[i].begin, c_[i].end);
    }
  }

  const Clause &c_;
  const std::vector<Quote> &quotes_;
  bool sentence_has_noun_;
  std::vector<Draft> *out_;
};

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string NormalizeOcr(std::string_view raw) {
  std::string out;
  bool pending_space = false;
  for (char ch : raw) {
    auto c = static_cast<unsigned char>(ch);
    if (c < 0x80 && std::ispunct(c)) continue;
    if (c < 0x80 && std::isspace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    out += c < 0x80 ? static_cast<char>(std::tolower(c)) : ch;
  }
  return out;
}

std::optional<bool> LeadingPolarity(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && !std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
  std::string word;
  while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) {
    word += static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
    ++i;
  }
  if (word == "yes") return true;
  if (word == "no") return false;
  return std::nullopt;
}

std::vector<Claim> ExtractClaims(const AnswerText &answer, const Lexicons &lexicons,
                                 const ExtractionContext &context) {
  if (Trim(answer.text).empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "answer text for record '" + answer.record_id + "' is empty");
  }
  const std::string &text = answer.text;
  std::vector<Quote> quotes = FindQuotes(text);
  std::vector<RawToken> tokens = Tokenize(text, quotes);
  FoldNumberGlosses(tokens, lexicons);

  std::vector<Draft> drafts;
  std::size_t start = 0;
  bool first_sentence = true;
  while (start < tokens.size()) {
    std::size_t stop = start;
    while (stop < tokens.size() && !tokens[stop].ends_sentence) ++stop;
    std::size_t end = std::min(stop + 1, tokens.size());
    std::vector<Unit> sentence = BuildUnits(tokens, start, end, lexicons);
    bool has_noun = std::any_of(sentence.begin(), sentence.end(),
                                [](const Unit &u) { return u.kind == UnitKind::kNoun; });
    std::vector<Clause> clauses = SplitClauses(sentence);

    for (std::size_t ci = 0; ci < clauses.size(); ++ci) {
      const Clause &clause = clauses[ci];
      if (first_sentence && ci == 0 && clause.size() == 1 && IsWord(clause[0], {"yes", "no"})) {
        if (context.polar_existence && context.question_subject) {
          drafts.push_back({Claim{ExistenceFact{*context.question_subject, clause[0].text == "yes"},
                                  Span{clause[0].begin, clause[0].end}},
                            false});
        }
        continue;
      }
      bool negated = std::any_of(clause.begin(), clause.end(), [&](const Unit &u) {
        return u.kind == UnitKind::kWord && lexicons.IsNegationCue(u.text);
      });
      std::vector<Draft> local;
      ClauseExtractor(clause, quotes, has_noun, &local).Run();
      for (Draft &d : local) {
        if (negated) {
          if (!d.polarity) continue;
          auto &e = std::get<ExistenceFact>(d.claim.value);
          e.present = !e.present;
        }
        drafts.push_back(std::move(d));
      }
    }
    first_sentence = false;
    start = end;
  }

  std::vector<Claim> claims;
  claims.reserve(drafts.size());
  for (Draft &d : drafts) claims.push_back(std::move(d.claim));
  std::stable_sort(claims.begin(), claims.end(), [](const Claim &a, const Claim &b) {
    if (a.source_span.begin != b.source_span.begin) return a.source_span.begin < b.source_span.begin;
    if (a.source_span.end != b.source_span.end) return a.source_span.end < b.source_span.end;
    return Index(a.vh_type()) < Index(b.vh_type());
  });
  return claims;
}

}  // namespace gvf
