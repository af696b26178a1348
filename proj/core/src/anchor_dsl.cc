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

#include "gvf/anchor_dsl.h"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "gvf/claim_extraction.h"
#include "gvf/error.h"

namespace gvf {

namespace {

bool IsBlank(char c) { return c == ' ' || c == '\t'; }

std::string Upper(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

[[noreturn]] void Malformed(const std::string &why, std::size_t pos) {
  throw Error(ErrorCode::kMalformedToken, why, pos);
}

[[noreturn]] void Mismatch(const DslToken &token, const std::string &why) {
  throw Error(ErrorCode::kTypeMismatch, std::string(VhTypeToken(token.vh_type)) + " payload '" +
                                            token.payload + "': " + why);
}

// Longest type token at the start of `s` that is followed by '_' or the end.
std::optional<VhType> MatchTypePrefix(std::string_view s, std::size_t *length) {
  std::optional<VhType> best;
  std::size_t best_len = 0;
  for (VhType t : kAllVhTypes) {
    std::string_view tok = VhTypeToken(t);
    if (s.substr(0, tok.size()) != tok) continue;
    if (s.size() > tok.size() && s[tok.size()] != '_') continue;
    if (tok.size() > best_len) {
      best = t;
      best_len = tok.size();
    }
  }
  *length = best_len;
  return best;
}

bool IsWireSubject(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!((c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_')) return false;
  }
  return IsCanonicalToken(Lower(s));
}

void CheckPayloadChars(std::string_view payload, std::size_t offset) {
  for (std::size_t i = 0; i < payload.size(); ++i) {
    if (payload[i] == '[' || payload[i] == ']') Malformed("bracket inside value", offset + i);
  }
  if (!payload.empty() && IsBlank(payload.back())) {
    Malformed("trailing whitespace in value", offset + payload.size() - 1);
  }
}

std::optional<std::uint32_t> ParseCount(std::string_view s) {
  if (s.empty() || s.size() > 9) return std::nullopt;
  if (!std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return std::nullopt;
  }
  std::uint32_t n = 0;
  std::from_chars(s.data(), s.data() + s.size(), n);
  return n;
}

struct Triple {
  std::string a;
  std::string relation;  // uppercase relation token
  std::string b;
};

// Split "dog_left_of_cat" into (dog, LEFT_OF, cat). Exactly one relation
// occurrence with non-empty sides is accepted.
template <typename Relation, std::size_t N>
std::optional<Triple> SplitRelational(std::string_view subject,
                                      const std::array<Relation, N> &relations) {
  std::vector<std::string> words;
  std::string lower = Lower(subject);
  std::size_t start = 0;
  while (start <= lower.size()) {
    std::size_t cut = lower.find('_', start);
    if (cut == std::string::npos) cut = lower.size();
    words.push_back(lower.substr(start, cut - start));
    start = cut + 1;
  }
  std::optional<Triple> found;
  int hits = 0;
  for (Relation r : relations) {
    std::string rel = Lower(RelationToken(r));
    std::vector<std::string> rel_words;
    std::size_t s = 0;
    while (s <= rel.size()) {
      std::size_t cut = rel.find('_', s);
      if (cut == std::string::npos) cut = rel.size();
      rel_words.push_back(rel.substr(s, cut - s));
      s = cut + 1;
    }
    for (std::size_t i = 1; i + rel_words.size() < words.size(); ++i) {
      if (!std::equal(rel_words.begin(), rel_words.end(), words.begin() + i)) continue;
      auto join = [&](std::size_t from, std::size_t to) {
        std::string out;
        for (std::size_t k = from; k < to; ++k) {
          if (k > from) out += '_';
          out += words[k];
        }
        return out;
      };
      ++hits;
      found = Triple{join(0, i), std::string(RelationToken(r)),
                     join(i + rel_words.size(), words.size())};
    }
  }
  if (hits != 1) return std::nullopt;
  return found;
}

std::optional<bool> ParseBool(std::string_view payload) {
  std::string up = Upper(payload);
  if (up == "TRUE") return true;
  if (up == "FALSE") return false;
  return std::nullopt;
}

std::string AttributePayload(const DslToken &token, const Lexicons &lexicons) {
  std::string lower = Lower(token.payload);
  std::optional<std::string> canonical;
  switch (token.vh_type) {
    case VhType::kColor: canonical = lexicons.CanonicalColor(lower); break;
    case VhType::kShape: canonical = lexicons.CanonicalShape(lower); break;
    case VhType::kOrientation: canonical = lexicons.CanonicalOrientation(lower); break;
    default: break;
  }
  if (!canonical) Mismatch(token, "not in the lexicon");
  return *canonical;
}

}  // namespace

DslToken ParseToken(std::string_view text) {
  if (text.empty() || text.front() != '[') Malformed("token must start with '['", 0);
  if (text.back() != ']') Malformed("unbalanced brackets", text.size());
  for (std::size_t i = 1; i + 1 < text.size(); ++i) {
    if (text[i] == '[' || text[i] == ']') Malformed("unbalanced brackets", i);
  }
  std::string_view inner = text.substr(1, text.size() - 2);
  const std::size_t colon = inner.find(':');
  if (colon == std::string_view::npos) Malformed("missing ':'", text.size() - 1);
  std::string_view head = inner.substr(0, colon);
  std::size_t pos = colon + 1;
  while (pos < inner.size() && IsBlank(inner[pos])) ++pos;
  std::string_view body = inner.substr(pos);
  const std::size_t body_offset = 1 + pos;

  DslToken token;
  if (head == "FACT") {
    std::size_t eq = body.find('=');
    if (eq == std::string_view::npos) Malformed("missing '='", body_offset + body.size());
    std::string_view lhs = body.substr(0, eq);
    while (!lhs.empty() && IsBlank(lhs.back())) lhs.remove_suffix(1);
    std::size_t value_pos = eq + 1;
    while (value_pos < body.size() && IsBlank(body[value_pos])) ++value_pos;
    std::string_view value = body.substr(value_pos);

    std::size_t type_len = 0;
    auto type = MatchTypePrefix(lhs, &type_len);
    if (!type) Malformed("unknown type token '" + std::string(lhs) + "'", body_offset);
    token.vh_type = *type;
    if (type_len < lhs.size()) {
      std::string_view subject = lhs.substr(type_len + 1);
      if (!IsWireSubject(subject)) {
        Malformed("invalid subject '" + std::string(subject) + "'", body_offset + type_len + 1);
      }
      token.subject = Lower(subject);
    }
    if (value.empty()) Malformed("empty value", body_offset + value_pos);
    CheckPayloadChars(value, body_offset + value_pos);
    token.payload = std::string(value);
    token.kind = value == "?" ? TokenKind::kQuery : TokenKind::kFact;
    return token;
  }

  bool check = false;
  std::string_view type_text;
  if (head.substr(0, 6) == "CHECK_") {
    check = true;
    type_text = head.substr(6);
  } else if (head.substr(0, 5) == "FACT_") {
    type_text = head.substr(5);
  } else {
    Malformed("unknown head '" + std::string(head) + "'", 1);
  }
  auto type = VhTypeFromToken(type_text);
  if (!type) Malformed("unknown type token '" + std::string(type_text) + "'", 1 + head.size() - type_text.size());
  token.vh_type = *type;
  if (body.empty()) Malformed("empty value", body_offset);
  CheckPayloadChars(body, body_offset);
  token.payload = std::string(body);
  if (body == "?") {
    if (check) Malformed("CHECK tokens cannot be queries", body_offset);
    token.kind = TokenKind::kQuery;
  } else {
    token.kind = check ? TokenKind::kCheck : TokenKind::kFact;
  }
  return token;
}

FactualAnchor ToAnchor(const DslToken &token, const std::optional<std::string> &context_subject,
                       const Lexicons &lexicons) {
  if (token.kind != TokenKind::kFact) {
    throw Error(ErrorCode::kInvalidArgument, "only FACT tokens with a value convert to anchors");
  }
  const std::optional<std::string> &subject = token.subject ? token.subject : context_subject;
  auto require_subject = [&]() -> const std::string & {
    if (!subject) {
      throw Error(ErrorCode::kMissingSubject,
                  std::string(VhTypeToken(token.vh_type)) + " fact needs a subject");
    }
    return *subject;
  };

  switch (token.vh_type) {
    case VhType::kCounting: {
      auto n = ParseCount(token.payload);
      if (!n) Mismatch(token, "expected a non-negative integer");
      return FactualAnchor(CountingFact{*n, token.subject});
    }
    case VhType::kExistence: {
      auto present = ParseBool(token.payload);
      if (!present) Mismatch(token, "expected TRUE or FALSE");
      return FactualAnchor(ExistenceFact{require_subject(), *present});
    }
    case VhType::kColor: {
      std::string color = AttributePayload(token, lexicons);
      return FactualAnchor(ColorFact{require_subject(), color});
    }
    case VhType::kShape: {
      std::string shape = AttributePayload(token, lexicons);
      return FactualAnchor(ShapeFact{require_subject(), shape});
    }
    case VhType::kOrientation: {
      std::string orientation = AttributePayload(token, lexicons);
      return FactualAnchor(OrientationFact{require_subject(), orientation});
    }
    case VhType::kOcr: {
      std::string text = NormalizeOcr(token.payload);
      if (text.empty()) Mismatch(token, "OCR text is empty after normalization");
      return FactualAnchor(OcrFact{text, token.subject});
    }
    case VhType::kSize:
    case VhType::kPosition: {
      if (!token.subject) {
        throw Error(ErrorCode::kMissingSubject, "relational fact needs a SUBJ_REL_SUBJ segment");
      }
      auto holds = ParseBool(token.payload);
      if (!holds) Mismatch(token, "expected TRUE");
      if (!*holds) Mismatch(token, "negated relational facts are not representable");
      if (token.vh_type == VhType::kSize) {
        auto t = SplitRelational(*token.subject, kAllSizeRelations);
        if (!t) Mismatch(token, "cannot find exactly one size relation in '" + *token.subject + "'");
        return FactualAnchor(SizeFact{t->a, t->b, *SizeRelationFromToken(t->relation)});
      }
      auto t = SplitRelational(*token.subject, kAllPositionRelations);
      if (!t) Mismatch(token, "cannot find exactly one position relation in '" + *token.subject + "'");
      return FactualAnchor(PositionFact{t->a, t->b, *PositionRelationFromToken(t->relation)});
    }
  }
  Mismatch(token, "unsupported type");
}

FactualAnchor ParseAnchor(std::string_view text, const Lexicons &lexicons) {
  return ToAnchor(ParseToken(text), std::nullopt, lexicons);
}

AnchorSet ParseAnchorSet(const std::vector<std::string> &tokens, const Lexicons &lexicons) {
  std::vector<FactualAnchor> anchors;
  anchors.reserve(tokens.size());
  for (const std::string &t : tokens) anchors.push_back(ParseAnchor(t, lexicons));
  return AnchorSet(std::move(anchors));
}

namespace {

// "SUBJ=VALUE" part of a FACT token, or the CHECK payload when `check`.
void AppendBody(std::string &out, const FactValue &value, bool check) {
  std::visit(
      [&](const auto &v) {
        using T = std::decay_t<decltype(v)>;
        auto subject_value = [&](const std::string &subject, const std::string &val) {
          if (check) {
            out += Upper(val);
          } else {
            out += "_" + Upper(subject) + "=" + Upper(val);
          }
        };
        if constexpr (std::is_same_v<T, ExistenceFact>) {
          if (check) {
            if (!v.present) {
              throw Error(ErrorCode::kInvalidArgument, "existence checks assert presence");
            }
            out += Upper(v.subject);
          } else {
            out += "_" + Upper(v.subject) + (v.present ? "=TRUE" : "=FALSE");
          }
        } else if constexpr (std::is_same_v<T, ShapeFact>) {
          subject_value(v.subject, v.shape);
        } else if constexpr (std::is_same_v<T, ColorFact>) {
          subject_value(v.subject, v.color);
        } else if constexpr (std::is_same_v<T, OrientationFact>) {
          subject_value(v.subject, v.orientation);
        } else if constexpr (std::is_same_v<T, SizeFact> || std::is_same_v<T, PositionFact>) {
          std::string triple = Upper(v.subject_a) + "_" + std::string(RelationToken(v.relation)) +
                               "_" + Upper(v.subject_b);
          out += check ? triple : "_" + triple + "=TRUE";
        } else if constexpr (std::is_same_v<T, OcrFact>) {
          if (!check && v.subject) out += "_" + Upper(*v.subject);
          out += (check ? "" : "=") + Upper(v.text);
        } else if constexpr (std::is_same_v<T, CountingFact>) {
          if (!check && v.subject) out += "_" + Upper(*v.subject);
          out += (check ? "" : "=") + std::to_string(v.count);
        }
      },
      value);
}

}  // namespace

std::string Serialize(const FactValue &value) {
  std::string out = "[FACT: ";
  out += VhTypeToken(TypeOf(value));
  AppendBody(out, value, false);
  out += "]";
  return out;
}

std::vector<std::string> Serialize(const AnchorSet &anchors) {
  std::vector<std::string> out;
  out.reserve(anchors.size());
  for (const FactualAnchor &a : anchors) out.push_back(Serialize(a));
  return out;
}

std::string SerializeQuery(VhType type, const std::optional<std::string> &subject) {
  std::string out = "[FACT: ";
  out += VhTypeToken(type);
  if (subject) out += "_" + Upper(*subject);
  out += "=?]";
  return out;
}

std::string SerializeCheck(const FactValue &perturbed) {
  std::string out = "[CHECK_";
  out += VhTypeToken(TypeOf(perturbed));
  out += ": ";
  AppendBody(out, perturbed, true);
  out += "]";
  return out;
}

FactValue CheckTokenValue(const DslToken &token, const std::optional<std::string> &subject,
                          const Lexicons &lexicons) {
  if (token.kind != TokenKind::kCheck) {
    throw Error(ErrorCode::kInvalidArgument, "not a CHECK token");
  }
  DslToken fact = token;
  fact.kind = TokenKind::kFact;
  switch (token.vh_type) {
    case VhType::kExistence:
      fact.subject = Lower(token.payload);
      fact.payload = "TRUE";
      if (!IsWireSubject(token.payload)) Mismatch(token, "expected an object name");
      return ToAnchor(fact, std::nullopt, lexicons).value();
    case VhType::kSize:
    case VhType::kPosition:
      if (!IsWireSubject(token.payload)) Mismatch(token, "expected SUBJ_REL_SUBJ");
      fact.subject = Lower(token.payload);
      fact.payload = "TRUE";
      return ToAnchor(fact, std::nullopt, lexicons).value();
    case VhType::kCounting:
    case VhType::kOcr:
      fact.subject = subject;
      return ToAnchor(fact, std::nullopt, lexicons).value();
    default:
      fact.subject = std::nullopt;
      return ToAnchor(fact, subject, lexicons).value();
  }
}

std::vector<LocatedToken> FindTokens(std::string_view text) {
  std::vector<LocatedToken> out;
  std::size_t pos = 0;
  while ((pos = text.find_first_of("[]", pos)) != std::string_view::npos) {
    if (text[pos] == ']') Malformed("unbalanced ']'", pos);
    std::size_t close = text.find(']', pos);
    std::size_t reopen = text.find('[', pos + 1);
    if (close == std::string_view::npos || (reopen != std::string_view::npos && reopen < close)) {
      Malformed("unbalanced '['", pos);
    }
    std::string_view segment = text.substr(pos, close - pos + 1);
    try {
      out.push_back({ParseToken(segment), pos, segment.size()});
    } catch (const Error &e) {
      throw Error(ErrorCode::kMalformedToken, "in '" + std::string(segment) + "'",
                  pos + e.position().value_or(0));
    }
    pos = close + 1;
  }
  return out;
}

}  // namespace gvf
