// Copyright 2026 The tmut Authors
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
#include <string>
#include <string_view>
#include <vector>

namespace tmut::minilang {

enum class TokenKind {
  Identifier,
  IntLiteral,
  FloatLiteral,
  StringLiteral,
  BoolLiteral,
  Operator,
  Keyword,
  Punctuation,
};

inline std::string_view to_string(TokenKind k) {
  switch (k) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::IntLiteral: return "int-literal";
    case TokenKind::FloatLiteral: return "float-literal";
    case TokenKind::StringLiteral: return "string-literal";
    case TokenKind::BoolLiteral: return "bool-literal";
    case TokenKind::Operator: return "operator";
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Punctuation: return "punctuation";
  }
  return "?";
}

inline bool is_literal(TokenKind k) {
  return k == TokenKind::IntLiteral || k == TokenKind::FloatLiteral ||
         k == TokenKind::StringLiteral || k == TokenKind::BoolLiteral;
}

using TokenIndex = std::size_t;

struct Token {
  TokenKind kind = TokenKind::Punctuation;
  std::string lexeme;
  std::size_t line = 1;  // 1-based
  std::size_t col = 1;   // 1-based, in bytes
  TokenIndex index = 0;
  std::size_t offset = 0;  // byte offset of the lexeme in the source
  std::string leading;     // whitespace and comments preceding the lexeme

  std::size_t end() const { return offset + lexeme.size(); }
  bool is(TokenKind k, std::string_view text) const {
    return kind == k && lexeme == text;
  }
};

// Lossless token stream: leading trivia of every token plus the trailing
// trivia after the last token reproduce the source exactly.
struct TokenStream {
  std::vector<Token> tokens;
  std::string trailing;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
  const Token& operator[](TokenIndex i) const { return tokens[i]; }
  auto begin() const { return tokens.begin(); }
  auto end() const { return tokens.end(); }
};

inline std::string detokenize(const TokenStream& ts) {
  std::string out;
  for (const Token& t : ts.tokens) {
    out += t.leading;
    out += t.lexeme;
  }
  out += ts.trailing;
  return out;
}

inline std::vector<std::string> lexemes(const TokenStream& ts) {
  std::vector<std::string> out;
  out.reserve(ts.size());
  for (const Token& t : ts.tokens) out.push_back(t.lexeme);
  return out;
}

}  // namespace tmut::minilang
