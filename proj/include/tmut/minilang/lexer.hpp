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

#include <array>
#include <cctype>
#include <string>
#include <string_view>

#include "tmut/minilang/token.hpp"
#include "tmut/util/error.hpp"

namespace tmut::minilang {

inline bool is_keyword(std::string_view s) {
  static constexpr std::array<std::string_view, 10> kKeywords = {
      "fn", "var", "if", "else", "while", "return",
      "int", "float", "bool", "string"};
  for (auto k : kKeywords) {
    if (k == s) return true;
  }
  return false;
}

namespace detail {

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  TokenStream run() {
    TokenStream out;
    while (true) {
      std::string trivia = skip_trivia();
      if (pos_ >= src_.size()) {
        out.trailing = std::move(trivia);
        return out;
      }
      Token tok = next_token(out);
      tok.leading = std::move(trivia);
      tok.index = out.tokens.size();
      out.tokens.push_back(std::move(tok));
    }
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  std::string skip_trivia() {
    const std::size_t start = pos_;
    while (pos_ < src_.size()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && peek() != '\n') advance();
      } else {
        break;
      }
    }
    return std::string(src_.substr(start, pos_ - start));
  }

  // A '-' directly followed by a digit is folded into the literal unless the
  // previous token ends an operand, in which case it is a binary minus.
  static bool allows_signed_literal(const TokenStream& out) {
    if (out.tokens.empty()) return true;
    const Token& prev = out.tokens.back();
    if (prev.kind == TokenKind::Identifier || is_literal(prev.kind)) return false;
    if (prev.is(TokenKind::Punctuation, ")")) return false;
    return true;
  }

  Token make(TokenKind kind, std::size_t len) {
    Token t;
    t.kind = kind;
    t.lexeme = std::string(src_.substr(pos_, len));
    t.line = line_;
    t.col = col_;
    t.offset = pos_;
    advance(len);
    return t;
  }

  Token next_token(const TokenStream& out) {
    const char c = peek();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t len = 0;
      while (std::isalnum(static_cast<unsigned char>(peek(len))) || peek(len) == '_') ++len;
      const std::string_view word = src_.substr(pos_, len);
      TokenKind kind = TokenKind::Identifier;
      if (word == "true" || word == "false") {
        kind = TokenKind::BoolLiteral;
      } else if (is_keyword(word)) {
        kind = TokenKind::Keyword;
      }
      return make(kind, len);
    }
    const bool digit = std::isdigit(static_cast<unsigned char>(c)) != 0;
    if (digit || (c == '-' && std::isdigit(static_cast<unsigned char>(peek(1))) &&
                  allows_signed_literal(out))) {
      return number();
    }
    if (c == '"') return string_literal();

    static constexpr std::array<std::string_view, 9> kTwoChar = {
        "<=", ">=", "==", "!=", "&&", "||", "<<", ">>", "->"};
    for (auto op : kTwoChar) {
      if (src_.substr(pos_, 2) == op) {
        return make(op == "->" ? TokenKind::Punctuation : TokenKind::Operator, 2);
      }
    }
    switch (c) {
      case '+': case '-': case '*': case '/': case '%': case '<': case '>':
      case '!': case '&': case '|': case '^': case '=':
        return make(TokenKind::Operator, 1);
      case '(': case ')': case '{': case '}': case ',': case ';': case ':':
        return make(TokenKind::Punctuation, 1);
      default:
        break;
    }
    throw LexError(std::string("illegal character '") + c + "'", line_, col_);
  }

  Token number() {
    std::size_t len = 0;
    if (peek(len) == '-') ++len;
    auto digits = [&] {
      while (std::isdigit(static_cast<unsigned char>(peek(len)))) ++len;
    };
    digits();
    bool is_float = false;
    if (peek(len) == '.' && std::isdigit(static_cast<unsigned char>(peek(len + 1)))) {
      is_float = true;
      ++len;
      digits();
    }
    if (peek(len) == 'e' || peek(len) == 'E') {
      std::size_t probe = len + 1;
      if (peek(probe) == '+' || peek(probe) == '-') ++probe;
      if (std::isdigit(static_cast<unsigned char>(peek(probe)))) {
        is_float = true;
        len = probe;
        digits();
      }
    }
    if (std::isalpha(static_cast<unsigned char>(peek(len))) || peek(len) == '_') {
      throw LexError("malformed number", line_, col_);
    }
    return make(is_float ? TokenKind::FloatLiteral : TokenKind::IntLiteral, len);
  }

  Token string_literal() {
    std::size_t len = 1;
    while (true) {
      const char c = peek(len);
      if (c == '\0' && pos_ + len >= src_.size()) {
        throw LexError("unterminated string literal", line_, col_);
      }
      if (c == '\n') throw LexError("unterminated string literal", line_, col_);
      if (c == '\\') {
        const char e = peek(len + 1);
        if (e != '"' && e != '\\' && e != 'n' && e != 't') {
          throw LexError("invalid escape sequence", line_, col_);
        }
        len += 2;
        continue;
      }
      ++len;
      if (c == '"') break;
    }
    return make(TokenKind::StringLiteral, len);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace detail

inline TokenStream tokenize(std::string_view source) {
  return detail::Lexer(source).run();
}

// Decodes the escapes of a string literal lexeme (including its quotes).
inline std::string unescape_string(std::string_view lexeme) {
  std::string out;
  for (std::size_t i = 1; i + 1 < lexeme.size(); ++i) {
    if (lexeme[i] == '\\') {
      const char e = lexeme[++i];
      out += e == 'n' ? '\n' : e == 't' ? '\t' : e;
    } else {
      out += lexeme[i];
    }
  }
  return out;
}

}  // namespace tmut::minilang
