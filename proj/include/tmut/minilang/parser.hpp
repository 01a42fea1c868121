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

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "tmut/minilang/ast.hpp"
#include "tmut/minilang/lexer.hpp"
#include "tmut/util/error.hpp"

namespace tmut::minilang {

// Decodes a literal lexeme; returns false on range or format errors.
inline bool decode_literal(const Token& tok, Value& out) {
  const std::string& s = tok.lexeme;
  switch (tok.kind) {
    case TokenKind::IntLiteral: {
      std::int64_t v = 0;
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || p != s.data() + s.size()) return false;
      out = v;
      return true;
    }
    case TokenKind::FloatLiteral: {
      double v = 0;
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || p != s.data() + s.size()) return false;
      out = v;
      return true;
    }
    case TokenKind::BoolLiteral:
      out = (s == "true");
      return true;
    case TokenKind::StringLiteral:
      out = unescape_string(s);
      return true;
    default:
      return false;
  }
}

namespace detail {

class Parser {
 public:
  explicit Parser(TokenStream tokens) { ast_.tokens = std::move(tokens); }

  Ast run() {
    while (!at_end()) {
      if (check(TokenKind::Keyword, "fn")) {
        ast_.functions.push_back(function());
      } else if (check(TokenKind::Keyword, "var")) {
        ast_.globals.push_back(global());
      } else {
        fail("expected 'fn' or 'var'");
      }
    }
    return std::move(ast_);
  }

 private:
  const TokenStream& ts() const { return ast_.tokens; }
  bool at_end() const { return pos_ >= ts().size(); }
  const Token& cur() const { return ts()[pos_]; }

  bool check(TokenKind k, std::string_view text) const {
    return !at_end() && cur().is(k, text);
  }
  bool check_op(std::string_view text) const { return check(TokenKind::Operator, text); }
  bool check_punct(std::string_view text) const {
    return check(TokenKind::Punctuation, text);
  }

  [[noreturn]] void fail(const std::string& what) const {
    if (at_end()) {
      std::size_t line = 1, col = 1;
      if (!ts().empty()) {
        const Token& last = ts().tokens.back();
        line = last.line;
        col = last.col + last.lexeme.size();
      }
      throw SyntaxError(what + " but found end of input", line, col);
    }
    throw SyntaxError(what + " but found '" + cur().lexeme + "'", cur().line, cur().col);
  }

  TokenIndex expect(TokenKind k, std::string_view text) {
    if (!check(k, text)) fail("expected '" + std::string(text) + "'");
    return pos_++;
  }
  TokenIndex expect_punct(std::string_view text) {
    return expect(TokenKind::Punctuation, text);
  }

  TokenIndex expect_ident() {
    if (at_end() || cur().kind != TokenKind::Identifier) fail("expected identifier");
    return pos_++;
  }

  Type type_name() {
    Type t;
    if (at_end() || cur().kind != TokenKind::Keyword || !parse_type(cur().lexeme, t)) {
      fail("expected type");
    }
    ++pos_;
    return t;
  }

  Global global() {
    Global g;
    g.span.first = expect(TokenKind::Keyword, "var");
    g.token = expect_ident();
    g.name = ts()[g.token].lexeme;
    expect_punct(":");
    g.type = type_name();
    if (check_op("=")) {
      ++pos_;
      g.init = expression();
    }
    g.span.last = expect_punct(";");
    return g;
  }

  Function function() {
    Function f;
    f.span.first = expect(TokenKind::Keyword, "fn");
    f.name_token = expect_ident();
    f.name = ts()[f.name_token].lexeme;
    expect_punct("(");
    if (!check_punct(")")) {
      while (true) {
        Param p;
        p.token = expect_ident();
        p.name = ts()[p.token].lexeme;
        expect_punct(":");
        p.type = type_name();
        f.params.push_back(std::move(p));
        if (!check_punct(",")) break;
        ++pos_;
      }
    }
    expect_punct(")");
    if (check_punct("->")) {
      ++pos_;
      f.result = type_name();
    }
    f.body_span = block_into(f.body);
    f.span.last = f.body_span.last;
    return f;
  }

  TokenSpan block_into(StmtList& out) {
    TokenSpan span;
    span.first = expect_punct("{");
    while (!check_punct("}")) {
      if (at_end()) fail("expected '}'");
      out.push_back(statement());
    }
    span.last = pos_++;
    return span;
  }

  StmtPtr statement() {
    auto s = std::make_unique<Stmt>();
    s->span.first = pos_;
    if (check(TokenKind::Keyword, "var")) {
      s->kind = StmtKind::VarDecl;
      ++pos_;
      s->name_token = expect_ident();
      s->name = ts()[s->name_token].lexeme;
      expect_punct(":");
      s->declared = type_name();
      expect(TokenKind::Operator, "=");
      s->expr = expression();
      s->span.last = expect_punct(";");
    } else if (check(TokenKind::Keyword, "if")) {
      s->kind = StmtKind::If;
      ++pos_;
      expect_punct("(");
      s->expr = expression();
      expect_punct(")");
      s->body_close = s->span.last = block_into(s->body).last;
      if (check(TokenKind::Keyword, "else")) {
        ++pos_;
        s->has_else = true;
        if (check(TokenKind::Keyword, "if")) {
          s->else_body.push_back(statement());
          s->span.last = s->else_body.back()->span.last;
        } else {
          s->span.last = block_into(s->else_body).last;
        }
      }
    } else if (check(TokenKind::Keyword, "while")) {
      s->kind = StmtKind::While;
      ++pos_;
      expect_punct("(");
      s->expr = expression();
      expect_punct(")");
      s->body_close = s->span.last = block_into(s->body).last;
    } else if (check(TokenKind::Keyword, "return")) {
      s->kind = StmtKind::Return;
      ++pos_;
      if (!check_punct(";")) s->expr = expression();
      s->span.last = expect_punct(";");
    } else if (check_punct("{")) {
      s->kind = StmtKind::Block;
      s->span = block_into(s->body);
      s->body_close = s->span.last;
    } else if (!at_end() && cur().kind == TokenKind::Identifier && pos_ + 1 < ts().size() &&
               ts()[pos_ + 1].is(TokenKind::Operator, "=")) {
      s->kind = StmtKind::Assign;
      s->name_token = pos_;
      s->name = cur().lexeme;
      pos_ += 2;
      s->expr = expression();
      s->span.last = expect_punct(";");
    } else {
      s->kind = StmtKind::ExprStmt;
      s->expr = expression();
      if (s->expr->kind != ExprKind::Call) {
        throw SyntaxError("expression statement must be a call", ts()[s->span.first].line,
                          ts()[s->span.first].col);
      }
      s->span.last = expect_punct(";");
    }
    return s;
  }

  // Binary precedence, lowest first.
  static int precedence(std::string_view op) {
    if (op == "||") return 1;
    if (op == "&&") return 2;
    if (op == "|") return 3;
    if (op == "^") return 4;
    if (op == "&") return 5;
    if (op == "==" || op == "!=") return 6;
    if (op == "<" || op == "<=" || op == ">" || op == ">=") return 7;
    if (op == "<<" || op == ">>") return 8;
    if (op == "+" || op == "-") return 9;
    if (op == "*" || op == "/" || op == "%") return 10;
    return 0;
  }

  ExprPtr expression(int min_prec = 1) {
    ExprPtr lhs = unary();
    while (!at_end() && cur().kind == TokenKind::Operator) {
      const int prec = precedence(cur().lexeme);
      if (prec == 0 || prec < min_prec) break;
      auto e = std::make_unique<Expr>();
      e->kind = ExprKind::Binary;
      e->token = pos_;
      e->text = cur().lexeme;
      ++pos_;
      ExprPtr rhs = expression(prec + 1);
      e->span = {lhs->span.first, rhs->span.last};
      e->operands.push_back(std::move(lhs));
      e->operands.push_back(std::move(rhs));
      lhs = std::move(e);
    }
    return lhs;
  }

  ExprPtr unary() {
    if (check_op("-") || check_op("!")) {
      auto e = std::make_unique<Expr>();
      e->kind = ExprKind::Unary;
      e->token = pos_;
      e->text = cur().lexeme;
      ++pos_;
      ExprPtr operand = unary();
      e->span = {e->token, operand->span.last};
      e->operands.push_back(std::move(operand));
      return e;
    }
    return primary();
  }

  ExprPtr primary() {
    if (at_end()) fail("expected expression");
    const Token& t = cur();
    if (is_literal(t.kind)) {
      auto e = std::make_unique<Expr>();
      e->kind = ExprKind::Literal;
      e->token = pos_;
      e->text = t.lexeme;
      e->span = {pos_, pos_};
      if (!decode_literal(t, e->literal)) {
        throw SyntaxError("literal out of range '" + t.lexeme + "'", t.line, t.col);
      }
      ++pos_;
      return e;
    }
    if (t.kind == TokenKind::Identifier) {
      auto e = std::make_unique<Expr>();
      e->token = pos_;
      e->text = t.lexeme;
      ++pos_;
      if (check_punct("(")) {
        e->kind = ExprKind::Call;
        ++pos_;
        if (!check_punct(")")) {
          while (true) {
            e->operands.push_back(expression());
            if (!check_punct(",")) break;
            ++pos_;
          }
        }
        e->span = {e->token, expect_punct(")")};
      } else {
        e->kind = ExprKind::Ident;
        e->span = {e->token, e->token};
      }
      return e;
    }
    if (check_punct("(")) {
      const TokenIndex open = pos_++;
      ExprPtr inner = expression();
      inner->span = {open, expect_punct(")")};
      return inner;
    }
    fail("expected expression");
  }

  Ast ast_;
  TokenIndex pos_ = 0;
};

}  // namespace detail

inline Ast parse(TokenStream tokens) {
  return detail::Parser(std::move(tokens)).run();
}

inline Ast parse_source(std::string_view source) { return parse(tokenize(source)); }

}  // namespace tmut::minilang
