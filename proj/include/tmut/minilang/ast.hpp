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
#include <memory>
#include <string>
#include <vector>

#include "tmut/minilang/token.hpp"
#include "tmut/minilang/types.hpp"

namespace tmut::minilang {

// Inclusive range of token indices.
struct TokenSpan {
  TokenIndex first = 0;
  TokenIndex last = 0;

  bool contains(TokenIndex i) const { return first <= i && i <= last; }
};

enum class ExprKind { Literal, Ident, Unary, Binary, Call };

struct Expr {
  ExprKind kind;
  TokenSpan span;          // includes enclosing parentheses
  TokenIndex token = 0;    // literal, name, or operator token
  std::string text;        // its lexeme
  std::vector<std::unique_ptr<Expr>> operands;  // unary: 1, binary: 2, call: args
  Type type = Type::Void;  // set by the type checker
  Value literal;           // decoded literal value
};

using ExprPtr = std::unique_ptr<Expr>;

enum class StmtKind { VarDecl, Assign, ExprStmt, If, While, Return, Block };

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;
using StmtList = std::vector<StmtPtr>;

struct Stmt {
  StmtKind kind;
  TokenSpan span;
  // VarDecl / Assign target.
  std::string name;
  TokenIndex name_token = 0;
  Type declared = Type::Void;
  // VarDecl/Assign value, ExprStmt call, If/While condition, Return value.
  ExprPtr expr;
  StmtList body;       // Block, If-then, While body
  TokenIndex body_close = 0;  // closing brace of `body`
  StmtList else_body;  // If-else (an `else if` is a single nested If)
  bool has_else = false;
};

struct Param {
  std::string name;
  TokenIndex token = 0;
  Type type = Type::Void;
};

struct Function {
  std::string name;
  TokenIndex name_token = 0;
  std::vector<Param> params;
  Type result = Type::Void;
  StmtList body;
  TokenSpan span;       // `fn` .. closing brace
  TokenSpan body_span;  // opening .. closing brace
};

struct Global {
  std::string name;
  TokenIndex token = 0;
  Type type = Type::Void;
  ExprPtr init;  // may be null
  TokenSpan span;
};

struct Ast {
  TokenStream tokens;
  std::vector<Global> globals;
  std::vector<Function> functions;
};

}  // namespace tmut::minilang
