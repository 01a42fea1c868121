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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <string>

#include "tmut.hpp"

namespace {

using namespace tmut;
using namespace tmut::minilang;

// Index of the first token with the given lexeme, searching from `from`.
TokenIndex token_of(const TypedProgram& p, const std::string& lexeme, TokenIndex from = 0) {
  for (TokenIndex i = from; i < p.tokens().size(); ++i) {
    if (p.tokens()[i].lexeme == lexeme) return i;
  }
  throw std::runtime_error("no token " + lexeme);
}

std::map<std::string, Type> names(const std::vector<Symbol>& syms) {
  std::map<std::string, Type> out;
  for (const Symbol& s : syms) out[s.name] = s.type;
  return out;
}

void expect_type_error(const std::string& src) {
  EXPECT_THROW(compile(src), TypeCheckError) << src;
}

TEST(Checker, HomogeneousArithmetic) {
  const TypedProgram p = compile("fn f() -> int { return 1 + 2; }");
  EXPECT_EQ(p.ast.functions[0].body[0]->expr->type, Type::Int);
  const TypedProgram q = compile("fn f() -> float { return 1.5 * 2.0; }");
  EXPECT_EQ(q.ast.functions[0].body[0]->expr->type, Type::Float);
  const TypedProgram r = compile("fn f() -> string { return \"a\" + \"b\"; }");
  EXPECT_EQ(r.ast.functions[0].body[0]->expr->type, Type::String);
}

TEST(Checker, MixedOperandsRejected) {
  expect_type_error("fn f() -> int { return 1 + true; }");
  expect_type_error("fn f() -> float { return 1 + 2.0; }");
  expect_type_error("fn f() -> bool { return 1 < 2.0; }");
  expect_type_error("fn f() -> bool { return !1; }");
  expect_type_error("fn f() -> int { return 1.0 & 2.0; }");
}

TEST(Checker, CallArgumentMismatch) {
  expect_type_error("fn g(a:int) -> int { return a; }\nfn f() -> int { return g(1.0); }");
  expect_type_error("fn g(a:int) -> int { return a; }\nfn f() -> int { return g(1, 2); }");
  expect_type_error("fn f() -> int { return nope(1); }");
}

TEST(Checker, UnknownIdentifierAndWrongReturn) {
  expect_type_error("fn f() -> int { return y; }");
  expect_type_error("fn f() -> int { return true; }");
  expect_type_error("fn f() { return 1; }");
  expect_type_error("fn f() -> int { return; }");
}

TEST(Checker, MissingReturnOnSomePath) {
  expect_type_error("fn f(x:int) -> int { if (x > 0) { return 1; } }");
  EXPECT_NO_THROW(compile("fn f(x:int) -> int { if (x > 0) { return 1; } else { return 2; } }"));
  EXPECT_NO_THROW(compile("fn f(x:int) -> int { if (x > 0) { return 1; } return 2; }"));
}

TEST(Checker, ShadowingAndUnreachableRejected) {
  expect_type_error("fn f(a:int) -> int { var a:int = 1; return a; }");
  expect_type_error("var g:int = 1;\nfn f() -> int { var g:int = 2; return g; }");
  expect_type_error("fn f() -> int { return 1; var x:int = 2; }");
}

TEST(Checker, ErrorCarriesLocation) {
  try {
    compile("fn f() -> int {\n  return 1 + true;\n}");
    FAIL();
  } catch (const TypeCheckError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Checker, ConditionMustBeBool) {
  expect_type_error("fn f(x:int) { if (x) { x = 1; } }");
  expect_type_error("fn f(x:int) { while (x) { x = 1; } }");
}

TEST(Scope, InsideBodyAfterDeclaration) {
  const TypedProgram p = compile(
      "var g:string = \"s\";\n"
      "fn f(a:int) { var b:int = 0; b = a; }\n");
  const TokenIndex second_semi = token_of(p, ";", token_of(p, ";") + 1);
  const TokenIndex here = token_of(p, "b", second_semi);  // the use `b = a`
  const auto seen = names(symbols_in_scope(p, here));
  const std::map<std::string, Type> want = {
      {"a", Type::Int}, {"b", Type::Int}, {"g", Type::String}, {"f", Type::Void}};
  EXPECT_EQ(seen, want);
}

TEST(Scope, BeforeDeclarationExcludesLocal) {
  const TypedProgram p = compile(
      "var g:string = \"s\";\n"
      "fn f(a:int) { a = 1; var b:int = 0; b = a; }\n");
  const TokenIndex here = token_of(p, "a", token_of(p, "{"));  // `a = 1`
  const auto seen = names(symbols_in_scope(p, here));
  EXPECT_EQ(seen.count("a"), 1u);
  EXPECT_EQ(seen.count("b"), 0u);
  EXPECT_EQ(seen.count("g"), 1u);
  EXPECT_EQ(seen.count("f"), 1u);
}

TEST(Scope, GlobalInitializerSeesEarlierGlobalsOnly) {
  const TypedProgram p = compile(
      "var a:int = 1;\n"
      "var b:int = a + 1;\n"
      "var c:int = 2;\n"
      "fn f() -> int { return a; }\n");
  const TokenIndex here = token_of(p, "a", token_of(p, "b"));  // inside b's initializer
  const auto seen = names(symbols_in_scope(p, here));
  const std::map<std::string, Type> want = {{"a", Type::Int}, {"f", Type::Int}};
  EXPECT_EQ(seen, want);
}

TEST(Scope, BlockLocalsEndWithTheirBlock) {
  const TypedProgram p = compile(
      "fn f(x:int) -> int { if (x > 0) { var t:int = 1; x = t; } return x; }\n");
  const TokenIndex ret = token_of(p, "return");
  EXPECT_EQ(names(symbols_in_scope(p, ret)).count("t"), 0u);
}

TEST(Scope, OutsideAnyScopeGivesGlobalsAndFunctions) {
  const TypedProgram p = compile("var g:int = 1;\nfn f(a:int) { a = g; }\n");
  const TokenIndex fn_kw = token_of(p, "fn");
  const auto seen = names(symbols_in_scope(p, fn_kw));
  const std::map<std::string, Type> want = {{"g", Type::Int}, {"f", Type::Void}};
  EXPECT_EQ(seen, want);
}

}  // namespace
