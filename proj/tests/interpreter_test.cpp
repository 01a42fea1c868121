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

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "support/fixtures.hpp"
#include "tmut.hpp"

namespace {

using namespace tmut;
using namespace tmut::minilang;

TestCase make_test(std::string callee, std::vector<Value> inputs, std::optional<Value> expected) {
  TestCase t;
  t.name = "t";
  t.callee = std::move(callee);
  t.inputs = std::move(inputs);
  t.expected = std::move(expected);
  return t;
}

TEST(Interpreter, ReturnOnePasses) {
  const TypedProgram p = compile("fn f() -> int { return 1; }");
  EXPECT_EQ(run_test(p, make_test("f", {}, Value(std::int64_t{1}))), Verdict::Pass);
  EXPECT_EQ(run_test(p, make_test("f", {}, Value(std::int64_t{2}))), Verdict::Fail);
}

TEST(Interpreter, DivisionByZeroIsRuntimeError) {
  const TypedProgram p = compile("fn f() -> int { return 1 / 0; }");
  EXPECT_EQ(run_test(p, make_test("f", {}, Value(std::int64_t{1}))), Verdict::RuntimeError);
  // A test expecting the failure passes.
  EXPECT_EQ(run_test(p, make_test("f", {}, std::nullopt)), Verdict::Pass);
  const TypedProgram q = compile("fn f() -> int { return 1 % 0; }");
  EXPECT_EQ(execute(q, "f", {}).status, ExecStatus::RuntimeError);
  const TypedProgram r = compile("fn f() -> float { return 1.0 / 0.0; }");
  EXPECT_EQ(execute(r, "f", {}).status, ExecStatus::RuntimeError);
}

TEST(Interpreter, DivergentLoopTimesOut) {
  const TypedProgram p = compile("fn f() { while (true) { } }");
  const ExecResult r = execute(p, "f", {});
  EXPECT_EQ(r.status, ExecStatus::Timeout);
  EXPECT_EQ(run_test(p, make_test("f", {}, std::nullopt), kDefaultStepLimit), Verdict::Timeout);
}

TEST(Interpreter, RunawayRecursionIsRuntimeError) {
  const TypedProgram p = compile("fn f(n:int) -> int { return f(n + 1); }");
  EXPECT_EQ(execute(p, "f", {Value(std::int64_t{0})}).status, ExecStatus::RuntimeError);
}

TEST(Interpreter, IntegerArithmeticWraps) {
  const TypedProgram p = compile("fn f(a:int) -> int { return a + 1; }");
  const ExecResult r = execute(p, "f", {Value(std::numeric_limits<std::int64_t>::max())});
  ASSERT_EQ(r.status, ExecStatus::Ok);
  EXPECT_EQ(std::get<std::int64_t>(r.value), std::numeric_limits<std::int64_t>::min());
}

TEST(Interpreter, ControlFlowAndCalls) {
  const TypedProgram p = compile(
      "var base:int = 10;\n"
      "fn sq(x:int) -> int { return x * x; }\n"
      "fn f(n:int) -> int {\n"
      "  var s:int = 0;\n"
      "  var i:int = 0;\n"
      "  while (i < n) { if (i % 2 == 0) { s = s + sq(i); } i = i + 1; }\n"
      "  return s + base;\n"
      "}\n");
  // 0 + 4 + 16 + 10
  const ExecResult r = execute(p, "f", {Value(std::int64_t{5})});
  ASSERT_EQ(r.status, ExecStatus::Ok);
  EXPECT_EQ(std::get<std::int64_t>(r.value), 30);
}

TEST(Interpreter, ShortCircuitAvoidsFault) {
  const TypedProgram p = compile("fn f(x:int) -> bool { return x != 0 && 10 / x > 1; }");
  const ExecResult r = execute(p, "f", {Value(std::int64_t{0})});
  ASSERT_EQ(r.status, ExecStatus::Ok);
  EXPECT_FALSE(std::get<bool>(r.value));
}

TEST(Interpreter, GlobalsReinitializedEachCall) {
  const TypedProgram p = compile(
      "var c:int = 0;\n"
      "fn f() -> int { c = c + 1; return c; }\n");
  for (int i = 0; i < 3; ++i) {
    const ExecResult r = execute(p, "f", {});
    ASSERT_EQ(r.status, ExecStatus::Ok);
    EXPECT_EQ(std::get<std::int64_t>(r.value), 1);
  }
}

TEST(Interpreter, StringsAndFloats) {
  const TypedProgram p = compile(
      "fn f(s:string) -> string { if (s < \"m\") { return s + \"!\"; } return \"\"; }\n"
      "fn g(x:float) -> float { return x * 0.5; }\n");
  EXPECT_EQ(std::get<std::string>(execute(p, "f", {Value(std::string("a"))}).value), "a!");
  EXPECT_EQ(std::get<std::string>(execute(p, "f", {Value(std::string("z"))}).value), "");
  EXPECT_EQ(std::get<double>(execute(p, "g", {Value(3.0)}).value), 1.5);
}

TEST(Interpreter, FloatExpectationComparesExactly) {
  const TypedProgram p = compile("fn f() -> float { return 0.1 + 0.2; }");
  EXPECT_EQ(run_test(p, make_test("f", {}, Value(0.1 + 0.2))), Verdict::Pass);
  EXPECT_EQ(run_test(p, make_test("f", {}, Value(0.3))), Verdict::Fail);
}

TEST(Interpreter, DeterministicVerdicts) {
  for (const auto& dir : support::defect_dirs()) {
    const harness::Defect d = harness::load_defect(dir);
    const TypedProgram p = compile(d.source);
    for (const TestCase& t : d.tests) {
      const Verdict first = run_test(p, t);
      for (int k = 0; k < 3; ++k) EXPECT_EQ(run_test(p, t), first) << dir << " " << t.name;
    }
  }
}

TEST(TestCases, ValidateRejectsBadSignatures) {
  const TypedProgram p = compile("fn f(a:int) -> int { return a; }");
  EXPECT_THROW(validate_test(p, make_test("g", {Value(std::int64_t{1})}, std::nullopt)), Error);
  EXPECT_THROW(validate_test(p, make_test("f", {}, std::nullopt)), Error);
  EXPECT_THROW(validate_test(p, make_test("f", {Value(1.0)}, std::nullopt)), Error);
  EXPECT_THROW(validate_test(p, make_test("f", {Value(std::int64_t{1})}, Value(true))), Error);
  EXPECT_NO_THROW(validate_test(p, make_test("f", {Value(std::int64_t{1})}, Value(std::int64_t{1}))));
}

TEST(TestCases, JsonRoundTrip) {
  std::vector<TestCase> tests;
  tests.push_back(make_test("f", {Value(std::int64_t{-3}), Value(2.5), Value(true), Value(std::string("q\""))},
                            Value(std::int64_t{4})));
  tests.push_back(make_test("g", {}, std::nullopt));
  tests[1].triggering = true;
  const auto back = tests_from_json(tests_to_json(tests));
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].callee, "f");
  ASSERT_EQ(back[0].inputs.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_TRUE(same_value(back[0].inputs[i], tests[0].inputs[i]));
  EXPECT_TRUE(same_value(*back[0].expected, Value(std::int64_t{4})));
  EXPECT_FALSE(back[0].triggering);
  EXPECT_FALSE(back[1].expected.has_value());
  EXPECT_TRUE(back[1].triggering);
  EXPECT_EQ(tests_to_json(back), tests_to_json(tests));
}

}  // namespace
