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

// Hand-derived coupling oracles for the bundled defects. Each entry names a
// mutant by operator, anchor position and replacement text; the expected
// coupled set is exactly the listed entries. Derived by running every test
// by hand against each candidate rewrite of the fixed program: a mutant is
// listed when it breaks the triggering test while every other test still
// passes.

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "support/fixtures.hpp"
#include "tmut.hpp"

namespace tmut::support {

using mutators::Operator;

struct ExpectedMutant {
  Operator op;
  std::size_t line;
  std::size_t col;
  std::string replacement;
};

struct DefectOracle {
  std::string name;
  std::vector<ExpectedMutant> coupled;
  // Source lines of the touched functions (method scope) and the touched
  // lines (line scope).
  std::size_t method_first;
  std::size_t method_last;
  std::set<std::size_t> lines;
};

inline const std::vector<DefectOracle>& defect_oracles() {
  using O = Operator;
  static const std::vector<DefectOracle> kOracles = {
      {"adult-ror", {{O::ROR, 3, 14, ">"}}, 2, 4, {3}},
      {"clamp-minmax",
       {{O::MCR, 17, 10, "max"}, {O::VAR, 17, 18, "hi"}, {O::VAR, 17, 21, "hi"}},
       16, 18, {17}},
      {"fee-globals",
       {{O::LVR, 3, 16, "-1"}, {O::LVR, 3, 16, "0"}, {O::LVR, 3, 16, "1"},
        {O::NLR, 3, 16, "10"}, {O::NLR, 3, 16, "base"},
        {O::AOR, 6, 15, "-"}, {O::AOR, 6, 19, "%"}, {O::AOR, 6, 19, "/"},
        {O::VAR, 6, 21, "base"}, {O::VAR, 6, 21, "n"}},
       5, 7, {6}},
      {"grade-nlr",
       {{O::NLR, 3, 16, "60"}, {O::NLR, 3, 16, "70"}, {O::NLR, 3, 16, "80"},
        {O::ROR, 6, 13, "=="}, {O::NLR, 6, 16, "90"},
        {O::STD, 7, 5, ""}, {O::LVR, 7, 12, "\"\""}, {O::NLR, 7, 12, "\"A\""}},
       2, 10, {6}},
      {"perimeter-lvr",
       {{O::LVR, 7, 10, "-1"}, {O::LVR, 7, 10, "0"}, {O::LVR, 7, 10, "1"}, {O::NLR, 7, 10, "h"},
        {O::VAR, 7, 15, "h"}, {O::AOR, 7, 17, "*"}, {O::AOR, 7, 17, "-"}, {O::VAR, 7, 19, "w"}},
       6, 8, {7}},
      {"range-cor",
       {{O::COR, 3, 18, "lo <= x"}, {O::COR, 3, 18, "||"}, {O::VAR, 3, 21, "hi"},
        {O::VAR, 3, 21, "lo"}, {O::ROR, 3, 23, "!="}, {O::VAR, 3, 26, "x"}},
       2, 4, {3}},
      {"status-nlr",
       {{O::ROR, 6, 12, "<"}, {O::LVR, 6, 15, "-1"}, {O::LVR, 6, 15, "0"}, {O::LVR, 6, 15, "1"},
        {O::NLR, 6, 15, "200"}, {O::NLR, 6, 15, "429"}, {O::NLR, 6, 15, "503"},
        {O::STD, 7, 5, ""}, {O::LVR, 7, 12, "\"\""}, {O::NLR, 7, 12, "\"ok\""}},
       2, 10, {6}},
      {"volume-mcr", {{O::MCR, 11, 10, "square"}}, 10, 12, {11}},
      {"width-var",
       {{O::VAR, 3, 15, "lo"}, {O::AOR, 3, 18, "%"}, {O::VAR, 3, 20, "hi"},
        {O::VAR, 4, 7, "hi"}, {O::VAR, 4, 7, "lo"},
        {O::ROR, 4, 9, "!="}, {O::ROR, 4, 9, "=="}, {O::ROR, 4, 9, ">"}, {O::ROR, 4, 9, ">="},
        {O::NLR, 4, 11, "hi"}, {O::NLR, 4, 11, "w"},
        {O::STD, 5, 5, ""}, {O::VAR, 5, 5, "hi"}, {O::VAR, 5, 5, "lo"},
        {O::LVR, 5, 9, "-1"}, {O::LVR, 5, 9, "1"},
        {O::NLR, 5, 9, "hi"}, {O::NLR, 5, 9, "lo"}, {O::NLR, 5, 9, "w"},
        {O::AOR, 5, 11, "%"}, {O::AOR, 5, 11, "*"}, {O::AOR, 5, 11, "+"}, {O::AOR, 5, 11, "/"},
        {O::VAR, 5, 13, "hi"}, {O::VAR, 5, 13, "lo"}},
       2, 8, {3}},
  };
  return kOracles;
}

// Id of the unique pool mutant matching `e`.
inline std::string resolve(const mutators::MutantPool& pool, const ExpectedMutant& e) {
  std::string found;
  for (const auto& m : pool.mutants()) {
    if (m.op == e.op && m.line == e.line && m.col == e.col && m.replacement == e.replacement) {
      if (!found.empty()) throw std::runtime_error("ambiguous oracle entry " + m.id);
      found = m.id;
    }
  }
  if (found.empty()) {
    throw std::runtime_error("oracle entry not in pool: " + std::string(mutators::to_string(e.op)) + " " +
                             std::to_string(e.line) + ":" + std::to_string(e.col) + " " + e.replacement);
  }
  return found;
}

// Expected coupled ids per scope.
struct ResolvedOracle {
  std::set<std::string> class_scope, method_scope, line_scope;
};

inline ResolvedOracle resolve(const mutators::MutantPool& pool, const DefectOracle& o) {
  ResolvedOracle r;
  for (const ExpectedMutant& e : o.coupled) {
    const std::string id = resolve(pool, e);
    r.class_scope.insert(id);
    if (o.method_first <= e.line && e.line <= o.method_last) r.method_scope.insert(id);
    if (o.lines.count(e.line)) r.line_scope.insert(id);
  }
  return r;
}

// A defect analyzed end to end with every operator.
struct AnalyzedDefect {
  harness::Defect defect;
  harness::Subject subject;
  harness::DefectResult result;
};

inline AnalyzedDefect analyze_defect(const std::filesystem::path& dir,
                                     mutators::OperatorSet ops = mutators::OperatorSet::All) {
  harness::Defect d = harness::load_defect(dir);
  harness::PipelineOptions opt;
  opt.operators = ops;
  harness::Subject s = harness::prepare_subject(d.source, d.corpus, opt);
  harness::DefectResult r;
  r.name = d.name;
  r.matrix = harness::mutation_analysis(d, s.pool);
  for (harness::Scope sc : harness::kAllScopes) {
    r.scoped[static_cast<std::size_t>(sc)] = harness::scope_filter(s.pool, s.prog, d.scope, sc);
  }
  return {std::move(d), std::move(s), std::move(r)};
}

}  // namespace tmut::support
