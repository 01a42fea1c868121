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

#include <algorithm>
#include <string>
#include <vector>

#include "tmut/mutators/context.hpp"

namespace tmut::mutators {

namespace detail {

// Names of in-scope variables (locals, params, globals) of type `type`,
// other than `except`, sorted.
inline std::vector<std::string> compatible_variables(const minilang::TypedProgram& prog,
                                                     TokenIndex at, minilang::Type type,
                                                     const std::string& except) {
  std::vector<std::string> names;
  for (const minilang::Symbol& s : minilang::symbols_in_scope(prog, at)) {
    if (s.is_variable() && s.type == type && s.name != except) names.push_back(s.name);
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

}  // namespace detail

// VAR: every variable use (including assignment targets) replaced by each
// other in-scope variable of the same type.
inline std::vector<Mutant> generate_var(const minilang::TypedProgram& prog,
                                        const std::vector<cfg::Cfg>& cfgs) {
  GenContext ctx(prog, cfgs);
  std::vector<Mutant> out;
  auto mutate_use = [&](TokenIndex use) {
    const minilang::Symbol* sym = prog.resolve(use);
    if (!sym || !sym->is_variable()) return;
    for (const std::string& alt : detail::compatible_variables(prog, use, sym->type, sym->name)) {
      ctx.emit(out, Operator::VAR, {use, use}, use, alt);
    }
  };
  for (const minilang::Global& g : prog.ast.globals) {
    if (!g.init) continue;
    for_each_expr(*g.init, [&](const minilang::Expr& e) {
      if (e.kind == minilang::ExprKind::Ident) mutate_use(e.token);
    });
  }
  for (const minilang::Function& f : prog.ast.functions) {
    for_each_stmt(f.body, f, [&](const minilang::Stmt& s, const minilang::Function&) {
      if (s.kind == minilang::StmtKind::Assign) mutate_use(s.name_token);
      if (!s.expr) return;
      for_each_expr(*s.expr, [&](const minilang::Expr& e) {
        if (e.kind == minilang::ExprKind::Ident) mutate_use(e.token);
      });
    });
  }
  return out;
}

// MCR: every call's callee replaced by each other function with the same
// parameter types and result type.
inline std::vector<Mutant> generate_mcr(const minilang::TypedProgram& prog,
                                        const std::vector<cfg::Cfg>& cfgs) {
  GenContext ctx(prog, cfgs);
  std::vector<Mutant> out;
  for_each_program_expr(prog, [&](const minilang::Expr& e) {
    if (e.kind != minilang::ExprKind::Call) return;
    const auto callee = prog.function_index(e.text);
    if (!callee) return;
    std::vector<std::string> alts;
    for (std::size_t i = 0; i < prog.functions.size(); ++i) {
      if (i != *callee && prog.functions[i].same_signature(prog.functions[*callee])) {
        alts.push_back(prog.ast.functions[i].name);
      }
    }
    std::sort(alts.begin(), alts.end());
    for (const std::string& alt : alts) ctx.emit(out, Operator::MCR, {e.token, e.token}, e.token, alt);
  });
  return out;
}

}  // namespace tmut::mutators
