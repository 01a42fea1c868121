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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tmut/cfg/cfg.hpp"
#include "tmut/minilang/checker.hpp"
#include "tmut/mutators/mutant.hpp"

namespace tmut::mutators {

// Shared state for the generators: the program, its CFGs, and the
// token-to-node map used to key mutants to locations.
class GenContext {
 public:
  GenContext(const minilang::TypedProgram& prog, const std::vector<cfg::Cfg>& cfgs)
      : prog_(prog), cfgs_(cfgs), locator_(cfgs, prog.tokens().size()) {}

  const minilang::TypedProgram& program() const { return prog_; }
  const std::vector<cfg::Cfg>& cfgs() const { return cfgs_; }

  std::string text(TokenSpan span) const {
    const auto& toks = prog_.tokens();
    const std::size_t from = toks[span.first].offset;
    return prog_.source.substr(from, toks[span.last].end() - from);
  }

  // Appends a mutant unless the anchor lies outside every executable node
  // or the rewrite is a no-op.
  void emit(std::vector<Mutant>& out, Operator op, TokenSpan span, TokenIndex anchor,
            std::string replacement) const {
    const std::optional<NodeRef> where = locator_.at(anchor);
    if (!where) return;
    std::string original = text(span);
    if (original == replacement) return;
    Mutant m;
    m.id = make_mutant_id(op, anchor, replacement);
    m.op = op;
    m.cfg_owner = cfgs_[where->cfg].owner;
    m.location = *where;
    m.token = anchor;
    m.span = span;
    m.original = std::move(original);
    m.replacement = std::move(replacement);
    m.line = prog_.tokens()[anchor].line;
    m.col = prog_.tokens()[anchor].col;
    out.push_back(std::move(m));
  }

 private:
  const minilang::TypedProgram& prog_;
  const std::vector<cfg::Cfg>& cfgs_;
  cfg::NodeLocator locator_;
};

inline void for_each_expr(const minilang::Expr& e,
                          const std::function<void(const minilang::Expr&)>& fn) {
  fn(e);
  for (const minilang::ExprPtr& c : e.operands) for_each_expr(*c, fn);
}

// Visits every statement, depth first, with its enclosing function.
inline void for_each_stmt(
    const minilang::StmtList& list, const minilang::Function& f,
    const std::function<void(const minilang::Stmt&, const minilang::Function&)>& fn) {
  for (const minilang::StmtPtr& s : list) {
    fn(*s, f);
    for_each_stmt(s->body, f, fn);
    for_each_stmt(s->else_body, f, fn);
  }
}

// Visits every expression of the program: global initializers, then
// function bodies in declaration order.
inline void for_each_program_expr(const minilang::TypedProgram& prog,
                                  const std::function<void(const minilang::Expr&)>& fn) {
  for (const minilang::Global& g : prog.ast.globals) {
    if (g.init) for_each_expr(*g.init, fn);
  }
  for (const minilang::Function& f : prog.ast.functions) {
    for_each_stmt(f.body, f, [&](const minilang::Stmt& s, const minilang::Function&) {
      if (s.expr) for_each_expr(*s.expr, fn);
    });
  }
}

}  // namespace tmut::mutators
