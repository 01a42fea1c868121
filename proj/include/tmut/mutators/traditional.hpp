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
#include <string>
#include <string_view>
#include <vector>

#include "tmut/mutators/context.hpp"
#include "tmut/mutators/literal.hpp"

namespace tmut::mutators {

namespace detail {

using minilang::Expr;
using minilang::ExprKind;
using minilang::Type;

inline constexpr std::array<std::string_view, 6> kRelational = {"<", "<=", ">", ">=", "==", "!="};
inline constexpr std::array<std::string_view, 5> kArithmetic = {"+", "-", "*", "/", "%"};
inline constexpr std::array<std::string_view, 3> kBitwise = {"&", "|", "^"};
inline constexpr std::array<std::string_view, 2> kShift = {"<<", ">>"};

template <std::size_t N>
bool in(const std::array<std::string_view, N>& set, std::string_view op) {
  for (auto s : set) {
    if (s == op) return true;
  }
  return false;
}

// Replaces a binary operator token by every other member of its family
// that type-checks on the same operands.
template <std::size_t N>
void swap_operator(const GenContext& ctx, std::vector<Mutant>& out, Operator op, const Expr& e,
                   const std::array<std::string_view, N>& family) {
  const Type operand = e.operands[0]->type;
  for (auto alt : family) {
    if (alt == e.text) continue;
    if (!minilang::binary_result(alt, operand, operand)) continue;
    ctx.emit(out, op, {e.token, e.token}, e.token, std::string(alt));
  }
}

inline void lvr(const GenContext& ctx, std::vector<Mutant>& out, const Expr& e) {
  const TokenSpan at{e.token, e.token};
  auto numeric = [&](std::initializer_list<std::string_view> values) {
    const CanonicalNumber orig = canonicalize_numeric_literal(e.text);
    for (auto v : values) {
      if (canonicalize_numeric_literal(v) == orig) continue;
      ctx.emit(out, Operator::LVR, at, e.token, std::string(v));
    }
  };
  switch (e.type) {
    case Type::Int:
      numeric({"-1", "0", "1"});
      break;
    case Type::Float:
      numeric({"-1.0", "0.0", "1.0"});
      break;
    case Type::Bool:
      ctx.emit(out, Operator::LVR, at, e.token, e.text == "true" ? "false" : "true");
      break;
    case Type::String:
      ctx.emit(out, Operator::LVR, at, e.token, "\"\"");
      break;
    default:
      break;
  }
}

}  // namespace detail

// ROR, COR, AOR, ORU, LOR, SOR, STD and LVR mutants of a program.
inline std::vector<Mutant> generate_traditional(const minilang::TypedProgram& prog,
                                                const std::vector<cfg::Cfg>& cfgs) {
  using namespace detail;
  GenContext ctx(prog, cfgs);
  std::vector<Mutant> out;

  for_each_program_expr(prog, [&](const Expr& e) {
    if (e.kind == ExprKind::Binary) {
      const Type operand = e.operands[0]->type;
      if (in(kRelational, e.text)) {
        swap_operator(ctx, out, Operator::ROR, e, kRelational);
      } else if (e.text == "&&" || e.text == "||") {
        ctx.emit(out, Operator::COR, {e.token, e.token}, e.token, e.text == "&&" ? "||" : "&&");
        ctx.emit(out, Operator::COR, e.span, e.token, ctx.text(e.operands[0]->span));
        ctx.emit(out, Operator::COR, e.span, e.token, ctx.text(e.operands[1]->span));
        ctx.emit(out, Operator::COR, e.span, e.token, "true");
        ctx.emit(out, Operator::COR, e.span, e.token, "false");
      } else if (in(kArithmetic, e.text) && minilang::is_numeric(operand)) {
        swap_operator(ctx, out, Operator::AOR, e, kArithmetic);
      } else if (in(kBitwise, e.text)) {
        swap_operator(ctx, out, Operator::LOR, e, kBitwise);
      } else if (in(kShift, e.text)) {
        swap_operator(ctx, out, Operator::SOR, e, kShift);
      }
    } else if (e.kind == ExprKind::Unary) {
      ctx.emit(out, Operator::ORU, {e.token, e.token}, e.token, "");
    } else if (e.kind == ExprKind::Literal) {
      lvr(ctx, out, e);
    }
  });

  // STD: simple statements only; declarations are exempt and a deletion that
  // would let a value-returning function fall off its end is skipped.
  for (const minilang::Function& f : prog.ast.functions) {
    for_each_stmt(f.body, f, [&](const minilang::Stmt& s, const minilang::Function& fn) {
      using minilang::StmtKind;
      if (s.kind != StmtKind::Assign && s.kind != StmtKind::ExprStmt &&
          s.kind != StmtKind::Return) {
        return;
      }
      if (fn.result != Type::Void && minilang::list_completes_normally(fn.body, &s)) return;
      ctx.emit(out, Operator::STD, s.span, s.span.first, "");
    });
  }
  return out;
}

}  // namespace tmut::mutators
