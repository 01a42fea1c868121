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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tmut/mutators/context.hpp"
#include "tmut/mutators/literal.hpp"
#include "tmut/mutators/tailored.hpp"
#include "tmut/mutators/trigram.hpp"

namespace tmut::mutators {

namespace detail {

inline bool literal_fits(minilang::TokenKind kind, minilang::Type type) {
  using minilang::TokenKind;
  using minilang::Type;
  switch (type) {
    case Type::Int: return kind == TokenKind::IntLiteral;
    case Type::Float: return kind == TokenKind::FloatLiteral;
    case Type::Bool: return kind == TokenKind::BoolLiteral;
    case Type::String: return kind == TokenKind::StringLiteral;
    default: return false;
  }
}

// Deduplication key: numeric literals by canonical value, other literals by
// lexeme, variables by name.
inline std::string candidate_key(minilang::TokenKind kind, const std::string& lexeme) {
  using minilang::TokenKind;
  if (kind == TokenKind::IntLiteral || kind == TokenKind::FloatLiteral) {
    return "0num:" + canonicalize_numeric_literal(lexeme).text;
  }
  if (kind == TokenKind::Identifier) return "1var:" + lexeme;
  return "0lit:" + lexeme;
}

}  // namespace detail

// NLR: literals and primitive variable uses replaced by literals that follow
// the same two-token prefix elsewhere in the corpus; literal targets also
// get every in-scope variable of their type. `self_stream` is the program's
// stream id within `index`, so its own occurrence at the site is excluded.
inline std::vector<Mutant> generate_nlr(const minilang::TypedProgram& prog,
                                        const std::vector<cfg::Cfg>& cfgs,
                                        const TrigramIndex& index,
                                        std::optional<std::size_t> self_stream = std::nullopt) {
  GenContext ctx(prog, cfgs);
  std::vector<Mutant> out;
  const auto& toks = prog.tokens();
  for_each_program_expr(prog, [&](const minilang::Expr& e) {
    const bool literal = e.kind == minilang::ExprKind::Literal;
    if (!literal && e.kind != minilang::ExprKind::Ident) return;
    const TokenIndex i = e.token;
    const std::string original_key = detail::candidate_key(toks[i].kind, toks[i].lexeme);
    std::map<std::string, std::string> candidates;  // key -> replacement lexeme
    auto offer = [&](minilang::TokenKind kind, const std::string& lexeme) {
      const std::string key = detail::candidate_key(kind, lexeme);
      if (key == original_key) return;
      auto [it, fresh] = candidates.emplace(key, lexeme);
      if (!fresh && lexeme < it->second) it->second = lexeme;
    };
    if (i >= 2) {
      std::optional<TrigramIndex::Occurrence> self;
      if (self_stream) self = TrigramIndex::Occurrence{*self_stream, i};
      for (const auto& [lexeme, info] :
           index.continuations(toks[i - 2].lexeme, toks[i - 1].lexeme, self)) {
        if (detail::literal_fits(info.first, e.type)) offer(info.first, lexeme);
      }
    }
    if (literal) {
      for (const std::string& name : detail::compatible_variables(prog, i, e.type, "")) {
        offer(minilang::TokenKind::Identifier, name);
      }
    }
    for (const auto& [key, lexeme] : candidates) {
      ctx.emit(out, Operator::NLR, {i, i}, i, lexeme);
    }
  });
  return out;
}

}  // namespace tmut::mutators
