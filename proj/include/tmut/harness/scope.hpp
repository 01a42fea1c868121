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
#include <set>
#include <string>
#include <string_view>

#include "tmut/cfg/cfg.hpp"
#include "tmut/harness/defect.hpp"
#include "tmut/minilang/checker.hpp"
#include "tmut/mutators/pool.hpp"
#include "tmut/util/error.hpp"

namespace tmut::harness {

enum class Scope { Class, Method, Line };

inline constexpr Scope kAllScopes[] = {Scope::Class, Scope::Method, Scope::Line};

inline std::string_view to_string(Scope s) {
  switch (s) {
    case Scope::Class: return "class";
    case Scope::Method: return "method";
    case Scope::Line: return "line";
  }
  return "?";
}

inline Scope parse_scope(std::string_view s) {
  for (Scope sc : kAllScopes) {
    if (to_string(sc) == s) return sc;
  }
  throw Error("unknown scope '" + std::string(s) + "'");
}

namespace detail {

// Source lines covered by a touched function, or by the global
// declarations when the footprint names the initializer CFG.
inline bool line_in(const minilang::TypedProgram& prog, std::string_view owner, std::size_t line) {
  const auto& toks = prog.tokens();
  auto covers = [&](const minilang::TokenSpan& span) {
    return toks[span.first].line <= line && line <= toks[span.last].line;
  };
  if (owner == cfg::kInitOwner) {
    return std::any_of(prog.ast.globals.begin(), prog.ast.globals.end(),
                       [&](const minilang::Global& g) { return covers(g.span); });
  }
  for (const minilang::Function& f : prog.ast.functions) {
    if (f.name == owner) return covers(f.span);
  }
  return false;
}

}  // namespace detail

// Rejects footprints naming unknown functions, or lines outside every
// touched function (which would break line ⊆ method).
inline void validate_scope(const minilang::TypedProgram& prog, const ScopeSpec& spec) {
  for (const std::string& f : spec.functions) {
    if (f != cfg::kInitOwner && !prog.function_index(f)) {
      throw Error("scope names unknown function '" + f + "'");
    }
  }
  for (std::size_t line : spec.lines) {
    const bool inside = std::any_of(spec.functions.begin(), spec.functions.end(),
                                    [&](const std::string& f) { return detail::line_in(prog, f, line); });
    if (!inside) {
      throw Error("scope line " + std::to_string(line) + " is not inside a touched function");
    }
  }
}

// class: whole pool; method: mutants owned by a touched function; line:
// mutants anchored on a touched line. Line-scope mutants must also belong
// to a touched function, so two functions sharing a source line cannot
// break line ⊆ method.
inline mutators::MutantPool scope_filter(const mutators::MutantPool& pool,
                                         const minilang::TypedProgram& prog,
                                         const ScopeSpec& spec, Scope scope) {
  validate_scope(prog, spec);
  switch (scope) {
    case Scope::Class: return pool;
    case Scope::Method: {
      const std::set<std::string> fns(spec.functions.begin(), spec.functions.end());
      return pool.filter([&](const mutators::Mutant& m) { return fns.count(m.cfg_owner) > 0; });
    }
    case Scope::Line: {
      const std::set<std::string> fns(spec.functions.begin(), spec.functions.end());
      const std::set<std::size_t> lines(spec.lines.begin(), spec.lines.end());
      return pool.filter([&](const mutators::Mutant& m) {
        return lines.count(m.line) > 0 && fns.count(m.cfg_owner) > 0;
      });
    }
  }
  return pool;
}

}  // namespace tmut::harness
