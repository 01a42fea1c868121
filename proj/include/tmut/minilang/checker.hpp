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
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tmut/minilang/ast.hpp"
#include "tmut/minilang/parser.hpp"
#include "tmut/util/error.hpp"

namespace tmut::minilang {

enum class SymbolKind { Local, Param, Global, Function };

inline std::string_view to_string(SymbolKind k) {
  switch (k) {
    case SymbolKind::Local: return "local";
    case SymbolKind::Param: return "param";
    case SymbolKind::Global: return "global";
    case SymbolKind::Function: return "function";
  }
  return "?";
}

struct Symbol {
  std::string name;
  SymbolKind kind = SymbolKind::Local;
  Type type = Type::Void;  // variable type, or function result type
  TokenIndex decl_token = 0;
  // Token range over which the name is visible (locals and params only).
  TokenSpan extent;
  // Frame slot (locals, params), global index, or function index.
  std::size_t slot = 0;
  // Owning function index for locals and params.
  std::size_t function = 0;

  bool is_variable() const { return kind != SymbolKind::Function; }
};

struct FunctionInfo {
  std::vector<Type> params;
  Type result = Type::Void;
  std::size_t frame_size = 0;

  bool same_signature(const FunctionInfo& o) const {
    return params == o.params && result == o.result;
  }
};

// A parsed and type-checked compilation unit. Every expression in `ast`
// carries its resolved type.
struct TypedProgram {
  std::string source;
  Ast ast;
  std::vector<FunctionInfo> functions;  // parallel to ast.functions
  std::vector<Symbol> symbols;          // every declaration
  // Identifier use (variable reference, assignment target, callee name)
  // to an index into `symbols`.
  std::unordered_map<TokenIndex, std::size_t> uses;
  // Declaring name token to an index into `symbols`.
  std::unordered_map<TokenIndex, std::size_t> decls;

  const TokenStream& tokens() const { return ast.tokens; }

  const Symbol* resolve(TokenIndex use) const {
    auto it = uses.find(use);
    return it == uses.end() ? nullptr : &symbols[it->second];
  }

  std::optional<std::size_t> function_index(std::string_view name) const {
    for (std::size_t i = 0; i < ast.functions.size(); ++i) {
      if (ast.functions[i].name == name) return i;
    }
    return std::nullopt;
  }
};

// True when control can fall off the end of `stmt`, treating `skip` (if
// non-null) as deleted.
inline bool completes_normally(const Stmt& stmt, const Stmt* skip = nullptr);

inline bool list_completes_normally(const StmtList& list, const Stmt* skip = nullptr) {
  for (const StmtPtr& s : list) {
    if (s.get() == skip) continue;
    if (!completes_normally(*s, skip)) return false;
  }
  return true;
}

inline bool completes_normally(const Stmt& stmt, const Stmt* skip) {
  switch (stmt.kind) {
    case StmtKind::Return:
      return false;
    case StmtKind::If:
      if (!stmt.has_else) return true;
      return list_completes_normally(stmt.body, skip) ||
             list_completes_normally(stmt.else_body, skip);
    case StmtKind::Block:
      return list_completes_normally(stmt.body, skip);
    default:
      return true;
  }
}

namespace detail {

class Checker {
 public:
  explicit Checker(Ast ast) { prog_.ast = std::move(ast); }

  TypedProgram run() {
    Ast& ast = prog_.ast;
    std::map<std::string, TokenIndex, std::less<>> top;
    auto declare_top = [&](const std::string& name, TokenIndex tok) {
      if (!top.emplace(name, tok).second) error("duplicate declaration of '" + name + "'", tok);
    };
    for (std::size_t i = 0; i < ast.functions.size(); ++i) {
      const Function& f = ast.functions[i];
      declare_top(f.name, f.name_token);
      FunctionInfo info;
      for (const Param& p : f.params) info.params.push_back(p.type);
      info.result = f.result;
      prog_.functions.push_back(std::move(info));
      Symbol s{f.name, SymbolKind::Function, f.result, f.name_token, f.span, i, i};
      functions_[f.name] = add_symbol(std::move(s));
    }
    for (std::size_t i = 0; i < ast.globals.size(); ++i) {
      const Global& g = ast.globals[i];
      declare_top(g.name, g.token);
      if (g.type == Type::Void) error("global of type void", g.token);
      Symbol s{g.name, SymbolKind::Global, g.type, g.token, {}, i, 0};
      globals_.emplace_back(g.name, add_symbol(std::move(s)));
    }
    // Global initializers only see globals declared before them.
    for (std::size_t i = 0; i < ast.globals.size(); ++i) {
      Global& g = ast.globals[i];
      if (!g.init) continue;
      visible_globals_ = i;
      current_ = nullptr;
      expect_type(*g.init, g.type, "global initializer");
    }
    visible_globals_ = ast.globals.size();
    for (std::size_t i = 0; i < ast.functions.size(); ++i) check_function(i);
    return std::move(prog_);
  }

 private:
  struct Scope {
    std::vector<std::pair<std::string, std::size_t>> names;
  };

  [[noreturn]] void error(const std::string& what, TokenIndex at) const {
    const Token& t = prog_.ast.tokens[at];
    throw TypeCheckError(what, t.line, t.col);
  }

  std::size_t add_symbol(Symbol s) {
    prog_.decls[s.decl_token] = prog_.symbols.size();
    prog_.symbols.push_back(std::move(s));
    return prog_.symbols.size() - 1;
  }

  std::optional<std::size_t> lookup_variable(std::string_view name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      for (const auto& [n, idx] : it->names) {
        if (n == name) return idx;
      }
    }
    for (std::size_t i = 0; i < visible_globals_; ++i) {
      if (globals_[i].first == name) return globals_[i].second;
    }
    return std::nullopt;
  }

  bool name_taken(std::string_view name) const {
    if (functions_.count(std::string(name))) return true;
    for (const auto& g : globals_) {
      if (g.first == name) return true;
    }
    for (const Scope& s : scopes_) {
      for (const auto& [n, idx] : s.names) {
        if (n == name) return true;
      }
    }
    return false;
  }

  void check_function(std::size_t index) {
    Function& f = prog_.ast.functions[index];
    current_ = &f;
    current_index_ = index;
    next_slot_ = 0;
    scopes_.clear();
    scopes_.emplace_back();
    for (const Param& p : f.params) {
      if (name_taken(p.name)) error("redeclaration of '" + p.name + "'", p.token);
      if (p.type == Type::Void) error("parameter of type void", p.token);
      Symbol s{p.name, SymbolKind::Param, p.type, p.token, f.body_span, next_slot_++, index};
      scopes_.back().names.emplace_back(p.name, add_symbol(std::move(s)));
    }
    check_block(f.body, f.body_span.last);
    if (f.result != Type::Void && list_completes_normally(f.body)) {
      error("missing return in function '" + f.name + "'", f.body_span.last);
    }
    prog_.functions[index].frame_size = next_slot_;
    scopes_.clear();
  }

  void check_block(StmtList& list, TokenIndex closing) {
    scopes_.emplace_back();
    bool reachable = true;
    for (StmtPtr& s : list) {
      if (!reachable) error("unreachable statement", s->span.first);
      check_statement(*s, closing);
      reachable = completes_normally(*s);
    }
    scopes_.pop_back();
  }

  void check_statement(Stmt& s, TokenIndex closing) {
    switch (s.kind) {
      case StmtKind::VarDecl: {
        if (s.declared == Type::Void) error("variable of type void", s.name_token);
        expect_type(*s.expr, s.declared, "initializer");
        if (name_taken(s.name)) error("redeclaration of '" + s.name + "'", s.name_token);
        Symbol sym{s.name, SymbolKind::Local, s.declared, s.name_token,
                   {s.span.last + 1, closing}, next_slot_++, current_index_};
        scopes_.back().names.emplace_back(s.name, add_symbol(std::move(sym)));
        break;
      }
      case StmtKind::Assign: {
        auto idx = lookup_variable(s.name);
        if (!idx) error("unknown variable '" + s.name + "'", s.name_token);
        prog_.uses[s.name_token] = *idx;
        expect_type(*s.expr, prog_.symbols[*idx].type, "assignment");
        break;
      }
      case StmtKind::ExprStmt:
        check_expr(*s.expr, /*allow_void=*/true);
        break;
      case StmtKind::If:
        expect_type(*s.expr, Type::Bool, "if condition");
        check_block(s.body, s.body_close);
        if (s.has_else) check_block(s.else_body, s.span.last);
        break;
      case StmtKind::While:
        expect_type(*s.expr, Type::Bool, "while condition");
        check_block(s.body, s.body_close);
        break;
      case StmtKind::Return: {
        const Type want = current_->result;
        if (!s.expr) {
          if (want != Type::Void) error("missing return value", s.span.first);
        } else {
          if (want == Type::Void) error("return value in void function", s.span.first);
          expect_type(*s.expr, want, "return");
        }
        break;
      }
      case StmtKind::Block:
        check_block(s.body, s.body_close);
        break;
    }
  }

  void expect_type(Expr& e, Type want, std::string_view what) {
    const Type got = check_expr(e, false);
    if (got != want) {
      error(std::string(what) + " expects " + std::string(to_string(want)) + " but got " +
                std::string(to_string(got)),
            e.token);
    }
  }

  Type check_expr(Expr& e, bool allow_void) {
    e.type = infer(e);
    if (e.type == Type::Void && !allow_void) error("void value used in expression", e.token);
    return e.type;
  }

  Type infer(Expr& e) {
    switch (e.kind) {
      case ExprKind::Literal:
        return type_of(e.literal);
      case ExprKind::Ident: {
        auto idx = lookup_variable(e.text);
        if (!idx) {
          if (functions_.count(e.text)) error("function '" + e.text + "' used as value", e.token);
          error("unknown identifier '" + e.text + "'", e.token);
        }
        prog_.uses[e.token] = *idx;
        return prog_.symbols[*idx].type;
      }
      case ExprKind::Call: {
        auto it = functions_.find(e.text);
        if (it == functions_.end()) error("unknown function '" + e.text + "'", e.token);
        prog_.uses[e.token] = it->second;
        const FunctionInfo& info = prog_.functions[prog_.symbols[it->second].slot];
        if (info.params.size() != e.operands.size()) {
          error("arity mismatch calling '" + e.text + "'", e.token);
        }
        for (std::size_t i = 0; i < e.operands.size(); ++i) {
          expect_type(*e.operands[i], info.params[i], "argument");
        }
        return info.result;
      }
      case ExprKind::Unary: {
        const Type t = check_expr(*e.operands[0], false);
        if (e.text == "-" && is_numeric(t)) return t;
        if (e.text == "!" && t == Type::Bool) return t;
        error("operand mismatch for unary '" + e.text + "'", e.token);
      }
      case ExprKind::Binary: {
        const Type l = check_expr(*e.operands[0], false);
        const Type r = check_expr(*e.operands[1], false);
        if (auto t = binary_result(e.text, l, r)) return *t;
        error("operand mismatch for '" + e.text + "': " + std::string(to_string(l)) + " and " +
                  std::string(to_string(r)),
              e.token);
      }
    }
    return Type::Void;
  }

 public:
  static std::optional<Type> binary_result(std::string_view op, Type l, Type r) {
    if (l != r || l == Type::Void) return std::nullopt;
    if (op == "+") {
      if (is_numeric(l) || l == Type::String) return l;
    } else if (op == "-" || op == "*" || op == "/" || op == "%") {
      if (is_numeric(l)) return l;
    } else if (op == "<" || op == "<=" || op == ">" || op == ">=") {
      if (is_numeric(l) || l == Type::String) return Type::Bool;
    } else if (op == "==" || op == "!=") {
      return Type::Bool;
    } else if (op == "&&" || op == "||") {
      if (l == Type::Bool) return Type::Bool;
    } else if (op == "&" || op == "|" || op == "^" || op == "<<" || op == ">>") {
      if (l == Type::Int) return Type::Int;
    }
    return std::nullopt;
  }

 private:
  TypedProgram prog_;
  std::map<std::string, std::size_t> functions_;
  std::vector<std::pair<std::string, std::size_t>> globals_;
  std::size_t visible_globals_ = 0;
  std::vector<Scope> scopes_;
  const Function* current_ = nullptr;
  std::size_t current_index_ = 0;
  std::size_t next_slot_ = 0;
};

}  // namespace detail

// Result type of a binary operator applied to operand types, if legal.
inline std::optional<Type> binary_result(std::string_view op, Type l, Type r) {
  return detail::Checker::binary_result(op, l, r);
}

inline TypedProgram type_check(Ast ast) { return detail::Checker(std::move(ast)).run(); }

// Lex, parse, and type-check a source text.
inline TypedProgram compile(std::string source) {
  TypedProgram p = type_check(parse(tokenize(source)));
  p.source = std::move(source);
  return p;
}

// Variables and functions visible at a token: block-scoped locals and
// params declared before `at`, every global (only earlier ones inside a
// global initializer), and every function.
inline std::vector<Symbol> symbols_in_scope(const TypedProgram& prog, TokenIndex at) {
  std::vector<Symbol> out;
  const Ast& ast = prog.ast;
  std::optional<std::size_t> in_function;
  for (std::size_t i = 0; i < ast.functions.size(); ++i) {
    if (ast.functions[i].body_span.contains(at)) in_function = i;
  }
  std::size_t visible_globals = ast.globals.size();
  if (!in_function) {
    for (std::size_t i = 0; i < ast.globals.size(); ++i) {
      if (ast.globals[i].span.contains(at)) visible_globals = i;
    }
  }
  for (const Symbol& s : prog.symbols) {
    switch (s.kind) {
      case SymbolKind::Local:
      case SymbolKind::Param:
        if (in_function && s.function == *in_function && s.extent.contains(at)) out.push_back(s);
        break;
      case SymbolKind::Global:
        if (s.slot < visible_globals) out.push_back(s);
        break;
      case SymbolKind::Function:
        out.push_back(s);
        break;
    }
  }
  return out;
}

}  // namespace tmut::minilang
