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

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "tmut/minilang/checker.hpp"

namespace tmut::minilang {

inline constexpr std::uint64_t kDefaultStepLimit = 1'000'000;

struct ExecLimits {
  std::uint64_t step_limit = kDefaultStepLimit;  // statement evaluations
  std::size_t max_depth = 256;                   // nested calls
  std::size_t max_string = 1u << 20;             // bytes
};

enum class ExecStatus { Ok, RuntimeError, Timeout, TypeFault };

struct ExecResult {
  ExecStatus status = ExecStatus::Ok;
  Value value;          // meaningful when status == Ok
  std::string message;  // diagnostic for failures
  std::uint64_t steps = 0;
};

namespace detail {

struct RuntimeFault {
  std::string message;
};
struct StepLimitExceeded {};
struct OperandTypeFault {
  std::string message;
};

class Interpreter {
 public:
  Interpreter(const TypedProgram& prog, ExecLimits limits) : prog_(prog), limits_(limits) {}

  ExecResult call(std::string_view callee, const std::vector<Value>& args) {
    ExecResult r;
    try {
      const auto fn = prog_.function_index(callee);
      if (!fn) throw RuntimeFault{"unknown function '" + std::string(callee) + "'"};
      init_globals();
      r.value = invoke(*fn, args);
    } catch (const RuntimeFault& f) {
      r.status = ExecStatus::RuntimeError;
      r.message = f.message;
    } catch (const StepLimitExceeded&) {
      r.status = ExecStatus::Timeout;
      r.message = "step limit exceeded";
    } catch (const OperandTypeFault& f) {
      r.status = ExecStatus::TypeFault;
      r.message = f.message;
    } catch (const std::bad_variant_access&) {
      r.status = ExecStatus::TypeFault;
      r.message = "operand of unexpected runtime type";
    }
    r.steps = steps_;
    return r;
  }

 private:
  struct Frame {
    std::vector<Value> slots;
  };

  void tick() {
    if (++steps_ > limits_.step_limit) throw StepLimitExceeded{};
  }

  void init_globals() {
    const auto& globals = prog_.ast.globals;
    globals_.clear();
    for (const Global& g : globals) globals_.push_back(zero_value(g.type));
    Frame none;
    frame_ = &none;
    for (std::size_t i = 0; i < globals.size(); ++i) {
      if (!globals[i].init) continue;
      tick();
      globals_[i] = eval(*globals[i].init);
    }
    frame_ = nullptr;
  }

  Value invoke(std::size_t fn, const std::vector<Value>& args) {
    const Function& f = prog_.ast.functions[fn];
    if (args.size() != f.params.size()) throw OperandTypeFault{"arity mismatch"};
    if (++depth_ > limits_.max_depth) throw RuntimeFault{"call depth exceeded"};
    tick();
    Frame frame;
    frame.slots.resize(prog_.functions[fn].frame_size);
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (type_of(args[i]) != f.params[i].type) throw OperandTypeFault{"argument type"};
      frame.slots[i] = args[i];
    }
    Frame* saved = frame_;
    frame_ = &frame;
    std::optional<Value> ret = exec_list(f.body);
    frame_ = saved;
    --depth_;
    if (f.result == Type::Void) return std::int64_t{0};
    if (!ret) throw OperandTypeFault{"function fell off its end"};
    if (type_of(*ret) != f.result) throw OperandTypeFault{"return type"};
    return std::move(*ret);
  }

  Value& variable(TokenIndex use) {
    const Symbol* s = prog_.resolve(use);
    if (!s) throw OperandTypeFault{"unresolved identifier"};
    if (s->kind == SymbolKind::Global) return globals_.at(s->slot);
    if (s->kind == SymbolKind::Function) throw OperandTypeFault{"function used as value"};
    return frame_->slots.at(s->slot);
  }

  // Returns the returned value when a return statement executed.
  std::optional<Value> exec_list(const StmtList& list) {
    for (const StmtPtr& s : list) {
      if (auto r = exec(*s)) return r;
    }
    return std::nullopt;
  }

  std::optional<Value> exec(const Stmt& s) {
    switch (s.kind) {
      case StmtKind::VarDecl: {
        tick();
        Value v = eval(*s.expr);
        auto it = prog_.decls.find(s.name_token);
        if (it == prog_.decls.end()) throw OperandTypeFault{"undeclared local"};
        frame_->slots.at(prog_.symbols[it->second].slot) = std::move(v);
        return std::nullopt;
      }
      case StmtKind::Assign: {
        tick();
        Value v = eval(*s.expr);
        Value& target = variable(s.name_token);
        if (type_of(v) != type_of(target)) throw OperandTypeFault{"assignment type"};
        target = std::move(v);
        return std::nullopt;
      }
      case StmtKind::ExprStmt:
        tick();
        eval(*s.expr);
        return std::nullopt;
      case StmtKind::If:
        tick();
        if (std::get<bool>(eval(*s.expr))) return exec_list(s.body);
        return exec_list(s.else_body);
      case StmtKind::While:
        while (true) {
          tick();
          if (!std::get<bool>(eval(*s.expr))) return std::nullopt;
          if (auto r = exec_list(s.body)) return r;
        }
      case StmtKind::Return:
        tick();
        if (!s.expr) return Value{std::int64_t{0}};
        return eval(*s.expr);
      case StmtKind::Block:
        return exec_list(s.body);
    }
    return std::nullopt;
  }

  Value eval(const Expr& e) {
    switch (e.kind) {
      case ExprKind::Literal:
        return e.literal;
      case ExprKind::Ident:
        return variable(e.token);
      case ExprKind::Call: {
        std::vector<Value> args;
        args.reserve(e.operands.size());
        for (const ExprPtr& a : e.operands) args.push_back(eval(*a));
        const Symbol* s = prog_.resolve(e.token);
        if (!s || s->kind != SymbolKind::Function) throw OperandTypeFault{"call of non-function"};
        return invoke(s->slot, args);
      }
      case ExprKind::Unary: {
        Value v = eval(*e.operands[0]);
        if (e.text == "!") return !std::get<bool>(v);
        if (auto* i = std::get_if<std::int64_t>(&v)) {
          return static_cast<std::int64_t>(0ULL - static_cast<std::uint64_t>(*i));
        }
        return -std::get<double>(v);
      }
      case ExprKind::Binary:
        return binary(e);
    }
    throw OperandTypeFault{"bad expression"};
  }

  Value binary(const Expr& e) {
    const std::string& op = e.text;
    if (op == "&&" || op == "||") {
      const bool l = std::get<bool>(eval(*e.operands[0]));
      if (op == "&&" ? !l : l) return l;
      return std::get<bool>(eval(*e.operands[1]));
    }
    Value l = eval(*e.operands[0]);
    Value r = eval(*e.operands[1]);
    if (l.index() != r.index()) throw OperandTypeFault{"mixed operand types for '" + op + "'"};
    if (op == "==") return l == r;
    if (op == "!=") return l != r;
    switch (l.index()) {
      case 0: return int_op(op, std::get<std::int64_t>(l), std::get<std::int64_t>(r));
      case 1: return float_op(op, std::get<double>(l), std::get<double>(r));
      case 3: return string_op(op, std::get<std::string>(l), std::get<std::string>(r));
      default: break;
    }
    throw OperandTypeFault{"operator '" + op + "' on bool"};
  }

  static Value int_op(const std::string& op, std::int64_t a, std::int64_t b) {
    const auto ua = static_cast<std::uint64_t>(a);
    const auto ub = static_cast<std::uint64_t>(b);
    if (op == "+") return static_cast<std::int64_t>(ua + ub);
    if (op == "-") return static_cast<std::int64_t>(ua - ub);
    if (op == "*") return static_cast<std::int64_t>(ua * ub);
    if (op == "/" || op == "%") {
      if (b == 0) throw RuntimeFault{"division by zero"};
      if (a == INT64_MIN && b == -1) return op == "/" ? a : std::int64_t{0};
      return op == "/" ? a / b : a % b;
    }
    if (op == "<") return a < b;
    if (op == "<=") return a <= b;
    if (op == ">") return a > b;
    if (op == ">=") return a >= b;
    if (op == "&") return a & b;
    if (op == "|") return a | b;
    if (op == "^") return a ^ b;
    if (op == "<<") return static_cast<std::int64_t>(ua << (ub & 63));
    if (op == ">>") return a >> (ub & 63);
    throw OperandTypeFault{"operator '" + op + "' on int"};
  }

  static Value float_op(const std::string& op, double a, double b) {
    if (op == "+") return a + b;
    if (op == "-") return a - b;
    if (op == "*") return a * b;
    if (op == "/" || op == "%") {
      if (b == 0.0) throw RuntimeFault{"division by zero"};
      return op == "/" ? a / b : std::fmod(a, b);
    }
    if (op == "<") return a < b;
    if (op == "<=") return a <= b;
    if (op == ">") return a > b;
    if (op == ">=") return a >= b;
    throw OperandTypeFault{"operator '" + op + "' on float"};
  }

  Value string_op(const std::string& op, const std::string& a, const std::string& b) const {
    if (op == "+") {
      if (a.size() + b.size() > limits_.max_string) throw RuntimeFault{"string too long"};
      return a + b;
    }
    if (op == "<") return a < b;
    if (op == "<=") return a <= b;
    if (op == ">") return a > b;
    if (op == ">=") return a >= b;
    throw OperandTypeFault{"operator '" + op + "' on string"};
  }

  const TypedProgram& prog_;
  ExecLimits limits_;
  std::vector<Value> globals_;
  Frame* frame_ = nullptr;
  std::uint64_t steps_ = 0;
  std::size_t depth_ = 0;
};

}  // namespace detail

// Calls `callee` with `args` on a fresh global state.
inline ExecResult execute(const TypedProgram& prog, std::string_view callee,
                          const std::vector<Value>& args, ExecLimits limits = {}) {
  return detail::Interpreter(prog, limits).call(callee, args);
}

}  // namespace tmut::minilang
