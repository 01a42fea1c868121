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

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace tmut::minilang {

enum class Type { Void, Int, Float, Bool, String };

inline std::string_view to_string(Type t) {
  switch (t) {
    case Type::Void: return "void";
    case Type::Int: return "int";
    case Type::Float: return "float";
    case Type::Bool: return "bool";
    case Type::String: return "string";
  }
  return "?";
}

inline bool parse_type(std::string_view s, Type& out) {
  if (s == "int") out = Type::Int;
  else if (s == "float") out = Type::Float;
  else if (s == "bool") out = Type::Bool;
  else if (s == "string") out = Type::String;
  else return false;
  return true;
}

inline bool is_numeric(Type t) { return t == Type::Int || t == Type::Float; }

// Runtime value. Index order matches Type::Int..Type::String.
using Value = std::variant<std::int64_t, double, bool, std::string>;

inline Type type_of(const Value& v) {
  switch (v.index()) {
    case 0: return Type::Int;
    case 1: return Type::Float;
    case 2: return Type::Bool;
    default: return Type::String;
  }
}

inline Value zero_value(Type t) {
  switch (t) {
    case Type::Float: return 0.0;
    case Type::Bool: return false;
    case Type::String: return std::string();
    default: return std::int64_t{0};
  }
}

// Equality used for test verdicts: floats compare by bit pattern.
inline bool same_value(const Value& a, const Value& b) {
  if (a.index() != b.index()) return false;
  if (const double* x = std::get_if<double>(&a)) {
    return std::bit_cast<std::uint64_t>(*x) ==
           std::bit_cast<std::uint64_t>(std::get<double>(b));
  }
  return a == b;
}

}  // namespace tmut::minilang
