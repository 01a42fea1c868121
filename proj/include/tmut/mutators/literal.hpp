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

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <system_error>

#include "tmut/minilang/types.hpp"
#include "tmut/util/error.hpp"

namespace tmut::mutators {

// Normal form of a numeric literal: sign folded, exponent evaluated,
// redundant zeros dropped. Two literals are redundant iff their canonical
// forms compare equal.
struct CanonicalNumber {
  minilang::Type type = minilang::Type::Int;
  std::int64_t int_value = 0;
  double float_value = 0.0;
  std::string text;

  friend bool operator==(const CanonicalNumber& a, const CanonicalNumber& b) {
    return a.type == b.type && a.text == b.text;
  }
};

inline CanonicalNumber canonicalize_numeric_literal(std::string_view lexeme) {
  auto malformed = [&] { return Error("malformed numeric literal '" + std::string(lexeme) + "'"); };
  std::string_view body = lexeme;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.remove_prefix(1);
  }
  if (body.empty() || body[0] < '0' || body[0] > '9') throw malformed();
  bool is_float = false;
  for (char c : body) {
    if (c == '.' || c == 'e' || c == 'E') {
      is_float = true;
    } else if (!(c >= '0' && c <= '9') && c != '+' && c != '-') {
      throw malformed();
    }
  }
  CanonicalNumber out;
  const char* first = body.data();
  const char* last = body.data() + body.size();
  if (!is_float) {
    std::uint64_t mag = 0;
    auto [p, ec] = std::from_chars(first, last, mag);
    if (ec != std::errc() || p != last) throw malformed();
    const std::uint64_t limit = negative ? (std::uint64_t{1} << 63) : INT64_MAX;
    if (mag > limit) throw malformed();
    out.type = minilang::Type::Int;
    out.int_value = negative ? static_cast<std::int64_t>(0 - mag) : static_cast<std::int64_t>(mag);
    out.text = std::to_string(out.int_value);
    return out;
  }
  double v = 0;
  auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || p != last) throw malformed();
  if (negative) v = -v;
  if (v == 0.0) v = 0.0;  // folds -0.0
  out.type = minilang::Type::Float;
  out.float_value = v;
  char buf[64];
  auto [end, ec2] = std::to_chars(buf, buf + sizeof buf, v);
  out.text.assign(buf, end);
  if (out.text.find_first_of(".en") == std::string::npos) out.text += ".0";
  return out;
}

}  // namespace tmut::mutators
