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

#include <string>
#include <string_view>

#include "tmut/minilang/checker.hpp"
#include "tmut/minilang/lexer.hpp"
#include "tmut/mutators/mutant.hpp"
#include "tmut/util/error.hpp"

namespace tmut::mutators {

// The source no longer matches the text the mutant was generated from.
class StaleMutant : public Error {
 public:
  using Error::Error;
};

// Splices the mutant's replacement over its token span; every other byte
// of `source` is preserved.
inline std::string apply_mutant(std::string_view source, const Mutant& m) {
  const minilang::TokenStream ts = minilang::tokenize(source);
  if (m.span.first > m.span.last || m.span.last >= ts.size()) {
    throw StaleMutant("mutant " + m.id + " refers to tokens beyond the source");
  }
  const std::size_t from = ts[m.span.first].offset;
  const std::size_t to = ts[m.span.last].end();
  if (source.substr(from, to - from) != m.original) {
    throw StaleMutant("mutant " + m.id + " does not match the source at " +
                      std::to_string(m.line) + ":" + std::to_string(m.col));
  }
  std::string out;
  out.reserve(source.size() + m.replacement.size());
  out.append(source.substr(0, from));
  out.append(m.replacement);
  out.append(source.substr(to));
  return out;
}

inline minilang::TypedProgram compile_mutant(std::string_view source, const Mutant& m) {
  return minilang::compile(apply_mutant(source, m));
}

}  // namespace tmut::mutators
