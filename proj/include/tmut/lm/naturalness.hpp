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
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "tmut/lm/ngram.hpp"
#include "tmut/minilang/token.hpp"
#include "tmut/mutators/pool.hpp"
#include "tmut/util/error.hpp"

namespace tmut::lm {

// Last position scored after the mutated one. Literal: l..l+n (n+1 terms);
// Conventional: l..l+n-1. The extra literal term is always log(1) = 0.
enum class ScoreWindow { Literal, Conventional };

namespace detail {

inline double log10_prob_at(const NgramModel& model, const std::vector<std::string>& seq,
                            std::size_t i) {
  return std::log10(model.prob(seq[i], std::span<const std::string>(seq.data(), i)));
}

}  // namespace detail

// Log10 probability of a whole token sequence, end symbol included.
inline double sequence_log10_prob(const NgramModel& model, const std::vector<std::string>& tokens) {
  std::vector<std::string> seq = tokens;
  seq.push_back(kEnd);
  double total = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) total += detail::log10_prob_at(model, seq, i);
  return total;
}

// S(t, l): log10 of how much more probable the sequence becomes when the
// token at `l` is replaced by `t`, summed over the positions whose n-gram
// context sees the change. Clamped at the end symbol.
inline double score_mutant(const NgramModel& model, const std::vector<std::string>& tokens,
                           std::size_t l, const std::string& t,
                           ScoreWindow window = ScoreWindow::Literal) {
  if (l >= tokens.size()) throw Error("mutation position beyond the token stream");
  std::vector<std::string> original = tokens;
  original.push_back(kEnd);
  std::vector<std::string> mutated = original;
  mutated[l] = t;
  const std::size_t reach = model.order() - (window == ScoreWindow::Literal ? 0 : 1);
  const std::size_t last = std::min(l + reach, original.size() - 1);
  double s = 0;
  for (std::size_t i = l; i <= last; ++i) {
    s += detail::log10_prob_at(model, mutated, i) - detail::log10_prob_at(model, original, i);
  }
  return s;
}

// Scores every tailored mutant of the pool against the program's tokens.
inline void score_pool(mutators::MutantPool& pool, const NgramModel& model,
                       const minilang::TokenStream& tokens,
                       ScoreWindow window = ScoreWindow::Literal) {
  const std::vector<std::string> seq = minilang::lexemes(tokens);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const mutators::Mutant& m = pool[i];
    if (m.kind() != mutators::KindClass::Tailored) continue;
    pool.set_naturalness(i, score_mutant(model, seq, m.token, m.replacement, window));
  }
}

}  // namespace tmut::lm
