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

#include <cstdint>
#include <span>
#include <vector>

#include "tmut/selection/objective.hpp"
#include "tmut/util/error.hpp"
#include "tmut/util/rng.hpp"

namespace tmut::selection {

struct SubmodularityViolation {
  std::vector<NodeRef> smaller;  // L
  std::vector<NodeRef> larger;   // L' ⊇ L
  NodeRef added;                 // x ∉ L'
  ObjectiveGain gain_smaller;    // O(L) - O(L ∪ {x})
  ObjectiveGain gain_larger;     // O(L') - O(L' ∪ {x})
};

struct SubmodularityReport {
  std::uint64_t checked = 0;
  std::vector<SubmodularityViolation> violations;
};

// Checks diminishing returns of -O: for L ⊆ L' and x ∉ L',
// O(L) - O(L ∪ {x}) >= O(L') - O(L' ∪ {x}), gains compared
// lexicographically. `trials == 0` enumerates every triple (at most 20
// candidates); otherwise `trials` random triples are drawn from `rng`.
inline SubmodularityReport verify_submodularity(const DistanceTable& dt,
                                                const std::vector<Cfg>& cfgs,
                                                std::span<const NodeRef> candidates,
                                                std::uint64_t trials = 0, Rng* rng = nullptr) {
  const std::vector<NodeRef> nodes = executable_nodes(cfgs);
  const std::size_t n = candidates.size();
  auto members = [&](std::uint64_t mask) {
    std::vector<NodeRef> out;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) out.push_back(candidates[i]);
    }
    return out;
  };
  auto value = [&](std::uint64_t mask) { return objective_O(dt, nodes, members(mask)); };

  SubmodularityReport report;
  auto check = [&](std::uint64_t small, std::uint64_t large, std::size_t x,
                   const ObjectiveGain& gs, const ObjectiveGain& gl) {
    ++report.checked;
    if (gs < gl) {
      report.violations.push_back({members(small), members(large), candidates[x], gs, gl});
    }
  };

  if (trials == 0) {
    if (n > 20) throw Error("exhaustive submodularity check limited to 20 candidates");
    const std::uint64_t full = std::uint64_t{1} << n;
    std::vector<ObjectiveValue> table(full);
    for (std::uint64_t m = 0; m < full; ++m) table[m] = value(m);
    for (std::uint64_t large = 0; large < full; ++large) {
      for (std::size_t x = 0; x < n; ++x) {
        const std::uint64_t bit = std::uint64_t{1} << x;
        if (large & bit) continue;
        const ObjectiveGain gl = table[large] - table[large | bit];
        // Every submask of `large`, including the empty set.
        for (std::uint64_t small = large;; small = (small - 1) & large) {
          check(small, large, x, table[small] - table[small | bit], gl);
          if (small == 0) break;
        }
      }
    }
    return report;
  }

  if (!rng) throw Error("sampled submodularity check needs a random source");
  if (n == 0 || n > 63) return report;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const std::size_t x = rng->below(n);
    std::uint64_t large = 0, small = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == x) continue;
      if (rng->below(2)) {
        large |= std::uint64_t{1} << i;
        if (rng->below(2)) small |= std::uint64_t{1} << i;
      }
    }
    const std::uint64_t bit = std::uint64_t{1} << x;
    check(small, large, x, value(small) - value(small | bit), value(large) - value(large | bit));
  }
  return report;
}

}  // namespace tmut::selection
