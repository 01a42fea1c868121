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
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "tmut/selection/objective.hpp"
#include "tmut/util/error.hpp"

namespace tmut::selection {

struct GreedyResult {
  std::vector<NodeRef> locations;         // selection order, L*_1 ⊂ L*_2 ⊂ ...
  ObjectiveValue initial;                 // O(∅)
  std::vector<ObjectiveValue> objectives; // objectives[k] = O(L*_{k+1})

  // Objective decrease contributed by each pick.
  std::vector<ObjectiveGain> decreases() const {
    std::vector<ObjectiveGain> out;
    ObjectiveValue prev = initial;
    for (const ObjectiveValue& v : objectives) {
      out.push_back(prev - v);
      prev = v;
    }
    return out;
  }
};

// Greedy approximation of argmin_{|L|=κ} O(L) over the executable nodes of
// `cfgs`: each step adds the candidate whose addition yields the smallest
// objective, ties going to the smallest (CFG owner, node id).
inline GreedyResult greedy_min_distance(const DistanceTable& dt, const std::vector<Cfg>& cfgs,
                                        std::span<const NodeRef> candidates, std::size_t kappa) {
  if (candidates.empty()) throw Error("greedy selection needs at least one candidate location");
  if (kappa == 0) throw Error("budget must be at least 1");
  const std::vector<NodeRef> nodes = executable_nodes(cfgs);

  auto key = [&](const NodeRef& n) { return std::tie(cfgs.at(n.cfg).owner, n.node); };
  std::vector<NodeRef> remaining(candidates.begin(), candidates.end());
  std::sort(remaining.begin(), remaining.end(),
            [&](const NodeRef& a, const NodeRef& b) { return key(a) < key(b); });
  remaining.erase(std::unique(remaining.begin(), remaining.end()), remaining.end());

  GreedyResult r;
  std::vector<Distance> nearest(nodes.size(), Distance::infinite());
  r.initial = ObjectiveValue{nodes.size(), 0};
  const std::size_t steps = std::min(kappa, remaining.size());
  for (std::size_t step = 0; step < steps; ++step) {
    std::size_t best = 0;
    ObjectiveValue best_value;
    for (std::size_t c = 0; c < remaining.size(); ++c) {
      ObjectiveValue v;
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        accumulate(v, std::min(nearest[i], dt.at(nodes[i], remaining[c])));
      }
      // `remaining` is sorted by the tie key, so strict < keeps the smallest.
      if (c == 0 || v < best_value) {
        best = c;
        best_value = v;
      }
    }
    const NodeRef chosen = remaining[best];
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      nearest[i] = std::min(nearest[i], dt.at(nodes[i], chosen));
    }
    r.locations.push_back(chosen);
    r.objectives.push_back(best_value);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return r;
}

}  // namespace tmut::selection
