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

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "tmut/cfg/distance.hpp"

namespace tmut::selection {

using cfg::Cfg;
using cfg::Distance;
using cfg::DistanceTable;
using cfg::NodeRef;

// Sum over all nodes of the distance to the nearest selected location,
// kept as (number of INFINITE terms, sum of finite terms) and compared
// lexicographically.
struct ObjectiveValue {
  std::uint64_t infinite_count = 0;
  std::uint64_t finite_sum = 0;

  friend auto operator<=>(const ObjectiveValue&, const ObjectiveValue&) = default;
};

// Difference of two objective values, componentwise; ordered
// lexicographically like the values themselves.
struct ObjectiveGain {
  std::int64_t infinite = 0;
  std::int64_t finite = 0;

  friend auto operator<=>(const ObjectiveGain&, const ObjectiveGain&) = default;
};

inline ObjectiveGain operator-(const ObjectiveValue& a, const ObjectiveValue& b) {
  return {static_cast<std::int64_t>(a.infinite_count) - static_cast<std::int64_t>(b.infinite_count),
          static_cast<std::int64_t>(a.finite_sum) - static_cast<std::int64_t>(b.finite_sum)};
}

// Statement and branch-condition nodes of every CFG, in CFG then id order.
inline std::vector<NodeRef> executable_nodes(const std::vector<Cfg>& cfgs) {
  std::vector<NodeRef> out;
  for (std::size_t c = 0; c < cfgs.size(); ++c) {
    for (std::size_t id : cfgs[c].executable_nodes()) out.push_back({c, id});
  }
  return out;
}

inline void accumulate(ObjectiveValue& acc, Distance d) {
  if (d.is_infinite()) {
    ++acc.infinite_count;
  } else {
    acc.finite_sum += d.value();
  }
}

// O(L) over `nodes`. An empty L leaves every node at INFINITE distance.
inline ObjectiveValue objective_O(const DistanceTable& dt, std::span<const NodeRef> nodes,
                                  std::span<const NodeRef> selected) {
  ObjectiveValue v;
  for (const NodeRef& n : nodes) {
    Distance best = Distance::infinite();
    for (const NodeRef& l : selected) best = std::min(best, dt.at(n, l));
    accumulate(v, best);
  }
  return v;
}

}  // namespace tmut::selection
