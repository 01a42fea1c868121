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
#include <compare>
#include <cstdint>
#include <deque>
#include <limits>
#include <vector>

#include "tmut/cfg/cfg.hpp"
#include "tmut/util/error.hpp"

namespace tmut::cfg {

// Edge count between two nodes, or INFINITE when no path exists. INFINITE
// is a state, not a large number: it has no value().
class Distance {
 public:
  constexpr Distance() = default;  // INFINITE
  constexpr explicit Distance(std::uint32_t edges) : v_(edges) {}

  static constexpr Distance infinite() { return Distance(); }

  constexpr bool finite() const { return v_ != kInf; }
  constexpr bool is_infinite() const { return v_ == kInf; }
  constexpr std::uint32_t value() const {
    if (v_ == kInf) throw Error("INFINITE distance has no value");
    return v_;
  }

  friend constexpr bool operator==(Distance, Distance) = default;
  // INFINITE orders after every finite distance.
  friend constexpr std::strong_ordering operator<=>(Distance a, Distance b) {
    return a.v_ <=> b.v_;
  }

 private:
  static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t v_ = kInf;
};

// Symmetric-min distances: d(s,t) = min(shortest s->t, shortest t->s).
class DistanceTable {
 public:
  DistanceTable() = default;
  explicit DistanceTable(std::vector<std::vector<std::vector<Distance>>> per_cfg)
      : d_(std::move(per_cfg)) {}

  std::size_t cfg_count() const { return d_.size(); }
  std::size_t node_count(std::size_t cfg) const { return d_.at(cfg).size(); }

  Distance at(NodeRef s, NodeRef t) const {
    check(s);
    check(t);
    if (s.cfg != t.cfg) return Distance::infinite();
    return d_[s.cfg][s.node][t.node];
  }

 private:
  void check(NodeRef n) const {
    if (n.cfg >= d_.size() || n.node >= d_[n.cfg].size()) {
      throw Error("unknown CFG node " + std::to_string(n.cfg) + ":" + std::to_string(n.node));
    }
  }

  std::vector<std::vector<std::vector<Distance>>> d_;
};

namespace detail {

inline std::vector<Distance> bfs(const std::vector<std::vector<std::size_t>>& adj,
                                 std::size_t source) {
  std::vector<Distance> dist(adj.size());
  std::deque<std::size_t> queue{source};
  dist[source] = Distance(0);
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : adj[u]) {
      if (dist[v].is_infinite()) {
        dist[v] = Distance(dist[u].value() + 1);
        queue.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace detail

inline DistanceTable all_distances(const std::vector<Cfg>& cfgs) {
  std::vector<std::vector<std::vector<Distance>>> table;
  table.reserve(cfgs.size());
  for (const Cfg& g : cfgs) {
    const std::size_t n = g.nodes.size();
    std::vector<std::vector<std::size_t>> fwd(n), rev(n);
    for (const auto& [a, b] : g.edges) {
      fwd[a].push_back(b);
      rev[b].push_back(a);
    }
    std::vector<std::vector<Distance>> m(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<Distance> f = detail::bfs(fwd, s);
      const std::vector<Distance> r = detail::bfs(rev, s);
      for (std::size_t t = 0; t < n; ++t) f[t] = std::min(f[t], r[t]);
      m[s] = std::move(f);
    }
    table.push_back(std::move(m));
  }
  return DistanceTable(std::move(table));
}

inline Distance node_distance(const DistanceTable& dt, NodeRef s, NodeRef t) {
  return dt.at(s, t);
}

}  // namespace tmut::cfg
