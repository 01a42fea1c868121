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
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "tmut/cfg/distance.hpp"
#include "tmut/lm/naturalness.hpp"
#include "tmut/mutators/pool.hpp"
#include "tmut/selection/greedy.hpp"
#include "tmut/selection/plan.hpp"
#include "tmut/util/error.hpp"
#include "tmut/util/rng.hpp"

namespace tmut::selection {

using mutators::MutantPool;

// Orders the pool indices hosted at one location (given in pool order).
using LocationRanker = std::function<std::vector<std::size_t>(std::span<const std::size_t>)>;

namespace detail {

inline void require_pool(const MutantPool& pool, std::size_t kappa) {
  if (pool.empty()) throw Error("cannot select from an empty mutant pool");
  if (kappa == 0) throw Error("budget must be at least 1");
}

inline SelectionPlan make_plan(const MutantPool& pool, Policy policy, std::size_t kappa,
                               std::uint64_t seed, std::span<const std::size_t> order) {
  SelectionPlan plan{policy, kappa, seed, {}};
  const std::size_t n = std::min(kappa, order.size());
  for (std::size_t i = 0; i < n; ++i) plan.mutant_ids.push_back(pool[order[i]].id);
  return plan;
}

}  // namespace detail

// Full selection orders. Every policy's plan for budget κ is the first κ
// entries of its order drawn from the same random state.

// Uniform random permutation of the pool (Fisher–Yates from the front).
inline std::vector<std::size_t> fully_random_order(const MutantPool& pool, Rng& rng) {
  std::vector<std::size_t> order(pool.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    std::swap(order[i], order[i + rng.below(order.size() - i)]);
  }
  return order;
}

// Repeatedly draws a uniformly random non-exhausted location, then a
// uniformly random remaining mutant at it.
inline std::vector<std::size_t> random_location_first_order(const MutantPool& pool, Rng& rng) {
  std::vector<std::vector<std::size_t>> open;
  for (const auto& [loc, idx] : pool.by_location()) open.push_back(idx);
  std::vector<std::size_t> order;
  order.reserve(pool.size());
  while (!open.empty()) {
    const std::size_t l = rng.below(open.size());
    std::vector<std::size_t>& at = open[l];
    const std::size_t k = rng.below(at.size());
    order.push_back(at[k]);
    at.erase(at.begin() + static_cast<std::ptrdiff_t>(k));
    if (at.empty()) open.erase(open.begin() + static_cast<std::ptrdiff_t>(l));
  }
  return order;
}

// Traditional mutants first in their given order, then tailored mutants from
// the least to the most natural (ascending S), ties by mutant id. Uses the
// scores stored in the pool; an unscored tailored mutant is an error.
inline std::vector<std::size_t> rank_at_location(const MutantPool& pool,
                                                 std::span<const std::size_t> at) {
  std::vector<std::size_t> traditional, tailored;
  for (std::size_t i : at) {
    const mutators::Mutant& m = pool[i];
    if (m.kind() == mutators::KindClass::Traditional) {
      traditional.push_back(i);
    } else {
      if (!m.naturalness) throw Error("mutant " + m.id + " has no naturalness score");
      tailored.push_back(i);
    }
  }
  std::stable_sort(tailored.begin(), tailored.end(), [&](std::size_t a, std::size_t b) {
    if (*pool[a].naturalness != *pool[b].naturalness) {
      return *pool[a].naturalness < *pool[b].naturalness;
    }
    return pool[a].id < pool[b].id;
  });
  traditional.insert(traditional.end(), tailored.begin(), tailored.end());
  return traditional;
}

// Same ranking, scoring the tailored mutants against `model` on the fly.
inline std::vector<std::size_t> rank_at_location(const MutantPool& pool,
                                                 std::span<const std::size_t> at,
                                                 const lm::NgramModel& model,
                                                 const minilang::TokenStream& tokens,
                                                 lm::ScoreWindow window = lm::ScoreWindow::Literal) {
  std::vector<mutators::Mutant> copies;
  for (std::size_t i : at) copies.push_back(pool[i]);
  MutantPool local(std::move(copies));
  lm::score_pool(local, model, tokens, window);
  std::vector<std::size_t> positions(at.size());
  for (std::size_t i = 0; i < positions.size(); ++i) positions[i] = i;
  std::vector<std::size_t> ranked = rank_at_location(local, positions);
  for (std::size_t& r : ranked) r = at[r];
  return ranked;
}

// Coupled mutants first, then the rest, each group in id order.
inline std::vector<std::size_t> oracle_rank_at_location(const MutantPool& pool,
                                                        std::span<const std::size_t> at,
                                                        const std::set<std::string>& coupled) {
  std::vector<std::size_t> out(at.begin(), at.end());
  std::sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) {
    const bool ca = coupled.count(pool[a].id) != 0;
    const bool cb = coupled.count(pool[b].id) != 0;
    if (ca != cb) return ca;
    return pool[a].id < pool[b].id;
  });
  return out;
}

inline LocationRanker naturalness_ranker(const MutantPool& pool) {
  return [&pool](std::span<const std::size_t> at) { return rank_at_location(pool, at); };
}

inline LocationRanker oracle_ranker(const MutantPool& pool, const std::set<std::string>& coupled) {
  return [&pool, &coupled](std::span<const std::size_t> at) {
    return oracle_rank_at_location(pool, at, coupled);
  };
}

// Uniformly random order at each location; consumes `rng` per call.
inline LocationRanker random_ranker(Rng& rng) {
  return [&rng](std::span<const std::size_t> at) {
    std::vector<std::size_t> out(at.begin(), at.end());
    for (std::size_t i = 0; i + 1 < out.size(); ++i) {
      std::swap(out[i], out[i + rng.below(out.size() - i)]);
    }
    return out;
  };
}

// Greedy location order over every location hosting a mutant.
inline std::vector<NodeRef> min_distance_locations(const MutantPool& pool,
                                                   const std::vector<Cfg>& cfgs,
                                                   const DistanceTable& dt) {
  const std::vector<NodeRef> candidates = pool.locations();
  return greedy_min_distance(dt, cfgs, candidates, candidates.size()).locations;
}

// One mutant per location in greedy order, then round-robin over the same
// location order taking each location's next-ranked remaining mutant.
// Locations are ranked in greedy order, so random rankers draw in that order.
inline std::vector<std::size_t> min_distance_order(const MutantPool& pool,
                                                   std::span<const NodeRef> locations,
                                                   const LocationRanker& ranker) {
  std::vector<std::vector<std::size_t>> ranked;
  for (const NodeRef& loc : locations) {
    auto it = pool.by_location().find(loc);
    if (it == pool.by_location().end()) throw Error("location hosts no mutant");
    ranked.push_back(ranker(it->second));
  }
  std::vector<std::size_t> order;
  order.reserve(pool.size());
  for (std::size_t round = 0; order.size() < pool.size(); ++round) {
    bool any = false;
    for (const auto& list : ranked) {
      if (round < list.size()) {
        order.push_back(list[round]);
        any = true;
      }
    }
    if (!any) break;
  }
  return order;
}

inline SelectionPlan select_fully_random(const MutantPool& pool, std::size_t kappa, Rng& rng,
                                         std::uint64_t seed = 0) {
  detail::require_pool(pool, kappa);
  const auto order = fully_random_order(pool, rng);
  return detail::make_plan(pool, Policy::FullyRandom, kappa, seed, order);
}

inline SelectionPlan select_random_location_first(const MutantPool& pool, std::size_t kappa,
                                                  Rng& rng, std::uint64_t seed = 0) {
  detail::require_pool(pool, kappa);
  const auto order = random_location_first_order(pool, rng);
  return detail::make_plan(pool, Policy::RandomLocationFirst, kappa, seed, order);
}

inline SelectionPlan select_min_distance(const MutantPool& pool, const std::vector<Cfg>& cfgs,
                                         const DistanceTable& dt, std::size_t kappa,
                                         const LocationRanker& ranker, Policy policy,
                                         std::uint64_t seed = 0) {
  detail::require_pool(pool, kappa);
  const auto locations = min_distance_locations(pool, cfgs, dt);
  const auto order = min_distance_order(pool, locations, ranker);
  return detail::make_plan(pool, policy, kappa, seed, order);
}

// Full order for any policy. `coupled` is consulted only by the oracle.
inline std::vector<std::size_t> policy_order(Policy policy, const MutantPool& pool,
                                             std::span<const NodeRef> greedy_locations, Rng& rng,
                                             const std::set<std::string>* coupled = nullptr) {
  switch (policy) {
    case Policy::FullyRandom: return fully_random_order(pool, rng);
    case Policy::RandomLocationFirst: return random_location_first_order(pool, rng);
    case Policy::MinDistRandom: return min_distance_order(pool, greedy_locations, random_ranker(rng));
    case Policy::MinDistNaturalness:
      return min_distance_order(pool, greedy_locations, naturalness_ranker(pool));
    case Policy::MinDistOracle: {
      static const std::set<std::string> kNone;
      return min_distance_order(pool, greedy_locations, oracle_ranker(pool, coupled ? *coupled : kNone));
    }
  }
  return {};
}

// Plan for any policy: the first κ entries of its full order.
inline SelectionPlan select(Policy policy, const MutantPool& pool, const std::vector<Cfg>& cfgs,
                            const DistanceTable& dt, std::size_t kappa, std::uint64_t seed,
                            const std::set<std::string>* coupled = nullptr) {
  detail::require_pool(pool, kappa);
  Rng rng(seed);
  std::vector<NodeRef> locations;
  if (policy != Policy::FullyRandom && policy != Policy::RandomLocationFirst) {
    locations = min_distance_locations(pool, cfgs, dt);
  }
  const auto order = policy_order(policy, pool, locations, rng, coupled);
  return detail::make_plan(pool, policy, kappa, seed, order);
}

}  // namespace tmut::selection
