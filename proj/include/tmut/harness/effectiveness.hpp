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
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "tmut/cfg/distance.hpp"
#include "tmut/mutators/pool.hpp"
#include "tmut/selection/policies.hpp"
#include "tmut/util/error.hpp"
#include "tmut/util/rng.hpp"

namespace tmut::harness {

using selection::Policy;

// Probability that κ mutants drawn uniformly without replacement from M
// include at least one of λ coupled ones:
//   1 - ((M-κ)! (M-λ)!) / (M! (M-κ-λ)!), or 1 when M-κ < λ.
inline double analytic_random_effectiveness(std::uint64_t kappa, std::uint64_t lambda,
                                            std::uint64_t m) {
  if (lambda > m) throw Error("coupled count exceeds pool size");
  if (kappa < 1 || kappa > m) throw Error("budget must lie in [1, pool size]");
  if (lambda == 0) return 0.0;
  if (m - kappa < lambda) return 1.0;
  auto lf = [](std::uint64_t x) { return std::lgamma(static_cast<double>(x) + 1.0); };
  const double log_miss = lf(m - kappa) + lf(m - lambda) - lf(m) - lf(m - kappa - lambda);
  return 1.0 - std::exp(log_miss);
}

// Per-defect κ for a budget fraction: round(b·M), at least 1.
inline std::size_t budget_for(double fraction, std::size_t pool_size) {
  const auto k = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(pool_size)));
  return std::max<std::size_t>(1, k);
}

// Everything the curve needs about one defect at one scope.
struct CurveSubject {
  std::string name;
  mutators::MutantPool pool;
  std::vector<cfg::Cfg> cfgs;
  cfg::DistanceTable dt;
  std::set<std::string> coupled;  // restricted to `pool` by the curve
};

struct CurvePoint {
  double budget = 0;
  double mean = 0;      // mean over trials of the suite effectiveness
  double stddev = 0;    // sample standard deviation across trials
  double analytic = 0;  // suite mean of the analytic random baseline
};

struct CurveData {
  Policy policy = Policy::FullyRandom;
  std::vector<double> budgets;
  std::size_t trials = 0;                    // 1 for deterministic policies
  std::vector<std::vector<double>> per_trial;  // [trial][budget] suite effectiveness
  std::vector<CurvePoint> points;
};

inline void validate_budgets(const std::vector<double>& budgets) {
  if (budgets.empty()) throw Error("no budgets given");
  for (double b : budgets) {
    if (!(b > 0.0 && b <= 1.0)) throw Error("budget fractions must lie in (0, 1]");
  }
}

// Monte Carlo effectiveness of `policy` over a defect suite. Each trial
// draws one full selection order per defect (seed derived from the master
// seed, policy, defect and trial); the selection for budget b is the
// first κ_d = max(1, round(b·|pool_d|)) entries, and a defect counts as
// found when that prefix holds a coupled mutant.
inline CurveData effectiveness_curve(const std::vector<CurveSubject>& subjects, Policy policy,
                                     const std::vector<double>& budgets, std::size_t trials,
                                     std::uint64_t master_seed) {
  if (subjects.empty()) throw Error("effectiveness curve needs at least one defect");
  validate_budgets(budgets);
  if (trials == 0) throw Error("trials must be at least 1");

  CurveData data;
  data.policy = policy;
  data.budgets = budgets;
  data.trials = selection::is_stochastic(policy) ? trials : 1;
  data.per_trial.assign(data.trials, std::vector<double>(budgets.size(), 0.0));

  const double weight = 1.0 / static_cast<double>(subjects.size());
  for (std::size_t d = 0; d < subjects.size(); ++d) {
    const CurveSubject& s = subjects[d];
    if (s.pool.empty()) continue;  // nothing to select: never found
    std::vector<cfg::NodeRef> locations;
    if (policy != Policy::FullyRandom && policy != Policy::RandomLocationFirst) {
      locations = selection::min_distance_locations(s.pool, s.cfgs, s.dt);
    }
    std::vector<std::size_t> kappas;
    for (double b : budgets) kappas.push_back(budget_for(b, s.pool.size()));
    for (std::size_t t = 0; t < data.trials; ++t) {
      Rng rng(derive_seed(master_seed, {static_cast<std::uint64_t>(policy), d, t}));
      const auto order = selection::policy_order(policy, s.pool, locations, rng, &s.coupled);
      std::size_t first = order.size();  // position of the first coupled mutant
      for (std::size_t i = 0; i < order.size(); ++i) {
        if (s.coupled.count(s.pool[order[i]].id)) {
          first = i;
          break;
        }
      }
      for (std::size_t b = 0; b < budgets.size(); ++b) {
        if (kappas[b] > first) data.per_trial[t][b] += weight;
      }
    }
  }

  for (std::size_t b = 0; b < budgets.size(); ++b) {
    CurvePoint p;
    p.budget = budgets[b];
    double sum = 0;
    for (const auto& row : data.per_trial) sum += row[b];
    p.mean = sum / static_cast<double>(data.trials);
    if (data.trials > 1) {
      double sq = 0;
      for (const auto& row : data.per_trial) sq += (row[b] - p.mean) * (row[b] - p.mean);
      p.stddev = std::sqrt(sq / static_cast<double>(data.trials - 1));
    }
    for (const CurveSubject& s : subjects) {
      if (s.pool.empty()) continue;
      std::size_t lambda = 0;
      for (const auto& m : s.pool.mutants()) lambda += s.coupled.count(m.id);
      const std::size_t kappa = std::min(budget_for(budgets[b], s.pool.size()), s.pool.size());
      p.analytic += weight * analytic_random_effectiveness(kappa, lambda, s.pool.size());
    }
    data.points.push_back(p);
  }
  return data;
}

// Mean over trials of the smallest budget at which the suite effectiveness
// reaches its value at the largest budget. Budgets must be ascending.
inline double mean_first_attainment(const CurveData& data) {
  if (data.per_trial.empty()) throw Error("empty curve");
  if (!std::is_sorted(data.budgets.begin(), data.budgets.end())) {
    throw Error("budgets must be ascending");
  }
  double sum = 0;
  for (const auto& row : data.per_trial) {
    const double target = row.back();
    for (std::size_t b = 0; b < row.size(); ++b) {
      if (row[b] >= target - 1e-12) {
        sum += data.budgets[b];
        break;
      }
    }
  }
  return sum / static_cast<double>(data.per_trial.size());
}

// 0.01, 0.02, ..., 1.00 built from integers so every value is exact to print.
inline std::vector<double> percent_grid() {
  std::vector<double> out;
  for (int i = 1; i <= 100; ++i) out.push_back(i / 100.0);
  return out;
}

}  // namespace tmut::harness
