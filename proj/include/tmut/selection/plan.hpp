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
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "tmut/util/error.hpp"

namespace tmut::selection {

enum class Policy { FullyRandom, RandomLocationFirst, MinDistRandom, MinDistNaturalness, MinDistOracle };

inline constexpr Policy kAllPolicies[] = {Policy::FullyRandom, Policy::RandomLocationFirst,
                                          Policy::MinDistRandom, Policy::MinDistNaturalness,
                                          Policy::MinDistOracle};

// Short names used on the command line and in output files.
inline std::string_view to_string(Policy p) {
  switch (p) {
    case Policy::FullyRandom: return "random";
    case Policy::RandomLocationFirst: return "rand-loc";
    case Policy::MinDistRandom: return "min-dist";
    case Policy::MinDistNaturalness: return "min-dist-nat";
    case Policy::MinDistOracle: return "min-dist-oracle";
  }
  return "?";
}

inline Policy parse_policy(std::string_view s) {
  for (Policy p : kAllPolicies) {
    if (to_string(p) == s) return p;
  }
  throw Error("unknown policy '" + std::string(s) + "'");
}

// Policies whose output depends on the random source.
inline bool is_stochastic(Policy p) {
  return p == Policy::FullyRandom || p == Policy::RandomLocationFirst || p == Policy::MinDistRandom;
}

struct SelectionPlan {
  Policy policy = Policy::FullyRandom;
  std::size_t budget = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> mutant_ids;  // selection order
};

inline nlohmann::ordered_json plan_to_json(const SelectionPlan& plan) {
  nlohmann::ordered_json j;
  j["policy"] = std::string(to_string(plan.policy));
  j["budget"] = plan.budget;
  j["seed"] = plan.seed;
  j["mutant_ids"] = plan.mutant_ids;
  return j;
}

inline SelectionPlan plan_from_json(const nlohmann::json& j) {
  SelectionPlan plan;
  plan.policy = parse_policy(j.at("policy").get<std::string>());
  plan.budget = j.at("budget").get<std::size_t>();
  plan.seed = j.at("seed").get<std::uint64_t>();
  plan.mutant_ids = j.at("mutant_ids").get<std::vector<std::string>>();
  return plan;
}

}  // namespace tmut::selection
