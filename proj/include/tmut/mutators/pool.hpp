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
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "tmut/mutators/mutant.hpp"
#include "tmut/mutators/nlr.hpp"
#include "tmut/mutators/tailored.hpp"
#include "tmut/mutators/traditional.hpp"
#include "tmut/util/error.hpp"

namespace tmut::mutators {

// An ordered mutant set with location and operator indices. The order is
// the pool's id order used for every tie break.
class MutantPool {
 public:
  MutantPool() = default;
  explicit MutantPool(std::vector<Mutant> mutants) : mutants_(std::move(mutants)) { reindex(); }

  const std::vector<Mutant>& mutants() const { return mutants_; }
  std::size_t size() const { return mutants_.size(); }
  bool empty() const { return mutants_.empty(); }
  const Mutant& operator[](std::size_t i) const { return mutants_[i]; }

  // Pool positions of the mutants at each location, in pool order.
  const std::map<NodeRef, std::vector<std::size_t>>& by_location() const { return by_location_; }
  const std::map<Operator, std::vector<std::size_t>>& by_operator() const { return by_operator_; }

  std::vector<NodeRef> locations() const {
    std::vector<NodeRef> out;
    for (const auto& [loc, ids] : by_location_) out.push_back(loc);
    return out;
  }

  std::optional<std::size_t> find(const std::string& id) const {
    auto it = by_id_.find(id);
    if (it == by_id_.end()) return std::nullopt;
    return it->second;
  }

  MutantPool filter(const std::function<bool(const Mutant&)>& keep) const {
    std::vector<Mutant> out;
    for (const Mutant& m : mutants_) {
      if (keep(m)) out.push_back(m);
    }
    return MutantPool(std::move(out));
  }

  void set_naturalness(std::size_t i, double score) { mutants_[i].naturalness = score; }

 private:
  void reindex() {
    for (std::size_t i = 0; i < mutants_.size(); ++i) {
      const Mutant& m = mutants_[i];
      if (!by_id_.emplace(m.id, i).second) throw Error("duplicate mutant id " + m.id);
      by_location_[m.location].push_back(i);
      by_operator_[m.op].push_back(i);
    }
  }

  std::vector<Mutant> mutants_;
  std::map<NodeRef, std::vector<std::size_t>> by_location_;
  std::map<Operator, std::vector<std::size_t>> by_operator_;
  std::unordered_map<std::string, std::size_t> by_id_;
};

struct GenerateOptions {
  OperatorSet operators = OperatorSet::All;
  const TrigramIndex* index = nullptr;      // NLR is skipped without an index
  std::optional<std::size_t> self_stream;   // program's stream id in `index`
};

// Canonical pool: sorted by (anchor token, operator, replacement), one
// mutant per id.
inline MutantPool generate_pool(const minilang::TypedProgram& prog,
                                const std::vector<cfg::Cfg>& cfgs,
                                const GenerateOptions& options = {}) {
  std::vector<Mutant> all;
  auto take = [&](std::vector<Mutant> part) {
    for (Mutant& m : part) {
      if (includes(options.operators, m.op)) all.push_back(std::move(m));
    }
  };
  if (options.operators != OperatorSet::Tailored) take(generate_traditional(prog, cfgs));
  if (options.operators != OperatorSet::Traditional) {
    take(generate_var(prog, cfgs));
    take(generate_mcr(prog, cfgs));
    if (options.index) take(generate_nlr(prog, cfgs, *options.index, options.self_stream));
  }
  std::stable_sort(all.begin(), all.end(), [](const Mutant& a, const Mutant& b) {
    return std::tie(a.token, a.op, a.replacement) < std::tie(b.token, b.op, b.replacement);
  });
  std::set<std::string> seen;
  std::vector<Mutant> unique;
  for (Mutant& m : all) {
    if (seen.insert(m.id).second) unique.push_back(std::move(m));
  }
  return MutantPool(std::move(unique));
}

// Field order is fixed so pool files are byte-stable.
inline nlohmann::ordered_json mutant_to_json(const Mutant& m) {
  nlohmann::ordered_json j;
  j["id"] = m.id;
  j["operator"] = std::string(to_string(m.op));
  j["kind"] = std::string(to_string(m.kind()));
  j["cfg_owner"] = m.cfg_owner;
  j["cfg_index"] = m.location.cfg;
  j["cfg_node"] = m.location.node;
  j["token_index"] = m.token;
  j["span_first"] = m.span.first;
  j["span_last"] = m.span.last;
  j["original"] = m.original;
  j["replacement"] = m.replacement;
  j["line"] = m.line;
  j["col"] = m.col;
  j["naturalness"] =
      m.naturalness ? nlohmann::ordered_json(*m.naturalness) : nlohmann::ordered_json(nullptr);
  return j;
}

inline Mutant mutant_from_json(const nlohmann::json& j) {
  Mutant m;
  m.id = j.at("id").get<std::string>();
  const auto op = parse_operator(j.at("operator").get<std::string>());
  if (!op) throw Error("unknown operator in mutant " + m.id);
  m.op = *op;
  m.cfg_owner = j.at("cfg_owner").get<std::string>();
  m.location = {j.at("cfg_index").get<std::size_t>(), j.at("cfg_node").get<std::size_t>()};
  m.token = j.at("token_index").get<std::size_t>();
  m.span = {j.at("span_first").get<std::size_t>(), j.at("span_last").get<std::size_t>()};
  m.original = j.at("original").get<std::string>();
  m.replacement = j.at("replacement").get<std::string>();
  m.line = j.at("line").get<std::size_t>();
  m.col = j.at("col").get<std::size_t>();
  if (j.contains("naturalness") && !j.at("naturalness").is_null()) {
    m.naturalness = j.at("naturalness").get<double>();
  }
  return m;
}

// JSON lines: an optional header object (with "header": true) followed by
// one mutant per line.
inline void write_pool(std::ostream& os, const MutantPool& pool,
                       const nlohmann::ordered_json& header = nullptr) {
  if (!header.is_null()) {
    nlohmann::ordered_json h;
    h["header"] = true;
    for (const auto& [k, v] : header.items()) h[k] = v;
    os << h.dump() << '\n';
  }
  for (const Mutant& m : pool.mutants()) os << mutant_to_json(m).dump() << '\n';
}

struct PoolFile {
  nlohmann::json header;
  MutantPool pool;
};

inline PoolFile read_pool(std::istream& is) {
  PoolFile out;
  std::vector<Mutant> mutants;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const nlohmann::json j = nlohmann::json::parse(line);
    if (j.value("header", false)) {
      out.header = j;
      continue;
    }
    mutants.push_back(mutant_from_json(j));
  }
  out.pool = MutantPool(std::move(mutants));
  return out;
}

}  // namespace tmut::mutators
