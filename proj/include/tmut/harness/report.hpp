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

#include <array>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "tmut/harness/analysis.hpp"
#include "tmut/harness/scope.hpp"
#include "tmut/mutators/mutant.hpp"

namespace tmut::harness {

using mutators::Operator;

// Analysis of one defect: its kill matrix and the pool restricted to each
// scope (indexed by Scope).
struct DefectResult {
  std::string name;
  KillMatrix matrix;
  std::array<mutators::MutantPool, 3> scoped;

  const mutators::MutantPool& pool(Scope s) const { return scoped[static_cast<std::size_t>(s)]; }

  // Coupled mutants of the analysis that lie in scope `s`.
  std::set<std::string> coupled(Scope s) const {
    std::set<std::string> out;
    for (const std::string& id : coupled_mutants(matrix)) {
      if (pool(s).find(id)) out.insert(id);
    }
    return out;
  }
};

struct OperatorRow {
  Operator op = Operator::ROR;
  std::size_t coupled_defects = 0;  // defects with a coupled mutant at line scope
  std::size_t unique_defects = 0;   // ... where no other operator has one
  // Averages over defects where the operator has at least one mutant in
  // scope; empty when it has none anywhere.
  std::array<std::optional<double>, 3> avg_mutants;
  std::array<std::optional<double>, 3> avg_killed;  // non-triggering kill rate in [0, 1]
};

struct CouplingReport {
  std::vector<OperatorRow> operators;  // every operator, enum order
};

inline CouplingReport operator_report(const std::vector<DefectResult>& results) {
  CouplingReport report;
  for (Operator op : mutators::kAllOperators) {
    OperatorRow row;
    row.op = op;
    report.operators.push_back(row);
  }

  struct Acc {
    double sum = 0;
    std::size_t n = 0;
  };
  std::map<std::pair<Operator, Scope>, std::pair<Acc, Acc>> acc;  // mutants, kill rate

  for (const DefectResult& r : results) {
    std::set<Operator> coupled_ops;
    for (const std::string& id : r.coupled(Scope::Line)) {
      coupled_ops.insert(r.pool(Scope::Line)[*r.pool(Scope::Line).find(id)].op);
    }
    for (Operator op : coupled_ops) {
      OperatorRow& row = report.operators[static_cast<std::size_t>(op)];
      ++row.coupled_defects;
      if (coupled_ops.size() == 1) ++row.unique_defects;
    }
    for (Scope s : kAllScopes) {
      std::map<Operator, std::pair<std::size_t, std::size_t>> counts;  // analyzed, killed
      for (const auto& m : r.pool(s).mutants()) {
        const auto row = r.matrix.row(m.id);
        if (!row) continue;  // excluded from the analysis
        auto& c = counts[m.op];
        ++c.first;
        if (r.matrix.killed_by_non_triggering(*row)) ++c.second;
      }
      for (const auto& [op, c] : counts) {
        auto& [mutants, killed] = acc[{op, s}];
        mutants.sum += static_cast<double>(c.first);
        ++mutants.n;
        killed.sum += static_cast<double>(c.second) / static_cast<double>(c.first);
        ++killed.n;
      }
    }
  }
  for (const auto& [key, value] : acc) {
    OperatorRow& row = report.operators[static_cast<std::size_t>(key.first)];
    const auto s = static_cast<std::size_t>(key.second);
    row.avg_mutants[s] = value.first.sum / static_cast<double>(value.first.n);
    row.avg_killed[s] = value.second.sum / static_cast<double>(value.second.n);
  }
  return report;
}

namespace detail {

inline std::string fixed(std::optional<double> v, int precision) {
  if (!v) return "";
  std::ostringstream ss;
  ss.setf(std::ios::fixed);
  ss.precision(precision);
  ss << *v;
  return ss.str();
}

}  // namespace detail

// Columns follow the coupled/unique, mutants-per-scope, killed-per-scope
// layout; kill rates are percentages.
inline void write_operator_csv(std::ostream& os, const CouplingReport& report) {
  os << "operator,coupled,unique,mutants_class,mutants_method,mutants_line,"
        "killed_pct_class,killed_pct_method,killed_pct_line\n";
  for (const OperatorRow& row : report.operators) {
    os << mutators::to_string(row.op) << ',' << row.coupled_defects << ',' << row.unique_defects;
    for (const auto& v : row.avg_mutants) os << ',' << detail::fixed(v, 2);
    for (const auto& v : row.avg_killed) {
      os << ',' << detail::fixed(v ? std::optional<double>(*v * 100.0) : std::nullopt, 1);
    }
    os << '\n';
  }
}

inline nlohmann::ordered_json operator_report_to_json(const CouplingReport& report) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const OperatorRow& row : report.operators) {
    nlohmann::ordered_json j;
    j["operator"] = std::string(mutators::to_string(row.op));
    j["coupled_defects"] = row.coupled_defects;
    j["unique_defects"] = row.unique_defects;
    for (Scope s : kAllScopes) {
      const auto i = static_cast<std::size_t>(s);
      const std::string name(to_string(s));
      j["avg_mutants"][name] = row.avg_mutants[i] ? nlohmann::ordered_json(*row.avg_mutants[i]) : nlohmann::ordered_json(nullptr);
      j["avg_killed"][name] = row.avg_killed[i] ? nlohmann::ordered_json(*row.avg_killed[i]) : nlohmann::ordered_json(nullptr);
    }
    out.push_back(j);
  }
  return out;
}

inline nlohmann::ordered_json defect_to_json(const DefectResult& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["tests"] = r.matrix.test_names.size();
  j["analyzed"] = r.matrix.mutant_ids.size();
  nlohmann::ordered_json excluded = nlohmann::ordered_json::array();
  for (const auto& e : r.matrix.excluded) excluded.push_back({{"id", e.id}, {"diagnostic", e.diagnostic}});
  j["excluded"] = excluded;
  for (Scope s : kAllScopes) {
    nlohmann::ordered_json sj;
    sj["mutants"] = r.pool(s).size();
    std::size_t killed = 0;
    for (const auto& m : r.pool(s).mutants()) {
      const auto row = r.matrix.row(m.id);
      if (row && r.matrix.killed_by_non_triggering(*row)) ++killed;
    }
    sj["killed_by_non_triggering"] = killed;
    const auto coupled = r.coupled(s);
    sj["coupled"] = std::vector<std::string>(coupled.begin(), coupled.end());
    j["scopes"][std::string(to_string(s))] = sj;
  }
  return j;
}

// One JSON object per mutant: {"id", "verdicts": {test: verdict}}.
inline void write_kill_matrix(std::ostream& os, const KillMatrix& km) {
  for (std::size_t m = 0; m < km.mutant_ids.size(); ++m) {
    nlohmann::ordered_json j;
    j["id"] = km.mutant_ids[m];
    nlohmann::ordered_json v;
    for (std::size_t t = 0; t < km.test_names.size(); ++t) {
      v[km.test_names[t]] = std::string(minilang::to_string(km.verdicts[m][t]));
    }
    j["verdicts"] = v;
    os << j.dump() << '\n';
  }
}

}  // namespace tmut::harness
