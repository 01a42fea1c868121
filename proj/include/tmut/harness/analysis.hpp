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
#include <atomic>
#include <cstdint>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "tmut/harness/defect.hpp"
#include "tmut/mutators/apply.hpp"
#include "tmut/mutators/pool.hpp"
#include "tmut/util/error.hpp"

namespace tmut::harness {

using minilang::Verdict;
using mutators::MutantPool;

// A test failed on the unmutated program, so kills cannot be attributed.
class BaselineFailure : public Error {
 public:
  BaselineFailure(std::string test, Verdict v)
      : Error("baseline test '" + test + "' does not pass (" + std::string(minilang::to_string(v)) +
              ")"),
        test_(std::move(test)) {}
  const std::string& test() const { return test_; }

 private:
  std::string test_;
};

struct ExcludedMutant {
  std::string id;
  std::string diagnostic;
};

// Verdict of every test on every analyzed mutant. Rows follow pool order;
// mutants that could not be compiled are listed in `excluded` instead.
struct KillMatrix {
  std::vector<std::string> test_names;
  std::vector<bool> triggering;  // parallel to test_names
  std::vector<std::string> mutant_ids;
  std::vector<std::vector<Verdict>> verdicts;  // [mutant][test]
  std::vector<ExcludedMutant> excluded;

  std::optional<std::size_t> row(const std::string& id) const {
    auto it = std::find(mutant_ids.begin(), mutant_ids.end(), id);
    if (it == mutant_ids.end()) return std::nullopt;
    return static_cast<std::size_t>(it - mutant_ids.begin());
  }
  // Any outcome other than pass kills, since every test passed on the
  // unmutated program.
  bool killed(std::size_t m, std::size_t t) const { return verdicts[m][t] != Verdict::Pass; }
  bool killed_by(std::size_t m, bool by_triggering) const {
    for (std::size_t t = 0; t < test_names.size(); ++t) {
      if (triggering[t] == by_triggering && killed(m, t)) return true;
    }
    return false;
  }
  bool killed_by_triggering(std::size_t m) const { return killed_by(m, true); }
  bool killed_by_non_triggering(std::size_t m) const { return killed_by(m, false); }
};

struct AnalysisOptions {
  std::uint64_t step_limit = minilang::kDefaultStepLimit;
  unsigned jobs = 0;  // 0: one worker per hardware thread
};

inline unsigned effective_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  return std::max(1U, std::thread::hardware_concurrency());
}

// Runs every test against every mutant of `pool`, after checking that the
// whole suite passes on the unmutated program.
inline KillMatrix mutation_analysis(const Defect& defect, const MutantPool& pool,
                                    const AnalysisOptions& options = {}) {
  const minilang::TypedProgram base = minilang::compile(defect.source);
  KillMatrix km;
  for (const TestCase& t : defect.tests) {
    minilang::validate_test(base, t);
    const Verdict v = minilang::run_test(base, t, options.step_limit);
    if (v != Verdict::Pass) throw BaselineFailure(t.name, v);
    km.test_names.push_back(t.name);
    km.triggering.push_back(t.triggering);
  }

  struct Row {
    std::vector<Verdict> verdicts;
    std::string diagnostic;
    bool ok = false;
  };
  std::vector<Row> rows(pool.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < pool.size(); i = next++) {
      Row& row = rows[i];
      try {
        const minilang::TypedProgram prog = mutators::compile_mutant(defect.source, pool[i]);
        for (const TestCase& t : defect.tests) {
          row.verdicts.push_back(minilang::run_test(prog, t, options.step_limit));
        }
        row.ok = true;
      } catch (const Error& e) {
        row.diagnostic = e.what();
      }
    }
  };
  const unsigned jobs = std::min<std::size_t>(effective_jobs(options.jobs),
                                              std::max<std::size_t>(1, pool.size()));
  std::vector<std::thread> threads;
  for (unsigned j = 1; j < jobs; ++j) threads.emplace_back(worker);
  worker();
  for (auto& th : threads) th.join();

  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (rows[i].ok) {
      km.mutant_ids.push_back(pool[i].id);
      km.verdicts.push_back(std::move(rows[i].verdicts));
    } else {
      km.excluded.push_back({pool[i].id, std::move(rows[i].diagnostic)});
    }
  }
  return km;
}

// Mutants killed by at least one triggering test and by no other test.
inline std::set<std::string> coupled_mutants(const KillMatrix& km) {
  std::set<std::string> out;
  for (std::size_t m = 0; m < km.mutant_ids.size(); ++m) {
    if (km.killed_by_triggering(m) && !km.killed_by_non_triggering(m)) {
      out.insert(km.mutant_ids[m]);
    }
  }
  return out;
}

}  // namespace tmut::harness
