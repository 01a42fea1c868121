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

#include <filesystem>
#include <string>
#include <vector>

#include "tmut.hpp"

namespace tmut::support {

inline std::filesystem::path data_dir() { return TMUT_DATA_DIR; }

inline std::string fixture_source(const std::string& name) {
  return harness::read_text_file(data_dir() / "fixtures" / (name + ".mini"));
}

// The six CFG fixtures, in a fixed order.
inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> kNames = {"chain-3", "chain-5",   "diamond",
                                                  "loop",    "nested-if", "two-function"};
  return kNames;
}

inline std::vector<std::filesystem::path> defect_dirs() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(data_dir() / "defects")) {
    if (e.is_directory()) out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// A compiled fixture with its CFGs, distances and candidate locations.
struct FixtureGraph {
  minilang::TypedProgram prog;
  std::vector<cfg::Cfg> cfgs;
  cfg::DistanceTable dt;
  mutators::MutantPool pool;
  std::vector<cfg::NodeRef> locations;
};

inline FixtureGraph load_fixture(const std::string& name) {
  FixtureGraph f{minilang::compile(fixture_source(name)), {}, {}, {}, {}};
  f.cfgs = cfg::build_cfg(f.prog);
  f.dt = cfg::all_distances(f.cfgs);
  f.pool = mutators::generate_pool(f.prog, f.cfgs);
  f.locations = f.pool.locations();
  return f;
}

}  // namespace tmut::support
