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
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "tmut/minilang/test_case.hpp"
#include "tmut/util/error.hpp"

namespace tmut::harness {

using minilang::TestCase;

// Footprint of the fixing change: the functions and source lines it touched.
struct ScopeSpec {
  std::vector<std::string> functions;
  std::vector<std::size_t> lines;
};

// A fixed program, the footprint of its fix, and a test suite whose
// triggering tests detected the defect.
struct Defect {
  std::string name;
  std::string source;
  ScopeSpec scope;
  std::vector<TestCase> tests;
  std::vector<std::string> corpus;  // extra project sources, file-name order
};

inline std::string read_text_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline nlohmann::json read_json_file(const std::filesystem::path& p) {
  try {
    return nlohmann::json::parse(read_text_file(p));
  } catch (const nlohmann::json::exception& e) {
    throw Error(p.string() + ": " + e.what());
  }
}

inline ScopeSpec scope_from_json(const nlohmann::json& j) {
  ScopeSpec s;
  s.functions = j.value("functions", std::vector<std::string>{});
  s.lines = j.value("lines", std::vector<std::size_t>{});
  return s;
}

// Reads a bundle directory: program.mini, tests.json, scope.json and an
// optional corpus/ directory of *.mini files.
inline Defect load_defect(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw Error("defect bundle not found: " + dir.string());
  Defect d;
  d.name = dir.filename().string();
  if (d.name.empty()) d.name = dir.parent_path().filename().string();
  d.source = read_text_file(dir / "program.mini");
  try {
    d.tests = minilang::tests_from_json(read_json_file(dir / "tests.json"));
  } catch (const nlohmann::json::exception& e) {
    throw Error((dir / "tests.json").string() + ": " + e.what());
  }
  d.scope = scope_from_json(read_json_file(dir / "scope.json"));
  const fs::path corpus = dir / "corpus";
  if (fs::is_directory(corpus)) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(corpus)) {
      if (e.is_regular_file() && e.path().extension() == ".mini") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) d.corpus.push_back(read_text_file(f));
  }
  if (std::none_of(d.tests.begin(), d.tests.end(), [](const TestCase& t) { return t.triggering; })) {
    throw Error("defect '" + d.name + "' has no triggering test");
  }
  return d;
}

}  // namespace tmut::harness
