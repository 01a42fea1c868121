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
#include <string>

#include "json.hpp"

#include "tmut/util/hash.hpp"
#include "tmut/version.hpp"

namespace tmut {

// Identification stamped into every output file. Reruns with the same
// configuration produce byte-identical files, so no timestamp is kept.
struct ArtifactHeader {
  std::string config_hash;  // hex fnv1a64 of the canonical configuration
  std::uint64_t seed = 0;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kVersion;
    j["config_hash"] = config_hash;
    j["seed"] = seed;
    return j;
  }

  // First line of a JSON-lines file.
  std::string jsonl_line() const {
    nlohmann::ordered_json j = to_json();
    j["header"] = true;
    return j.dump();
  }

  // First line of a CSV file.
  std::string csv_comment() const {
    return std::string("# ") + kToolName + " " + kVersion + " config_hash=" + config_hash +
           " seed=" + std::to_string(seed);
  }
};

}  // namespace tmut
