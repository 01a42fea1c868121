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

// Umbrella header for the whole library.

#include "tmut/version.hpp"
#include "tmut/util/artifact.hpp"
#include "tmut/util/error.hpp"
#include "tmut/util/hash.hpp"
#include "tmut/util/rng.hpp"
#include "tmut/minilang/lexer.hpp"
#include "tmut/minilang/parser.hpp"
#include "tmut/minilang/checker.hpp"
#include "tmut/minilang/interpreter.hpp"
#include "tmut/minilang/test_case.hpp"
#include "tmut/cfg/cfg.hpp"
#include "tmut/cfg/distance.hpp"
#include "tmut/mutators/literal.hpp"
#include "tmut/mutators/pool.hpp"
#include "tmut/mutators/apply.hpp"
#include "tmut/lm/ngram.hpp"
#include "tmut/lm/naturalness.hpp"
#include "tmut/selection/objective.hpp"
#include "tmut/selection/greedy.hpp"
#include "tmut/selection/submodularity.hpp"
#include "tmut/selection/plan.hpp"
#include "tmut/selection/policies.hpp"
#include "tmut/harness/defect.hpp"
#include "tmut/harness/analysis.hpp"
#include "tmut/harness/scope.hpp"
#include "tmut/harness/effectiveness.hpp"
#include "tmut/harness/pipeline.hpp"
#include "tmut/harness/report.hpp"
