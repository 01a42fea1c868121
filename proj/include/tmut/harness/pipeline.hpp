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

#include <optional>
#include <string>
#include <vector>

#include "tmut/cfg/distance.hpp"
#include "tmut/lm/naturalness.hpp"
#include "tmut/minilang/checker.hpp"
#include "tmut/mutators/pool.hpp"
#include "tmut/mutators/trigram.hpp"
#include "tmut/util/error.hpp"

namespace tmut::harness {

struct PipelineOptions {
  mutators::OperatorSet operators = mutators::OperatorSet::All;
  std::size_t lm_order = 3;
  std::vector<double> lm_weights;  // empty: default cascade for the order
  bool lm_exclude_self = false;  // train the model on the corpus only
  lm::ScoreWindow window = lm::ScoreWindow::Literal;
};

// A compiled program with its CFGs, distances, and scored mutant pool.
struct Subject {
  minilang::TypedProgram prog;
  std::vector<cfg::Cfg> cfgs;
  cfg::DistanceTable dt;
  mutators::MutantPool pool;
};

// Trains the naturalness model on the corpus plus, unless excluded, the
// program's own tokens.
inline lm::NgramModel train_model(const minilang::TokenStream& program,
                                  const std::vector<minilang::TokenStream>& corpus,
                                  const PipelineOptions& options) {
  std::vector<lm::NgramModel::Sequence> training;
  for (const auto& ts : corpus) training.push_back(minilang::lexemes(ts));
  if (!options.lm_exclude_self) training.push_back(minilang::lexemes(program));
  return lm::NgramModel::train(training, options.lm_order, options.lm_weights);
}

// Compiles `source`, generates its mutants, and scores the tailored ones.
// Literal candidates are mined from the corpus and the program itself (the
// mutated occurrence excluded); the model is trained on the corpus plus,
// unless excluded, the program.
inline Subject prepare_subject(const std::string& source, const std::vector<std::string>& corpus,
                               const PipelineOptions& options = {}) {
  Subject s{minilang::compile(source), {}, {}, {}};
  s.cfgs = cfg::build_cfg(s.prog);
  s.dt = cfg::all_distances(s.cfgs);
  if (options.operators == mutators::OperatorSet::Traditional) {
    s.pool = mutators::generate_pool(s.prog, s.cfgs, {options.operators, nullptr, std::nullopt});
    return s;
  }

  std::vector<minilang::TokenStream> streams;
  for (const std::string& text : corpus) streams.push_back(minilang::tokenize(text));
  mutators::TrigramIndex index = mutators::build_trigram_index(streams);
  const std::size_t self = index.add_stream(s.prog.tokens());
  s.pool = mutators::generate_pool(s.prog, s.cfgs, {options.operators, &index, self});

  const lm::NgramModel model = train_model(s.prog.tokens(), streams, options);
  lm::score_pool(s.pool, model, s.prog.tokens(), options.window);
  return s;
}

}  // namespace tmut::harness
