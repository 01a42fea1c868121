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
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "tmut/cfg/cfg.hpp"
#include "tmut/util/hash.hpp"

namespace tmut::mutators {

using cfg::NodeRef;
using minilang::TokenIndex;
using minilang::TokenSpan;

enum class Operator { ROR, COR, AOR, ORU, LOR, SOR, STD, LVR, VAR, MCR, NLR };

inline constexpr std::array<Operator, 11> kAllOperators = {
    Operator::ROR, Operator::COR, Operator::AOR, Operator::ORU, Operator::LOR, Operator::SOR,
    Operator::STD, Operator::LVR, Operator::VAR, Operator::MCR, Operator::NLR};

inline std::string_view to_string(Operator op) {
  static constexpr std::array<std::string_view, 11> kNames = {
      "ROR", "COR", "AOR", "ORU", "LOR", "SOR", "STD", "LVR", "VAR", "MCR", "NLR"};
  return kNames[static_cast<std::size_t>(op)];
}

inline std::optional<Operator> parse_operator(std::string_view s) {
  for (Operator op : kAllOperators) {
    if (to_string(op) == s) return op;
  }
  return std::nullopt;
}

enum class KindClass { Traditional, Tailored };

inline KindClass kind_class(Operator op) {
  return (op == Operator::VAR || op == Operator::MCR || op == Operator::NLR)
             ? KindClass::Tailored
             : KindClass::Traditional;
}

inline std::string_view to_string(KindClass k) {
  return k == KindClass::Traditional ? "traditional" : "tailored";
}

// Which operator families a run generates.
enum class OperatorSet { Traditional, Tailored, All };

inline bool includes(OperatorSet set, Operator op) {
  switch (set) {
    case OperatorSet::All: return true;
    case OperatorSet::Traditional: return kind_class(op) == KindClass::Traditional;
    case OperatorSet::Tailored: return kind_class(op) == KindClass::Tailored;
  }
  return false;
}

inline std::optional<OperatorSet> parse_operator_set(std::string_view s) {
  if (s == "traditional" || s == "trad") return OperatorSet::Traditional;
  if (s == "tailored") return OperatorSet::Tailored;
  if (s == "all") return OperatorSet::All;
  return std::nullopt;
}

inline std::string_view to_string(OperatorSet s) {
  switch (s) {
    case OperatorSet::Traditional: return "traditional";
    case OperatorSet::Tailored: return "tailored";
    case OperatorSet::All: return "all";
  }
  return "?";
}

// One application of one operator: the tokens in `span` are replaced by
// `replacement` (empty for deletions).
struct Mutant {
  std::string id;  // "<operator>:<token-index>:<replacement-hash>"
  Operator op = Operator::ROR;
  std::string cfg_owner;
  NodeRef location;        // CFG index within build_cfg order, node id
  TokenIndex token = 0;    // anchor of the rewrite
  TokenSpan span;          // replaced tokens, inclusive
  std::string original;    // source text of `span`
  std::string replacement;
  std::size_t line = 0;
  std::size_t col = 0;
  std::optional<double> naturalness;  // tailored mutants, once scored

  KindClass kind() const { return kind_class(op); }
};

inline std::string make_mutant_id(Operator op, TokenIndex token, std::string_view replacement) {
  return std::string(to_string(op)) + ":" + std::to_string(token) + ":" +
         hex32(fnv1a32(replacement));
}

}  // namespace tmut::mutators
