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

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tmut/minilang/token.hpp"

namespace tmut::mutators {

// Counts of third tokens following each two-token prefix, over a corpus of
// token streams. Windows never cross stream boundaries.
class TrigramIndex {
 public:
  struct Occurrence {
    std::size_t stream = 0;
    minilang::TokenIndex position = 0;  // index of the third token
  };

  struct Continuation {
    minilang::TokenKind kind = minilang::TokenKind::Identifier;
    std::vector<Occurrence> occurrences;
  };

  using Prefix = std::pair<std::string, std::string>;
  using Continuations = std::map<std::string, Continuation>;

  // Returns the stream id assigned to `ts`.
  std::size_t add_stream(const minilang::TokenStream& ts) {
    const std::size_t id = streams_++;
    for (std::size_t i = 2; i < ts.size(); ++i) {
      Continuation& c = table_[{ts[i - 2].lexeme, ts[i - 1].lexeme}][ts[i].lexeme];
      c.kind = ts[i].kind;
      c.occurrences.push_back({id, i});
    }
    return id;
  }

  std::size_t stream_count() const { return streams_; }
  bool empty() const { return table_.empty(); }

  std::size_t count(const std::string& a, const std::string& b, const std::string& third) const {
    auto it = table_.find({a, b});
    if (it == table_.end()) return 0;
    auto jt = it->second.find(third);
    return jt == it->second.end() ? 0 : jt->second.occurrences.size();
  }

  // Third tokens after (a, b) with their counts, not counting the occurrence
  // at `exclude` (the mutation site itself).
  std::vector<std::pair<std::string, std::pair<minilang::TokenKind, std::size_t>>> continuations(
      const std::string& a, const std::string& b,
      std::optional<Occurrence> exclude = std::nullopt) const {
    std::vector<std::pair<std::string, std::pair<minilang::TokenKind, std::size_t>>> out;
    auto it = table_.find({a, b});
    if (it == table_.end()) return out;
    for (const auto& [lexeme, cont] : it->second) {
      std::size_t n = 0;
      for (const Occurrence& o : cont.occurrences) {
        if (exclude && o.stream == exclude->stream && o.position == exclude->position) continue;
        ++n;
      }
      if (n > 0) out.push_back({lexeme, {cont.kind, n}});
    }
    return out;
  }

 private:
  std::map<Prefix, Continuations> table_;
  std::size_t streams_ = 0;
};

inline TrigramIndex build_trigram_index(const std::vector<minilang::TokenStream>& corpus) {
  TrigramIndex index;
  for (const minilang::TokenStream& ts : corpus) index.add_stream(ts);
  return index;
}

}  // namespace tmut::mutators
