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
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "tmut/util/error.hpp"

namespace tmut::lm {

inline constexpr const char* kStart = "<s>";
inline constexpr const char* kEnd = "</s>";
inline constexpr const char* kUnknown = "<unk>";

// Interpolation weights for orders n, n-1, ..., 1 followed by the uniform
// floor: 0.5 / 0.3 / 0.15 (halving beyond) / 0.05, normalized to sum to 1.
inline std::vector<double> default_weights(std::size_t order) {
  std::vector<double> w;
  double next = 0.5;
  for (std::size_t k = 0; k < order; ++k) {
    if (k == 0) next = 0.5;
    else if (k == 1) next = 0.3;
    else if (k == 2) next = 0.15;
    else next /= 2;
    w.push_back(next);
  }
  w.push_back(0.05);
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& x : w) x /= total;
  return w;
}

// Order-n token model with fixed-weight interpolation across orders and a
// uniform floor over the vocabulary. Orders whose context was never seen
// hand their weight down to the next lower order.
class NgramModel {
 public:
  using Sequence = std::vector<std::string>;

  static NgramModel train(const std::vector<Sequence>& streams, std::size_t order,
                          std::vector<double> weights = {}) {
    if (order == 0) throw Error("n-gram order must be at least 1");
    bool any = false;
    for (const Sequence& s : streams) any = any || !s.empty();
    if (!any) throw Error("cannot train a language model on an empty corpus");
    NgramModel m;
    m.order_ = order;
    m.set_weights(weights.empty() ? default_weights(order) : std::move(weights));
    m.intern(kEnd);
    m.intern(kUnknown);
    for (const Sequence& s : streams) {
      for (const std::string& tok : s) m.intern(tok);
    }
    m.counts_.resize(order);
    for (const Sequence& s : streams) m.accumulate(s);
    return m;
  }

  std::size_t order() const { return order_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t vocab_size() const { return vocab_.size(); }
  const std::vector<std::string>& vocabulary() const { return vocab_; }
  bool in_vocabulary(const std::string& tok) const { return ids_.count(tok) != 0; }

  // P(token | context); `context` holds preceding tokens, most recent last.
  // Only the last n-1 are used; missing positions are start padding.
  double prob(const std::string& token, std::span<const std::string> context) const {
    const std::uint32_t t = id_of(token);
    const std::size_t V = vocab_.size();
    double p = weights_.back() / static_cast<double>(V);
    double carry = 0.0;
    for (std::size_t k = order_; k >= 1; --k) {
      const double w = weights_[order_ - k] + carry;
      const Key h = history(context, k - 1);
      const auto& table = counts_[k - 1];
      auto it = table.find(h);
      if (it == table.end() || it->second.total == 0) {
        carry = w;
        continue;
      }
      carry = 0.0;
      auto jt = it->second.next.find(t);
      const double c = jt == it->second.next.end() ? 0.0 : static_cast<double>(jt->second);
      p += w * c / static_cast<double>(it->second.total);
    }
    if (carry > 0.0) p += carry / static_cast<double>(V);
    return p;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["format"] = "tmut-ngram";
    j["version"] = 1;
    j["order"] = order_;
    j["weights"] = weights_;
    j["vocab"] = vocab_;
    j["counts"] = nlohmann::json::array();
    for (const auto& table : counts_) {
      nlohmann::json level = nlohmann::json::array();
      for (const auto& [ctx, row] : table) {
        nlohmann::json next = nlohmann::json::array();
        for (const auto& [tok, c] : row.next) next.push_back({tok, c});
        level.push_back({{"context", ctx}, {"next", next}});
      }
      j["counts"].push_back(std::move(level));
    }
    return j;
  }

  static NgramModel from_json(const nlohmann::json& j) {
    if (j.value("format", "") != "tmut-ngram" || j.value("version", 0) != 1) {
      throw Error("not a tmut n-gram model file");
    }
    NgramModel m;
    m.order_ = j.at("order").get<std::size_t>();
    m.set_weights(j.at("weights").get<std::vector<double>>(), /*normalize=*/false);
    for (const std::string& tok : j.at("vocab").get<std::vector<std::string>>()) m.intern(tok);
    m.counts_.resize(m.order_);
    const nlohmann::json& counts = j.at("counts");
    for (std::size_t k = 0; k < m.order_; ++k) {
      for (const nlohmann::json& entry : counts.at(k)) {
        Row& row = m.counts_[k][entry.at("context").get<Key>()];
        for (const nlohmann::json& pair : entry.at("next")) {
          const auto c = pair.at(1).get<std::uint64_t>();
          row.next[pair.at(0).get<std::uint32_t>()] = c;
          row.total += c;
        }
      }
    }
    return m;
  }

 private:
  using Key = std::vector<std::uint32_t>;
  struct Row {
    std::map<std::uint32_t, std::uint64_t> next;
    std::uint64_t total = 0;
  };

  static constexpr std::uint32_t kStartId = 0xffffffffU;

  void set_weights(std::vector<double> w, bool normalize = true) {
    if (w.size() != order_ + 1) throw Error("expected one weight per order plus the floor");
    double total = 0;
    for (double x : w) {
      if (!(x >= 0)) throw Error("interpolation weights must be non-negative");
      total += x;
    }
    if (!(w.back() > 0)) throw Error("the uniform floor weight must be positive");
    if (normalize) {
      for (double& x : w) x /= total;
    }
    weights_ = std::move(w);
  }

  std::uint32_t intern(const std::string& tok) {
    auto [it, fresh] = ids_.emplace(tok, static_cast<std::uint32_t>(vocab_.size()));
    if (fresh) vocab_.push_back(tok);
    return it->second;
  }

  std::uint32_t id_of(const std::string& tok) const {
    if (tok == kStart) return kStartId;
    auto it = ids_.find(tok);
    return it == ids_.end() ? ids_.at(kUnknown) : it->second;
  }

  // Last `len` context tokens, left-padded with the start symbol.
  Key history(std::span<const std::string> context, std::size_t len) const {
    Key h(len, kStartId);
    const std::size_t take = std::min(len, context.size());
    for (std::size_t i = 0; i < take; ++i) {
      h[len - take + i] = id_of(context[context.size() - take + i]);
    }
    return h;
  }

  void accumulate(const Sequence& s) {
    std::vector<std::string> seq = s;
    seq.push_back(kEnd);
    for (std::size_t i = 0; i < seq.size(); ++i) {
      const std::span<const std::string> ctx(seq.data(), i);
      const std::uint32_t t = id_of(seq[i]);
      for (std::size_t k = 1; k <= order_; ++k) {
        Row& row = counts_[k - 1][history(ctx, k - 1)];
        ++row.next[t];
        ++row.total;
      }
    }
  }

  std::size_t order_ = 3;
  std::vector<double> weights_;
  std::vector<std::string> vocab_;
  std::unordered_map<std::string, std::uint32_t> ids_;
  std::vector<std::map<Key, Row>> counts_;  // counts_[k-1]: contexts of length k-1
};

}  // namespace tmut::lm
