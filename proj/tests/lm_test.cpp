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

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "support/fixtures.hpp"
#include "tmut.hpp"

namespace {

using namespace tmut;
using lm::NgramModel;
using Seq = std::vector<std::string>;

Seq words(const std::string& s) {
  Seq out;
  std::string cur;
  for (char c : s) {
    if (c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// Reference interpolated model over plain strings: counts per order with
// start padding and one end symbol per stream; an order whose context was
// never seen hands its weight down to the next lower order.
class ReferenceModel {
 public:
  ReferenceModel(const std::vector<Seq>& streams, std::size_t n, std::vector<double> w)
      : n_(n), w_(std::move(w)) {
    vocab_ = {lm::kEnd, lm::kUnknown};
    for (const Seq& s : streams) vocab_.insert(s.begin(), s.end());
    counts_.resize(n);
    for (const Seq& s : streams) {
      Seq seq(n - 1, lm::kStart);
      seq.insert(seq.end(), s.begin(), s.end());
      seq.push_back(lm::kEnd);
      for (std::size_t i = n - 1; i < seq.size(); ++i) {
        for (std::size_t k = 1; k <= n; ++k) {
          const Seq ctx(seq.begin() + static_cast<long>(i - (k - 1)), seq.begin() + static_cast<long>(i));
          counts_[k - 1][ctx][seq[i]] += 1;
        }
      }
    }
  }

  double prob(const std::string& tok, const Seq& context) const {
    const std::string t = vocab_.count(tok) ? tok : lm::kUnknown;
    Seq padded(n_ - 1, lm::kStart);
    for (const std::string& c : context) padded.push_back(vocab_.count(c) ? c : lm::kUnknown);
    const double V = static_cast<double>(vocab_.size());
    double p = w_.back() / V;
    double carry = 0;
    for (std::size_t k = n_; k >= 1; --k) {
      const double w = w_[n_ - k] + carry;
      const Seq ctx(padded.end() - static_cast<long>(k - 1), padded.end());
      auto it = counts_[k - 1].find(ctx);
      if (it == counts_[k - 1].end()) {
        carry = w;
        continue;
      }
      carry = 0;
      double total = 0;
      for (const auto& [_, c] : it->second) total += c;
      auto jt = it->second.find(t);
      p += w * (jt == it->second.end() ? 0.0 : jt->second) / total;
    }
    return p + carry / V;
  }

 private:
  std::size_t n_;
  std::vector<double> w_;
  std::set<std::string> vocab_;
  std::vector<std::map<Seq, std::map<std::string, double>>> counts_;
};

double vocab_sum(const NgramModel& m, const Seq& ctx) {
  double s = 0;
  for (const std::string& t : m.vocabulary()) s += m.prob(t, ctx);
  return s;
}

TEST(Ngram, DefaultWeights) {
  const auto w = lm::default_weights(3);
  ASSERT_EQ(w.size(), 4u);
  EXPECT_NEAR(w[0], 0.5, 1e-15);
  EXPECT_NEAR(w[1], 0.3, 1e-15);
  EXPECT_NEAR(w[2], 0.15, 1e-15);
  EXPECT_NEAR(w[3], 0.05, 1e-15);
}

TEST(Ngram, DegenerateUnigram) {
  const auto m = NgramModel::train({words("a a a")}, 1);
  // Oracle: counts a:3, </s>:1; vocab {a, </s>, <unk>}.
  const auto w = m.weights();
  const double want = w[0] * 3.0 / 4.0 + w[1] / 3.0;
  EXPECT_NEAR(m.prob("a", {}), want, 1e-15);
  EXPECT_GT(m.prob("a", {}), m.prob(lm::kEnd, {}));
  EXPECT_GT(m.prob("a", {}), m.prob("zzz", {}));
}

TEST(Ngram, BigramPrefersSeenContinuation) {
  const auto m = NgramModel::train({words("a b a b")}, 2);
  const Seq a = {"a"};
  EXPECT_GT(m.prob("b", a), m.prob("a", a));
}

TEST(Ngram, UnknownTokensUseUnkClass) {
  const auto m = NgramModel::train({words("x = 1 ; y = 2 ;")}, 3);
  const Seq ctx = {"x", "="};
  EXPECT_GT(m.prob("never-seen", ctx), 0.0);
  EXPECT_EQ(m.prob("never-seen", ctx), m.prob(lm::kUnknown, ctx));
  EXPECT_FALSE(m.in_vocabulary("never-seen"));
}

TEST(Ngram, MatchesReferenceModel) {
  const std::vector<Seq> corpus = {words("fn f ( x ) { return x + 1 ; }"),
                                   words("fn g ( y ) { return y + 1 ; }"),
                                   words("fn h ( x ) { return x * 2 ; }")};
  for (std::size_t n : {1u, 2u, 3u, 4u}) {
    const auto m = NgramModel::train(corpus, n);
    const ReferenceModel ref(corpus, n, m.weights());
    Rng rng(n);
    Seq pool = m.vocabulary();
    pool.push_back("unseen");
    for (int trial = 0; trial < 200; ++trial) {
      Seq ctx;
      const std::size_t len = rng.below(5);
      for (std::size_t i = 0; i < len; ++i) ctx.push_back(pool[rng.below(pool.size())]);
      const std::string tok = pool[rng.below(pool.size())];
      EXPECT_NEAR(m.prob(tok, ctx), ref.prob(tok, ctx), 1e-12) << n << " " << tok;
    }
  }
}

TEST(Ngram, NormalizedOverVocabulary) {
  std::vector<Seq> corpus;
  for (const auto& name : support::fixture_names()) {
    corpus.push_back(minilang::lexemes(minilang::tokenize(support::fixture_source(name))));
  }
  const auto m = NgramModel::train(corpus, 3);
  Rng rng(7);
  Seq pool = m.vocabulary();
  pool.push_back("unseen");
  for (int trial = 0; trial < 100; ++trial) {
    Seq ctx;
    const std::size_t len = rng.below(4);
    for (std::size_t i = 0; i < len; ++i) ctx.push_back(pool[rng.below(pool.size())]);
    EXPECT_NEAR(vocab_sum(m, ctx), 1.0, 1e-9);
    for (const std::string& t : m.vocabulary()) EXPECT_GT(m.prob(t, ctx), 0.0);
  }
}

TEST(Ngram, MonotoneInRawCount) {
  std::vector<Seq> corpus = {words("a b c a b d a c c")};
  Rng rng(11);
  const Seq vocab = {"a", "b", "c", "d"};
  for (int trial = 0; trial < 50; ++trial) {
    const Seq ctx = {vocab[rng.below(4)], vocab[rng.below(4)]};
    const std::string t = vocab[rng.below(4)];
    const auto before = NgramModel::train(corpus, 3);
    std::vector<Seq> more = corpus;
    more[0].insert(more[0].end(), {ctx[0], ctx[1], t});
    corpus = more;
    const auto after = NgramModel::train(more, 3);
    EXPECT_GE(after.prob(t, ctx) + 1e-12, before.prob(t, ctx));
  }
}

TEST(Ngram, TrainingErrors) {
  EXPECT_THROW(NgramModel::train({}, 3), Error);
  EXPECT_THROW(NgramModel::train({Seq{}}, 3), Error);
  EXPECT_THROW(NgramModel::train({words("a")}, 0), Error);
  EXPECT_THROW(NgramModel::train({words("a")}, 2, {0.5, 0.5}), Error);
  EXPECT_THROW(NgramModel::train({words("a")}, 1, {1.0, 0.0}), Error);
}

TEST(Ngram, ExplicitWeightsAreNormalized) {
  const auto m = NgramModel::train({words("a b")}, 2, {2.0, 1.0, 1.0});
  EXPECT_NEAR(m.weights()[0], 0.5, 1e-15);
  EXPECT_NEAR(m.weights()[1], 0.25, 1e-15);
  EXPECT_NEAR(m.weights()[2], 0.25, 1e-15);
}

TEST(Ngram, SerializationRoundTripIsBitExact) {
  const auto m = NgramModel::train({words("a b c a b"), words("c c a")}, 3, {0.6, 0.2, 0.1, 0.1});
  const std::string text = m.to_json().dump();
  const auto back = NgramModel::from_json(nlohmann::json::parse(text));
  EXPECT_EQ(back.to_json().dump(), text);
  EXPECT_EQ(back.order(), 3u);
  const Seq pool = {"a", "b", "c", "zz", lm::kEnd};
  for (const auto& x : pool) {
    for (const auto& y : pool) {
      for (const auto& t : pool) EXPECT_EQ(back.prob(t, Seq{x, y}), m.prob(t, Seq{x, y}));
    }
  }
  EXPECT_THROW(NgramModel::from_json(nlohmann::json{{"format", "other"}}), Error);
}

TEST(Naturalness, IdentityScoresZero) {
  const Seq toks = words("x = a + b ;");
  const auto m = NgramModel::train({toks, words("y = a - b ;")}, 3);
  for (std::size_t l = 0; l < toks.size(); ++l) EXPECT_EQ(lm::score_mutant(m, toks, l, toks[l]), 0.0);
}

TEST(Naturalness, UnnaturalReplacementIsNegative) {
  const Seq corpus = words("a b c a b c a b c d");  // ten tokens
  const auto m = NgramModel::train({corpus}, 3);
  // Replace the frequent continuation `c` at position 2 by an absent token.
  const double s = lm::score_mutant(m, corpus, 2, "q");
  EXPECT_LT(s, 0.0);
  // Oracle from the reference model over the literal window l..l+n.
  const ReferenceModel ref({corpus}, 3, m.weights());
  Seq orig = corpus;
  orig.push_back(lm::kEnd);
  Seq mut = orig;
  mut[2] = "q";
  double want = 0;
  for (std::size_t i = 2; i <= 5; ++i) {
    want += std::log10(ref.prob(mut[i], Seq(mut.begin(), mut.begin() + static_cast<long>(i)))) -
            std::log10(ref.prob(orig[i], Seq(orig.begin(), orig.begin() + static_cast<long>(i))));
  }
  EXPECT_NEAR(s, want, 1e-12);
}

TEST(Naturalness, DominatingCountsScoreHigher) {
  // `c` follows (a, b) twice, `d` once; everything downstream mirrors that.
  const auto m = NgramModel::train({words("a b c"), words("a b c"), words("a b d")}, 3);
  const Seq y = words("a b e");
  EXPECT_GE(lm::score_mutant(m, y, 2, "c"), lm::score_mutant(m, y, 2, "d"));
}

TEST(Naturalness, EqualsFullSequenceDifference) {
  std::vector<Seq> corpus;
  for (const auto& name : support::fixture_names()) {
    corpus.push_back(minilang::lexemes(minilang::tokenize(support::fixture_source(name))));
  }
  const auto m = NgramModel::train(corpus, 3);
  Rng rng(3);
  const Seq& y = corpus[2];
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t l = rng.below(y.size());
    const std::string t = m.vocabulary()[rng.below(m.vocab_size())];
    Seq a = y;
    a[l] = t;
    const double brute = lm::sequence_log10_prob(m, a) - lm::sequence_log10_prob(m, y);
    EXPECT_NEAR(lm::score_mutant(m, y, l, t), brute, 1e-9);
    // The conventional window drops one position whose context excludes l.
    EXPECT_NEAR(lm::score_mutant(m, y, l, t, lm::ScoreWindow::Conventional), brute, 1e-9);
  }
}

TEST(Naturalness, ClampsAtStreamEnd) {
  const Seq y = words("a b c");
  const auto m = NgramModel::train({y}, 3);
  EXPECT_TRUE(std::isfinite(lm::score_mutant(m, y, 2, "a")));
  EXPECT_THROW(lm::score_mutant(m, y, 3, "a"), Error);
}

TEST(Naturalness, ScorePoolScoresTailoredOnly) {
  const auto f = support::load_fixture("two-function");
  const auto& toks = f.prog.tokens();
  const auto m = NgramModel::train({minilang::lexemes(toks)}, 3);
  mutators::MutantPool pool = f.pool;
  lm::score_pool(pool, m, toks);
  std::size_t tailored = 0;
  for (const auto& mu : pool.mutants()) {
    if (mu.kind() == mutators::KindClass::Tailored) {
      ++tailored;
      ASSERT_TRUE(mu.naturalness.has_value());
      EXPECT_EQ(*mu.naturalness,
                lm::score_mutant(m, minilang::lexemes(toks), mu.token, mu.replacement));
    } else {
      EXPECT_FALSE(mu.naturalness.has_value());
    }
  }
  EXPECT_GT(tailored, 0u);
}

}  // namespace
