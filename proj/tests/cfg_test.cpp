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

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "support/fixtures.hpp"
#include "tmut.hpp"

namespace {

using namespace tmut;
using cfg::Cfg;
using cfg::Distance;
using cfg::NodeKind;
using cfg::NodeRef;

using EdgeSet = std::set<std::pair<std::size_t, std::size_t>>;

EdgeSet edges_of(const Cfg& g) { return {g.edges.begin(), g.edges.end()}; }

// Node whose source text starts with `prefix`.
std::size_t node_with_text(const Cfg& g, const minilang::TypedProgram& p, const std::string& prefix) {
  for (const cfg::CfgNode& n : g.nodes) {
    if (!n.span) continue;
    const std::size_t from = p.tokens()[n.span->first].offset;
    if (p.source.compare(from, prefix.size(), prefix) == 0) return n.id;
  }
  throw std::runtime_error("no node for " + prefix);
}

// Reference: directed BFS over the edge list, independent of the library.
std::vector<std::size_t> directed_bfs(const Cfg& g, std::size_t s) {
  const std::size_t inf = SIZE_MAX;
  std::vector<std::size_t> d(g.nodes.size(), inf);
  std::deque<std::size_t> q{s};
  d[s] = 0;
  while (!q.empty()) {
    const std::size_t u = q.front();
    q.pop_front();
    for (const auto& [a, b] : g.edges) {
      if (a == u && d[b] == inf) {
        d[b] = d[u] + 1;
        q.push_back(b);
      }
    }
  }
  return d;
}

TEST(Cfg, StraightLine) {
  const auto p = minilang::compile("fn f() -> int { return 1; }");
  const auto cfgs = cfg::build_cfg(p);
  ASSERT_EQ(cfgs.size(), 1u);
  const Cfg& g = cfgs[0];
  EXPECT_EQ(g.owner, "f");
  ASSERT_EQ(g.nodes.size(), 3u);
  EXPECT_EQ(g.nodes[0].kind, NodeKind::Entry);
  EXPECT_EQ(g.nodes[1].kind, NodeKind::Exit);
  EXPECT_EQ(g.nodes[2].kind, NodeKind::Statement);
  EXPECT_EQ(edges_of(g), (EdgeSet{{0, 2}, {2, 1}}));
}

TEST(Cfg, DiamondWithConditionNode) {
  // The declared-variable version of the worked example.
  const auto p = minilang::compile(
      "fn f(x:int) -> int { var y:int = 0; if (x > 0) { y = 2 * x; } else { x = -x / 2; } return x; }");
  const auto cfgs = cfg::build_cfg(p);
  ASSERT_EQ(cfgs.size(), 1u);
  const Cfg& g = cfgs[0];
  const std::size_t decl = node_with_text(g, p, "var y");
  const std::size_t cond = node_with_text(g, p, "x > 0");
  const std::size_t then_n = node_with_text(g, p, "y = 2");
  const std::size_t else_n = node_with_text(g, p, "x = -x");
  const std::size_t ret = node_with_text(g, p, "return");
  EXPECT_EQ(g.nodes[cond].kind, NodeKind::BranchCondition);
  EXPECT_EQ(g.executable_nodes().size(), 5u);
  const EdgeSet want = {{0, decl},      {decl, cond}, {cond, then_n}, {cond, else_n},
                        {then_n, ret}, {else_n, ret}, {ret, 1}};
  EXPECT_EQ(edges_of(g), want);

  const auto dt = cfg::all_distances(cfgs);
  auto d = [&](std::size_t a, std::size_t b) { return cfg::node_distance(dt, {0, a}, {0, b}); };
  EXPECT_EQ(d(cond, then_n), Distance(1));
  EXPECT_EQ(d(cond, else_n), Distance(1));
  EXPECT_EQ(d(cond, ret), Distance(2));
  EXPECT_EQ(d(cond, decl), Distance(1));
  EXPECT_TRUE(d(then_n, else_n).is_infinite());
  EXPECT_TRUE(d(else_n, then_n).is_infinite());
  EXPECT_EQ(d(decl, ret), Distance(3));
}

TEST(Cfg, WhileHasBackEdge) {
  const auto p = minilang::compile("fn f(n:int) -> int { while (n > 0) { n = n - 1; } return n; }");
  const auto cfgs = cfg::build_cfg(p);
  const Cfg& g = cfgs[0];
  const std::size_t cond = node_with_text(g, p, "n > 0");
  const std::size_t body = node_with_text(g, p, "n = n");
  const std::size_t ret = node_with_text(g, p, "return");
  EXPECT_EQ(edges_of(g), (EdgeSet{{0, cond}, {cond, body}, {body, cond}, {cond, ret}, {ret, 1}}));
}

TEST(Cfg, ReturnLinksToExit) {
  const auto p = minilang::compile(
      "fn f(x:int) -> int { if (x > 0) { return 1; } x = 2; return x; }");
  const auto cfgs = cfg::build_cfg(p);
  const Cfg& g = cfgs[0];
  const std::size_t early = node_with_text(g, p, "return 1");
  EXPECT_EQ(g.successors(early), std::vector<std::size_t>{Cfg::kExit});
}

TEST(Cfg, InitCfgChainsGlobals) {
  const auto p = minilang::compile("var a:int = 1;\nvar b:int = a + 1;\nfn f() -> int { return b; }");
  const auto cfgs = cfg::build_cfg(p);
  const auto init = cfg::find_cfg(cfgs, cfg::kInitOwner);
  ASSERT_TRUE(init.has_value());
  const Cfg& g = cfgs[*init];
  EXPECT_EQ(g.executable_nodes().size(), 2u);
  const std::size_t na = node_with_text(g, p, "var a");
  const std::size_t nb = node_with_text(g, p, "var b");
  EXPECT_EQ(edges_of(g), (EdgeSet{{0, na}, {na, nb}, {nb, 1}}));
}

TEST(Cfg, NoInitCfgWithoutGlobals) {
  const auto cfgs = cfg::build_cfg(minilang::compile("fn f() -> int { return 1; }"));
  EXPECT_FALSE(cfg::find_cfg(cfgs, cfg::kInitOwner).has_value());
}

TEST(Distance, IdentityChainAndSingleNode) {
  const auto f = support::load_fixture("chain-3");
  const Cfg& g = f.cfgs[0];
  const auto exec = g.executable_nodes();
  ASSERT_EQ(exec.size(), 3u);
  for (std::size_t n : exec) EXPECT_EQ(cfg::node_distance(f.dt, {0, n}, {0, n}), Distance(0));
  // Directed chain of k nodes: first to last is k-1.
  EXPECT_EQ(cfg::node_distance(f.dt, {0, exec.front()}, {0, exec.back()}), Distance(2));

  const auto one = minilang::compile("fn f() -> int { return 1; }");
  const auto dt = cfg::all_distances(cfg::build_cfg(one));
  EXPECT_EQ(cfg::node_distance(dt, {0, 2}, {0, 2}), Distance(0));
}

TEST(Distance, CrossCfgIsInfinite) {
  const auto f = support::load_fixture("two-function");
  ASSERT_EQ(f.cfgs.size(), 2u);
  for (std::size_t a : f.cfgs[0].executable_nodes()) {
    for (std::size_t b : f.cfgs[1].executable_nodes()) {
      EXPECT_TRUE(cfg::node_distance(f.dt, {0, a}, {1, b}).is_infinite());
    }
  }
}

TEST(Distance, InfiniteHasNoValue) {
  EXPECT_THROW((void)Distance::infinite().value(), Error);
  EXPECT_LT(Distance(1000000), Distance::infinite());
}

TEST(Distance, UnknownNodeIsError) {
  const auto f = support::load_fixture("chain-3");
  EXPECT_THROW((void)cfg::node_distance(f.dt, {0, 99}, {0, 2}), Error);
  EXPECT_THROW((void)cfg::node_distance(f.dt, {5, 0}, {0, 2}), Error);
}

TEST(Distance, SymmetricMinOfDirectedBfsOnAllFixtures) {
  for (const std::string& name : support::fixture_names()) {
    const auto f = support::load_fixture(name);
    for (std::size_t c = 0; c < f.cfgs.size(); ++c) {
      const Cfg& g = f.cfgs[c];
      std::vector<std::vector<std::size_t>> fwd;
      for (std::size_t s = 0; s < g.nodes.size(); ++s) fwd.push_back(directed_bfs(g, s));
      for (std::size_t s = 0; s < g.nodes.size(); ++s) {
        for (std::size_t t = 0; t < g.nodes.size(); ++t) {
          const std::size_t want = std::min(fwd[s][t], fwd[t][s]);
          const Distance got = cfg::node_distance(f.dt, {c, s}, {c, t});
          EXPECT_EQ(got, cfg::node_distance(f.dt, {c, t}, {c, s}));
          if (want == SIZE_MAX) {
            EXPECT_TRUE(got.is_infinite()) << name;
          } else {
            EXPECT_EQ(got, Distance(static_cast<std::uint32_t>(want))) << name << " " << s << "," << t;
          }
        }
      }
      // Every executable node is reachable from the entry-adjacent node.
      const std::size_t first = g.successors(Cfg::kEntry).front();
      for (std::size_t n : g.executable_nodes()) {
        EXPECT_TRUE(cfg::node_distance(f.dt, {c, first}, {c, n}).finite()) << name;
      }
    }
  }
}

TEST(Dot, DumpListsNodesAndEdges) {
  const auto p = support::load_fixture("diamond");
  const std::string dot = cfg::to_dot(p.cfgs[0], p.prog);
  EXPECT_EQ(dot.rfind("digraph \"diamond\" {\n", 0), 0u);
  EXPECT_NE(dot.find("n0 [label=\"0: entry\"]"), std::string::npos);
  EXPECT_NE(dot.find("n1 [label=\"1: exit\"]"), std::string::npos);
  EXPECT_NE(dot.find("x > 0\", shape=diamond]"), std::string::npos);
  for (const auto& [a, b] : p.cfgs[0].edges) {
    EXPECT_NE(dot.find("n" + std::to_string(a) + " -> n" + std::to_string(b) + ";"), std::string::npos);
  }
  EXPECT_EQ(dot.substr(dot.size() - 2), "}\n");
}

}  // namespace
