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
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tmut/minilang/checker.hpp"

namespace tmut::cfg {

using minilang::TokenIndex;
using minilang::TokenSpan;

inline constexpr std::string_view kInitOwner = "<init>";

enum class NodeKind { Entry, Exit, Statement, BranchCondition };

inline std::string_view to_string(NodeKind k) {
  switch (k) {
    case NodeKind::Entry: return "entry";
    case NodeKind::Exit: return "exit";
    case NodeKind::Statement: return "statement";
    case NodeKind::BranchCondition: return "branch-condition";
  }
  return "?";
}

struct CfgNode {
  std::size_t id = 0;
  NodeKind kind = NodeKind::Statement;
  std::optional<TokenSpan> span;  // empty for entry and exit
  std::size_t line = 0;           // 0 for entry and exit

  bool executable() const {
    return kind == NodeKind::Statement || kind == NodeKind::BranchCondition;
  }
};

// Statement-level control flow graph of one function or of the global
// initializers. Node 0 is entry, node 1 is exit; statements follow in
// source order.
struct Cfg {
  std::string owner;
  std::vector<CfgNode> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  static constexpr std::size_t kEntry = 0;
  static constexpr std::size_t kExit = 1;

  std::vector<std::size_t> successors(std::size_t id) const {
    std::vector<std::size_t> out;
    for (const auto& [from, to] : edges) {
      if (from == id) out.push_back(to);
    }
    return out;
  }

  std::vector<std::size_t> executable_nodes() const {
    std::vector<std::size_t> out;
    for (const CfgNode& n : nodes) {
      if (n.executable()) out.push_back(n.id);
    }
    return out;
  }
};

// A node addressed across the CFGs of a program.
struct NodeRef {
  std::size_t cfg = 0;
  std::size_t node = 0;

  friend auto operator<=>(const NodeRef&, const NodeRef&) = default;
};

namespace detail {

class Builder {
 public:
  Builder(const minilang::TypedProgram& prog, Cfg& g) : prog_(prog), g_(g) {
    g_.nodes.push_back({Cfg::kEntry, NodeKind::Entry, std::nullopt, 0});
    g_.nodes.push_back({Cfg::kExit, NodeKind::Exit, std::nullopt, 0});
  }

  std::size_t add(NodeKind kind, TokenSpan span) {
    const std::size_t id = g_.nodes.size();
    g_.nodes.push_back({id, kind, span, prog_.tokens()[span.first].line});
    return id;
  }

  void link(const std::vector<std::size_t>& preds, std::size_t to) {
    for (std::size_t p : preds) g_.edges.emplace_back(p, to);
  }

  // Wires `list` after `preds`; returns the nodes that fall through.
  std::vector<std::size_t> build(const minilang::StmtList& list, std::vector<std::size_t> preds) {
    using minilang::StmtKind;
    for (const minilang::StmtPtr& sp : list) {
      const minilang::Stmt& s = *sp;
      switch (s.kind) {
        case StmtKind::VarDecl:
        case StmtKind::Assign:
        case StmtKind::ExprStmt: {
          const std::size_t n = add(NodeKind::Statement, s.span);
          link(preds, n);
          preds = {n};
          break;
        }
        case StmtKind::Return: {
          const std::size_t n = add(NodeKind::Statement, s.span);
          link(preds, n);
          g_.edges.emplace_back(n, Cfg::kExit);
          preds.clear();
          break;
        }
        case StmtKind::If: {
          const std::size_t c = add(NodeKind::BranchCondition, s.expr->span);
          link(preds, c);
          std::vector<std::size_t> out = build(s.body, {c});
          std::vector<std::size_t> alt = s.has_else ? build(s.else_body, {c})
                                                    : std::vector<std::size_t>{c};
          out.insert(out.end(), alt.begin(), alt.end());
          preds = std::move(out);
          break;
        }
        case StmtKind::While: {
          const std::size_t c = add(NodeKind::BranchCondition, s.expr->span);
          link(preds, c);
          link(build(s.body, {c}), c);
          preds = {c};
          break;
        }
        case StmtKind::Block:
          preds = build(s.body, std::move(preds));
          break;
      }
    }
    return preds;
  }

 private:
  const minilang::TypedProgram& prog_;
  Cfg& g_;
};

}  // namespace detail

// One CFG per function, plus an "<init>" CFG chaining the global
// initializers when any exist.
inline std::vector<Cfg> build_cfg(const minilang::TypedProgram& prog) {
  std::vector<Cfg> out;
  for (const minilang::Function& f : prog.ast.functions) {
    Cfg g;
    g.owner = f.name;
    detail::Builder b(prog, g);
    b.link(b.build(f.body, {Cfg::kEntry}), Cfg::kExit);
    out.push_back(std::move(g));
  }
  bool any_init = false;
  for (const minilang::Global& gl : prog.ast.globals) any_init = any_init || gl.init != nullptr;
  if (any_init) {
    Cfg g;
    g.owner = std::string(kInitOwner);
    detail::Builder b(prog, g);
    std::vector<std::size_t> preds{Cfg::kEntry};
    for (const minilang::Global& gl : prog.ast.globals) {
      if (!gl.init) continue;
      const std::size_t n = b.add(NodeKind::Statement, gl.span);
      b.link(preds, n);
      preds = {n};
    }
    b.link(preds, Cfg::kExit);
    out.push_back(std::move(g));
  }
  return out;
}

// Maps every token to the executable node whose span contains it.
class NodeLocator {
 public:
  NodeLocator(const std::vector<Cfg>& cfgs, std::size_t token_count)
      : by_token_(token_count) {
    for (std::size_t c = 0; c < cfgs.size(); ++c) {
      for (const CfgNode& n : cfgs[c].nodes) {
        if (!n.span) continue;
        for (TokenIndex i = n.span->first; i <= n.span->last && i < token_count; ++i) {
          by_token_[i] = NodeRef{c, n.id};
        }
      }
    }
  }

  std::optional<NodeRef> at(TokenIndex i) const {
    return i < by_token_.size() ? by_token_[i] : std::nullopt;
  }

 private:
  std::vector<std::optional<NodeRef>> by_token_;
};

inline std::optional<std::size_t> find_cfg(const std::vector<Cfg>& cfgs, std::string_view owner) {
  for (std::size_t i = 0; i < cfgs.size(); ++i) {
    if (cfgs[i].owner == owner) return i;
  }
  return std::nullopt;
}

// Graphviz rendering; node labels are "id: source excerpt".
inline std::string to_dot(const Cfg& g, const minilang::TypedProgram& prog) {
  auto escape = [](std::string_view s) {
    std::string out;
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += (c == '\n' || c == '\t') ? ' ' : c;
    }
    return out;
  };
  std::ostringstream os;
  os << "digraph \"" << escape(g.owner) << "\" {\n";
  for (const CfgNode& n : g.nodes) {
    std::string label;
    if (!n.span) {
      label = std::string(to_string(n.kind));
    } else {
      const auto& toks = prog.tokens();
      const std::size_t from = toks[n.span->first].offset;
      const std::size_t to = toks[n.span->last].end();
      label = prog.source.substr(from, to - from);
      if (label.size() > 40) label = label.substr(0, 37) + "...";
    }
    os << "  n" << n.id << " [label=\"" << n.id << ": " << escape(label) << "\""
       << (n.kind == NodeKind::BranchCondition ? ", shape=diamond" : "") << "];\n";
  }
  for (const auto& [from, to] : g.edges) os << "  n" << from << " -> n" << to << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace tmut::cfg
