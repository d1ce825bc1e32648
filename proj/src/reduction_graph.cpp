// Copyright 2026 The lamsh Authors.
//
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

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

#include "lamsh/reduction.hpp"

namespace lamsh {

ReductionGraph explore(const Term& t, Mode mode, RuleSet rules, std::size_t node_cap) {
  ReductionGraph g;
  std::unordered_map<std::string, std::size_t> index;
  index.emplace(alpha_key(t), 0);
  g.nodes.push_back(t);
  g.edges.emplace_back();

  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    Term here = g.nodes[i];
    for (const auto& step : find_redexes(here, mode, rules)) {
      Term next = apply_step(here, step);
      auto [it, inserted] = index.emplace(alpha_key(next), g.nodes.size());
      if (inserted) {
        if (g.nodes.size() == node_cap) {
          index.erase(it);
          g.truncated = true;
          continue;
        }
        g.nodes.push_back(next);
        g.edges.emplace_back();
        queue.push_back(it->second);
      }
      g.edges[i].push_back(ReductionGraph::Edge{it->second, step});
    }
  }
  return g;
}

std::vector<std::size_t> ReductionGraph::normal_nodes() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (edges[i].empty()) out.push_back(i);
  }
  return out;
}

std::optional<std::vector<std::size_t>> ReductionGraph::find_cycle() const {
  enum Color : unsigned char { White, Grey, Black };
  std::vector<Color> color(nodes.size(), White);
  std::vector<std::size_t> stack;
  std::vector<std::size_t> next_edge(nodes.size(), 0);
  if (nodes.empty()) return std::nullopt;

  stack.push_back(0);
  color[0] = Grey;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    if (next_edge[v] < edges[v].size()) {
      std::size_t w = edges[v][next_edge[v]++].target;
      if (color[w] == Grey) {
        auto from = std::find(stack.begin(), stack.end(), w);
        return std::vector<std::size_t>(from, stack.end());
      }
      if (color[w] == White) {
        color[w] = Grey;
        stack.push_back(w);
      }
    } else {
      color[v] = Black;
      stack.pop_back();
    }
  }
  return std::nullopt;
}

namespace {

// Reverse post-order from the start; valid as a topological order when the
// graph is acyclic.
std::vector<std::size_t> topological_order(const ReductionGraph& g) {
  std::vector<std::size_t> post;
  std::vector<bool> seen(g.nodes.size(), false);
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
  seen[0] = true;
  while (!stack.empty()) {
    auto& [v, e] = stack.back();
    if (e < g.edges[v].size()) {
      std::size_t w = g.edges[v][e++].target;
      if (!seen[w]) {
        seen[w] = true;
        stack.emplace_back(w, 0);
      }
    } else {
      post.push_back(v);
      stack.pop_back();
    }
  }
  std::reverse(post.begin(), post.end());
  return post;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> ReductionGraph::complete_outcomes() const {
  if (nodes.empty()) return {};
  auto order = topological_order(*this);
  std::vector<std::set<std::pair<std::size_t, std::size_t>>> out(nodes.size());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::size_t v = *it;
    if (edges[v].empty()) {
      out[v].emplace(0, v);
      continue;
    }
    for (const auto& e : edges[v]) {
      std::size_t bump = e.step.kind == RedexKind::BetaV ? 1 : 0;
      for (auto [leng, nf] : out[e.target]) out[v].emplace(leng + bump, nf);
    }
  }
  return {out[0].begin(), out[0].end()};
}

std::size_t ReductionGraph::longest_path() const {
  if (nodes.empty()) return 0;
  auto order = topological_order(*this);
  std::vector<std::size_t> longest(nodes.size(), 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (const auto& e : edges[*it]) {
      longest[*it] = std::max(longest[*it], longest[e.target] + 1);
    }
  }
  return longest[0];
}

}  // namespace lamsh
