// Copyright 2026 The kfx Authors
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

#include "kfx/unicyclic.hpp"

#include <algorithm>

#include "kfx/errors.hpp"

namespace kfx {

RootedTree::RootedTree(std::vector<int> parent) : parent_(std::move(parent)) {
  if (parent_.empty() || parent_[0] != -1) throw InvalidParameter("rooted tree needs a root with parent -1");
  for (std::size_t k = 1; k < parent_.size(); ++k) {
    const int p = parent_[k];
    if (p < 0 || static_cast<std::size_t>(p) >= k) throw InvalidParameter("parent array is not topological");
    int walk = static_cast<int>(k) - 1;
    while (walk != -1 && walk != p) walk = parent_[static_cast<std::size_t>(walk)];
    if (walk != p) throw InvalidParameter("parent array is not in preorder");
  }
}

RootedTree RootedTree::from_levels(std::span<const int> levels) {
  if (levels.empty() || levels[0] != 0) throw InvalidParameter("level sequence must start at 0");
  std::vector<int> parent(levels.size(), -1);
  std::vector<int> stack{0};  // stack[d] = latest node at depth d
  for (std::size_t k = 1; k < levels.size(); ++k) {
    const int d = levels[k];
    if (d < 1 || static_cast<std::size_t>(d) > stack.size()) throw InvalidParameter("invalid level sequence");
    stack.resize(static_cast<std::size_t>(d));
    parent[k] = stack.back();
    stack.push_back(static_cast<int>(k));
  }
  return RootedTree(std::move(parent));
}

std::vector<int> RootedTree::depths() const {
  std::vector<int> out(parent_.size(), 0);
  for (std::size_t k = 1; k < parent_.size(); ++k) out[k] = out[static_cast<std::size_t>(parent_[k])] + 1;
  return out;
}

std::vector<int> RootedTree::child_counts() const {
  std::vector<int> out(parent_.size(), 0);
  for (std::size_t k = 1; k < parent_.size(); ++k) ++out[static_cast<std::size_t>(parent_[k])];
  return out;
}

bool RootedTree::is_rooted_path() const {
  for (std::size_t k = 1; k < parent_.size(); ++k) {
    if (parent_[k] != static_cast<int>(k) - 1) return false;
  }
  return true;
}

int RootedTreeBuilder::add_child(int parent) {
  parent_.push_back(parent);
  // Validated lazily by RootedTree's constructor.
  return static_cast<int>(parent_.size()) - 1;
}

void RootedTreeBuilder::add_leaves(int parent, int count) {
  for (int i = 0; i < count; ++i) add_child(parent);
}

int RootedTreeBuilder::add_path(int parent, int length) {
  int end = parent;
  for (int i = 0; i < length; ++i) end = add_child(end);
  return end;
}

UnicyclicRepr::UnicyclicRepr(std::vector<RootedTree> trees) : trees_(std::move(trees)) {
  const int l = cycle_length();
  if (l < 3) throw InvalidParameter("cycle length must be at least 3");
  n_ = 0;
  for (const auto& t : trees_) n_ += t.size();

  tree_of_.assign(static_cast<std::size_t>(n_), 0);
  depth_.assign(static_cast<std::size_t>(n_), 0);
  parent_.assign(static_cast<std::size_t>(n_), -1);
  offset_.assign(static_cast<std::size_t>(l), 0);
  int next = l;
  for (int i = 0; i < l; ++i) {
    offset_[static_cast<std::size_t>(i)] = next;
    tree_of_[static_cast<std::size_t>(i)] = i;
    next += trees_[static_cast<std::size_t>(i)].size() - 1;
  }
  for (int i = 0; i < l; ++i) {
    const auto& tree = trees_[static_cast<std::size_t>(i)];
    const auto depths = tree.depths();
    for (int k = 1; k < tree.size(); ++k) {
      const auto g = static_cast<std::size_t>(global_id(i, k));
      tree_of_[g] = i;
      depth_[g] = depths[static_cast<std::size_t>(k)];
      parent_[g] = global_id(i, tree.parent(k));
    }
  }
}

std::vector<int> UnicyclicRepr::tree_sizes() const {
  std::vector<int> out;
  out.reserve(trees_.size());
  for (const auto& t : trees_) out.push_back(t.size());
  return out;
}

Vertex UnicyclicRepr::global_id(int tree, int node) const {
  if (node == 0) return tree;
  return offset_[static_cast<std::size_t>(tree)] + node - 1;
}

Graph UnicyclicRepr::to_graph() const {
  const int l = cycle_length();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n_));
  for (int i = 0; i < l; ++i) edges.emplace_back(i, (i + 1) % l);
  for (Vertex v = l; v < n_; ++v) edges.emplace_back(parent_[static_cast<std::size_t>(v)], v);
  return Graph(n_, std::move(edges));
}

Decomposition decompose_unicyclic(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 3) throw InvalidGraph("unicyclic graphs need at least 3 vertices");
  if (!g.is_connected()) throw InvalidGraph("graph is not connected");
  if (g.edge_count() != static_cast<std::size_t>(n)) {
    throw InvalidGraph("graph is not unicyclic (edge count " + std::to_string(g.edge_count()) +
                       " != vertex count " + std::to_string(n) + ")");
  }

  // Peel leaves; what remains is the cycle.
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<Vertex> stack;
  std::vector<bool> on_cycle(static_cast<std::size_t>(n), true);
  for (Vertex v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    if (deg[static_cast<std::size_t>(v)] == 1) stack.push_back(v);
  }
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    on_cycle[static_cast<std::size_t>(v)] = false;
    for (Vertex w : g.neighbors(v)) {
      if (on_cycle[static_cast<std::size_t>(w)] && --deg[static_cast<std::size_t>(w)] == 1) stack.push_back(w);
    }
  }

  std::vector<Vertex> cycle;
  const auto first = static_cast<Vertex>(std::find(on_cycle.begin(), on_cycle.end(), true) - on_cycle.begin());
  Vertex prev = -1;
  Vertex cur = first;
  do {
    cycle.push_back(cur);
    Vertex next = -1;
    for (Vertex w : g.neighbors(cur)) {  // neighbours are sorted, so the first pick is the smaller one
      if (on_cycle[static_cast<std::size_t>(w)] && w != prev) {
        next = w;
        break;
      }
    }
    prev = cur;
    cur = next;
  } while (cur != first && cur != -1);

  std::vector<RootedTree> trees;
  std::vector<std::vector<Vertex>> preorders;
  for (Vertex root : cycle) {
    std::vector<int> parent{-1};
    std::vector<Vertex> order{root};
    // Iterative DFS; children visited in ascending vertex order.
    struct Frame {
      Vertex vertex;
      Vertex up;
      int up_local;
    };
    std::vector<Frame> dfs{{root, -1, -1}};
    while (!dfs.empty()) {
      const Frame f = dfs.back();
      dfs.pop_back();
      int self = 0;
      if (f.vertex != root) {
        parent.push_back(f.up_local);
        order.push_back(f.vertex);
        self = static_cast<int>(order.size()) - 1;
      }
      auto nbrs = g.neighbors(f.vertex);
      for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it) {
        if (*it == f.up || on_cycle[static_cast<std::size_t>(*it)]) continue;
        dfs.push_back({*it, f.vertex, self});
      }
    }
    trees.emplace_back(std::move(parent));
    preorders.push_back(std::move(order));
  }

  UnicyclicRepr repr(std::move(trees));
  std::vector<Vertex> to_repr(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < repr.cycle_length(); ++i) {
    const auto& order = preorders[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < order.size(); ++k) {
      to_repr[static_cast<std::size_t>(order[k])] = repr.global_id(i, static_cast<int>(k));
    }
  }
  return Decomposition{std::move(repr), std::move(to_repr)};
}

}  // namespace kfx
