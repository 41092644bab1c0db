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

#pragma once

#include <span>
#include <vector>

#include "kfx/graph.hpp"

namespace kfx {

// Rooted tree as a parent array in preorder: node 0 is the root
// (parent -1) and every other node's parent is an ancestor-or-self of the
// node listed just before it.
class RootedTree {
 public:
  RootedTree() : parent_{-1} {}
  explicit RootedTree(std::vector<int> parent);

  // Single node.
  static RootedTree trivial() { return RootedTree(); }
  // Preorder level sequence with the root at level 0.
  static RootedTree from_levels(std::span<const int> levels);

  int size() const noexcept { return static_cast<int>(parent_.size()); }
  const std::vector<int>& parents() const noexcept { return parent_; }
  int parent(int node) const { return parent_[static_cast<std::size_t>(node)]; }
  std::vector<int> depths() const;
  std::vector<int> child_counts() const;
  // A path hanging from the root with the root as one end.
  bool is_rooted_path() const;

  friend bool operator==(const RootedTree&, const RootedTree&) = default;

 private:
  std::vector<int> parent_;
};

// Incremental builder for preorder parent arrays.
class RootedTreeBuilder {
 public:
  RootedTreeBuilder() : parent_{-1} {}
  // Appends a leaf under `parent` (must be the last node or one of its ancestors).
  int add_child(int parent);
  // Appends `count` leaves under `parent`.
  void add_leaves(int parent, int count);
  // Appends a chain of `length` nodes starting below `parent`; returns its far end.
  int add_path(int parent, int length);
  RootedTree build() const { return RootedTree(parent_); }

 private:
  std::vector<int> parent_;
};

// U(C_l; T_1, ..., T_l): the cycle plus the rooted tree hanging at each cycle
// vertex, in cycle order. The reassembled vertex numbering puts the cycle
// vertices first (0..l-1, cycle order) and then the non-root nodes of each
// tree in preorder, tree after tree.
class UnicyclicRepr {
 public:
  explicit UnicyclicRepr(std::vector<RootedTree> trees);

  int cycle_length() const noexcept { return static_cast<int>(trees_.size()); }
  int vertex_count() const noexcept { return n_; }
  const std::vector<RootedTree>& trees() const noexcept { return trees_; }
  std::vector<int> tree_sizes() const;

  // Layout of the reassembled numbering.
  int tree_of(Vertex v) const { return tree_of_[static_cast<std::size_t>(v)]; }
  int depth(Vertex v) const { return depth_[static_cast<std::size_t>(v)]; }
  // Parent inside the hanging tree; -1 for cycle vertices.
  Vertex tree_parent(Vertex v) const { return parent_[static_cast<std::size_t>(v)]; }
  Vertex global_id(int tree, int node) const;
  bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

  Graph to_graph() const;

 private:
  std::vector<RootedTree> trees_;
  int n_ = 0;
  std::vector<int> offset_;  // first global id of tree i's non-root nodes
  std::vector<int> tree_of_;
  std::vector<int> depth_;
  std::vector<Vertex> parent_;
};

struct Decomposition {
  UnicyclicRepr repr;
  // to_repr[v] is the reassembled id of original vertex v.
  std::vector<Vertex> to_repr;
};

// Requires a connected graph with exactly n edges and n >= 3. The cycle is
// the 2-core; cycle order starts at its smallest vertex and proceeds towards
// the smaller of that vertex's two cycle neighbours.
Decomposition decompose_unicyclic(const Graph& g);

}  // namespace kfx
