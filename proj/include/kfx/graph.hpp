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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace kfx {

using Vertex = std::int32_t;

// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Immutable once built; the
// constructor rejects loops, parallel edges and out-of-range endpoints.
// Connectivity is not enforced here.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  // Sorted lexicographically by (u, v).
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
  bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }
  bool has_edge(Vertex a, Vertex b) const;

  bool is_connected() const;
  bool is_tree() const { return is_connected() && edge_count() + 1 == static_cast<std::size_t>(n_); }
  bool is_unicyclic() const { return is_connected() && edge_count() == static_cast<std::size_t>(n_); }

  // Relabels vertex v as perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

int max_degree(const Graph& g);

// Breadth-first distances from `source`; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

// Edge-list text format: first line "n m", then m lines "u v" (0-based).
// '#' starts a comment running to end of line; blank lines are ignored.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

}  // namespace kfx
