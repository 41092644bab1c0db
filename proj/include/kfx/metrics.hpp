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

#include <cstdint>
#include <vector>

#include "kfx/graph.hpp"
#include "kfx/rational.hpp"
#include "kfx/unicyclic.hpp"

namespace kfx {

// Two independent routes to resistance distance.
//   Structural: series rule through cut vertices plus the d(l-d)/l cycle
//               term; accepts unicyclic graphs and trees only.
//   Oracle:     matrix-tree ratio of Laplacian minors; any connected graph.
enum class Engine { Structural, Oracle };

const char* engine_name(Engine e);

// Kirchhoff resistance of a pair in the reassembled numbering of `u`.
BigRational resistance_structural(const UnicyclicRepr& u, Vertex a, Vertex b);

// Number of spanning trees (Laplacian with one row/column deleted).
BigInt spanning_tree_count(const Graph& g);

// r(a, b) = det L[{a,b} removed] / det L[one vertex removed].
class ResistanceOracle {
 public:
  explicit ResistanceOracle(const Graph& g);

  BigRational operator()(Vertex a, Vertex b) const;
  const BigInt& spanning_trees() const noexcept { return spanning_trees_; }

 private:
  const Graph* graph_;
  std::vector<std::vector<int>> laplacian_;
  BigInt spanning_trees_;
};

BigRational resistance_oracle(const Graph& g, Vertex a, Vertex b);

BigRational kirchhoff_index(const Graph& g, Engine engine = Engine::Structural);
BigRational kirchhoff_index(const UnicyclicRepr& u, Engine engine = Engine::Structural);

// Resistance transmission of one vertex: sum of r(v, w) over w != v.
BigRational kf_vertex(const Graph& g, Vertex v, Engine engine = Engine::Structural);

// Shortest-path sums by repeated BFS. Throw InvalidGraph when disconnected.
std::int64_t wiener(const Graph& g);
std::int64_t wiener_vertex(const Graph& g, Vertex v);

// Kf assembled from hanging-tree Wiener data and cycle terms:
//   sum_i W(T_i) + sum_{i<j} ( |T_j| W_{v_i}(T_i) + |T_i||T_j| (j-i)(l-j+i)/l + |T_i| W_{v_j}(T_j) ).
BigRational kf_decomposition(const UnicyclicRepr& u);

// Upper-triangular table of exact pair values (diagonal omitted).
class PairTable {
 public:
  explicit PairTable(int n);

  int vertex_count() const noexcept { return n_; }
  const BigRational& at(Vertex a, Vertex b) const;
  void set(Vertex a, Vertex b, BigRational value);
  BigRational sum() const;

 private:
  std::size_t index(Vertex a, Vertex b) const;

  int n_;
  std::vector<BigRational> values_;
};

PairTable resistance_table(const Graph& g, Engine engine = Engine::Structural);

}  // namespace kfx
