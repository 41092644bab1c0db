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

#include "kfx/metrics.hpp"

#include <algorithm>
#include <queue>

#include "kfx/bareiss.hpp"
#include "kfx/errors.hpp"

namespace kfx {

const char* engine_name(Engine e) { return e == Engine::Structural ? "structural" : "oracle"; }

namespace {

void require_pair(bool ok_a, bool ok_b, Vertex a, Vertex b) {
  if (!ok_a || !ok_b) throw InvalidParameter("vertex out of range");
  if (a == b) throw InvalidParameter("resistance needs two distinct vertices");
}

// Adjacency lists of hanging tree `i`, local node indices.
std::vector<std::vector<int>> tree_adjacency(const RootedTree& t) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(t.size()));
  for (int k = 1; k < t.size(); ++k) {
    adj[static_cast<std::size_t>(k)].push_back(t.parent(k));
    adj[static_cast<std::size_t>(t.parent(k))].push_back(k);
  }
  return adj;
}

std::vector<int> local_bfs(const std::vector<std::vector<int>>& adj, int source) {
  std::vector<int> dist(adj.size(), -1);
  std::queue<int> q;
  dist[static_cast<std::size_t>(source)] = 0;
  q.push(source);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

struct TreeWiener {
  std::int64_t size = 0;
  std::int64_t all_pairs = 0;  // W(T)
  std::int64_t from_root = 0;  // W_root(T)
};

TreeWiener tree_wiener(const RootedTree& t) {
  TreeWiener out;
  out.size = t.size();
  const auto adj = tree_adjacency(t);
  for (int k = 0; k < t.size(); ++k) {
    const auto dist = local_bfs(adj, k);
    std::int64_t row = 0;
    for (int d : dist) row += d;
    out.all_pairs += row;
    if (k == 0) out.from_root = row;
  }
  out.all_pairs /= 2;
  return out;
}

std::int64_t wiener_checked(const Graph& g, Vertex v) {
  const auto dist = bfs_distances(g, v);
  std::int64_t sum = 0;
  for (int d : dist) {
    if (d < 0) throw InvalidGraph("graph is not connected");
    sum += d;
  }
  return sum;
}

BigRational kf_structural_repr(const UnicyclicRepr& u) {
  const std::int64_t l = u.cycle_length();
  BigInt scaled = 0;  // l * Kf

  // Same-tree pairs: resistance equals tree distance.
  for (const auto& t : u.trees()) scaled += BigInt(static_cast<long>(tree_wiener(t).all_pairs * l));

  // Cross-tree pairs: depth(a) + depth(b) + d(l-d)/l.
  const int n = u.vertex_count();
  for (Vertex a = 0; a < n; ++a) {
    std::int64_t row = 0;
    const int ta = u.tree_of(a);
    const std::int64_t da = u.depth(a);
    for (Vertex b = a + 1; b < n; ++b) {
      const int tb = u.tree_of(b);
      if (ta == tb) continue;
      const std::int64_t d = std::abs(ta - tb);
      row += l * (da + u.depth(b)) + d * (l - d);
    }
    scaled += BigInt(static_cast<long>(row));
  }
  return BigRational(scaled, BigInt(static_cast<long>(l)));
}

}  // namespace

BigRational resistance_structural(const UnicyclicRepr& u, Vertex a, Vertex b) {
  require_pair(u.contains(a), u.contains(b), a, b);
  const int ta = u.tree_of(a);
  const int tb = u.tree_of(b);
  if (ta == tb) {
    // Tree distance via the lowest common ancestor.
    long dist = 0;
    Vertex x = a;
    Vertex y = b;
    while (u.depth(x) > u.depth(y)) x = u.tree_parent(x), ++dist;
    while (u.depth(y) > u.depth(x)) y = u.tree_parent(y), ++dist;
    while (x != y) x = u.tree_parent(x), y = u.tree_parent(y), dist += 2;
    return BigRational(dist);
  }
  const long l = u.cycle_length();
  const long d = std::abs(ta - tb);
  return BigRational(static_cast<long>(u.depth(a) + u.depth(b))) + BigRational(BigInt(d * (l - d)), BigInt(l));
}

namespace {

std::vector<std::vector<int>> laplacian(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<int>> lap(n, std::vector<int>(n, 0));
  for (const Edge& e : g.edges()) {
    const auto u = static_cast<std::size_t>(e.u);
    const auto v = static_cast<std::size_t>(e.v);
    ++lap[u][u];
    ++lap[v][v];
    lap[u][v] = lap[v][u] = -1;
  }
  return lap;
}

// Determinant of the Laplacian with the listed vertices' rows and columns removed.
BigInt reduced_minor(const std::vector<std::vector<int>>& lap, Vertex skip_a, Vertex skip_b) {
  const auto n = static_cast<Vertex>(lap.size());
  IntMatrix m;
  m.reserve(lap.size());
  for (Vertex i = 0; i < n; ++i) {
    if (i == skip_a || i == skip_b) continue;
    std::vector<BigInt> row;
    row.reserve(lap.size());
    for (Vertex j = 0; j < n; ++j) {
      if (j == skip_a || j == skip_b) continue;
      row.emplace_back(lap[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    m.push_back(std::move(row));
  }
  return bareiss_determinant(std::move(m));
}

}  // namespace

BigInt spanning_tree_count(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  return reduced_minor(laplacian(g), 0, 0);
}

ResistanceOracle::ResistanceOracle(const Graph& g) : graph_(&g), laplacian_(laplacian(g)) {
  spanning_trees_ = g.vertex_count() == 0 ? BigInt(0) : reduced_minor(laplacian_, 0, 0);
  if (spanning_trees_ == 0) throw InvalidGraph("graph is not connected");
}

BigRational ResistanceOracle::operator()(Vertex a, Vertex b) const {
  require_pair(graph_->contains(a), graph_->contains(b), a, b);
  return BigRational(reduced_minor(laplacian_, a, b), spanning_trees_);
}

BigRational resistance_oracle(const Graph& g, Vertex a, Vertex b) { return ResistanceOracle(g)(a, b); }

BigRational kirchhoff_index(const Graph& g, Engine engine) {
  if (engine == Engine::Oracle) {
    const ResistanceOracle oracle(g);
    BigRational sum;
    for (Vertex a = 0; a < g.vertex_count(); ++a) {
      for (Vertex b = a + 1; b < g.vertex_count(); ++b) sum += oracle(a, b);
    }
    return sum;
  }
  if (g.is_tree()) return BigRational(static_cast<long>(wiener(g)));
  if (g.is_unicyclic() && g.vertex_count() >= 3) return kf_structural_repr(decompose_unicyclic(g).repr);
  if (!g.is_connected()) throw InvalidGraph("graph is not connected");
  throw InvalidGraph("structural engine requires a tree or a unicyclic graph");
}

BigRational kirchhoff_index(const UnicyclicRepr& u, Engine engine) {
  if (engine == Engine::Oracle) return kirchhoff_index(u.to_graph(), Engine::Oracle);
  return kf_structural_repr(u);
}

BigRational kf_vertex(const Graph& g, Vertex v, Engine engine) {
  if (!g.contains(v)) throw InvalidParameter("vertex out of range");
  BigRational sum;
  if (engine == Engine::Oracle) {
    const ResistanceOracle oracle(g);
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
      if (w != v) sum += oracle(v, w);
    }
    return sum;
  }
  if (g.is_tree()) return BigRational(static_cast<long>(wiener_vertex(g, v)));
  if (g.is_unicyclic() && g.vertex_count() >= 3) {
    const auto dec = decompose_unicyclic(g);
    const Vertex target = dec.to_repr[static_cast<std::size_t>(v)];
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
      if (w != target) sum += resistance_structural(dec.repr, target, w);
    }
    return sum;
  }
  if (!g.is_connected()) throw InvalidGraph("graph is not connected");
  throw InvalidGraph("structural engine requires a tree or a unicyclic graph");
}

std::int64_t wiener(const Graph& g) {
  if (g.vertex_count() == 0) throw InvalidGraph("empty graph");
  std::int64_t total = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) total += wiener_checked(g, v);
  return total / 2;
}

std::int64_t wiener_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v)) throw InvalidParameter("vertex out of range");
  return wiener_checked(g, v);
}

BigRational kf_decomposition(const UnicyclicRepr& u) {
  const int l = u.cycle_length();
  std::vector<TreeWiener> data;
  data.reserve(static_cast<std::size_t>(l));
  for (const auto& t : u.trees()) data.push_back(tree_wiener(t));

  BigRational total;
  for (const auto& d : data) total += BigRational(static_cast<long>(d.all_pairs));
  for (int i = 0; i < l; ++i) {
    const auto& ti = data[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < l; ++j) {
      const auto& tj = data[static_cast<std::size_t>(j)];
      total += BigRational(static_cast<long>(tj.size * ti.from_root));
      total += BigRational(BigInt(static_cast<long>(ti.size * tj.size)) * (j - i) * (l - j + i), BigInt(l));
      total += BigRational(static_cast<long>(ti.size * tj.from_root));
    }
  }
  return total;
}

PairTable::PairTable(int n) : n_(n), values_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2) {}

std::size_t PairTable::index(Vertex a, Vertex b) const {
  if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_) throw InvalidParameter("pair out of range");
  if (a > b) std::swap(a, b);
  const auto ua = static_cast<std::size_t>(a);
  const auto un = static_cast<std::size_t>(n_);
  return ua * un - ua * (ua + 1) / 2 + static_cast<std::size_t>(b - a - 1);
}

const BigRational& PairTable::at(Vertex a, Vertex b) const { return values_[index(a, b)]; }

void PairTable::set(Vertex a, Vertex b, BigRational value) {
  if (value.sign() < 0) throw InvalidParameter("pair values are nonnegative");
  values_[index(a, b)] = std::move(value);
}

BigRational PairTable::sum() const {
  BigRational total;
  for (const auto& v : values_) total += v;
  return total;
}

PairTable resistance_table(const Graph& g, Engine engine) {
  PairTable table(g.vertex_count());
  if (engine == Engine::Oracle) {
    const ResistanceOracle oracle(g);
    for (Vertex a = 0; a < g.vertex_count(); ++a) {
      for (Vertex b = a + 1; b < g.vertex_count(); ++b) table.set(a, b, oracle(a, b));
    }
    return table;
  }
  if (g.is_tree()) {
    for (Vertex a = 0; a < g.vertex_count(); ++a) {
      const auto dist = bfs_distances(g, a);
      for (Vertex b = a + 1; b < g.vertex_count(); ++b) table.set(a, b, BigRational(static_cast<long>(dist[static_cast<std::size_t>(b)])));
    }
    return table;
  }
  if (!g.is_unicyclic() || g.vertex_count() < 3) {
    throw InvalidGraph("structural engine requires a tree or a unicyclic graph");
  }
  const auto dec = decompose_unicyclic(g);
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    for (Vertex b = a + 1; b < g.vertex_count(); ++b) {
      table.set(a, b, resistance_structural(dec.repr, dec.to_repr[static_cast<std::size_t>(a)], dec.to_repr[static_cast<std::size_t>(b)]));
    }
  }
  return table;
}

}  // namespace kfx
