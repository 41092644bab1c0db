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

#include "kfx/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <queue>
#include <set>
#include <sstream>

#include "kfx/errors.hpp"

namespace kfx {

Graph::Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 0) throw InvalidParameter("negative vertex count");
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v >= n_) throw InvalidParameter("edge endpoint out of range");
    if (e.u == e.v) throw InvalidParameter("self-loop at vertex " + std::to_string(e.u));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw InvalidParameter("parallel edge");
  }
  adjacency_.resize(static_cast<std::size_t>(n_));
  for (const Edge& e : edges_) {
    adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (!contains(a) || !contains(b)) return false;
  const auto& list = adjacency_[static_cast<std::size_t>(a)];
  return std::binary_search(list.begin(), list.end(), b);
}

bool Graph::is_connected() const {
  if (n_ == 0) return false;
  const auto dist = bfs_distances(*this, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != static_cast<std::size_t>(n_)) throw InvalidParameter("permutation size mismatch");
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) {
    out.emplace_back(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  }
  return Graph(n_, std::move(out));
}

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::queue<Vertex> frontier;
  dist[static_cast<std::size_t>(source)] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const Vertex v = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(v)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

namespace {

// Splits a comment-stripped line into integer tokens.
std::vector<long long> tokenize(const std::string& raw, int line_no) {
  std::string line = raw.substr(0, raw.find('#'));
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc() || ptr != line.data() + j) {
      throw ParseError(line_no, "not an integer: '" + line.substr(i, j - i) + "'");
    }
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = tokenize(line, line_no);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) throw ParseError(line_no, "expected two integers");
    if (n < 0) {
      n = tokens[0];
      m = tokens[1];
      if (n < 1 || n > (1 << 24)) throw ParseError(line_no, "vertex count out of range");
      if (m < 0) throw ParseError(line_no, "negative edge count");
      continue;
    }
    const long long u = tokens[0];
    const long long v = tokens[1];
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(line_no, "vertex index out of range");
    if (u == v) throw ParseError(line_no, "self-loop");
    if (static_cast<long long>(edges.size()) >= m) throw ParseError(line_no, "more edges than declared");
    const Edge e(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!seen.insert(e).second) throw ParseError(line_no, "duplicate edge");
    edges.push_back(e);
  }
  if (n < 0) throw ParseError(line_no, "missing header line");
  if (static_cast<long long>(edges.size()) != m) throw ParseError(line_no, "fewer edges than declared");
  return Graph(static_cast<int>(n), std::move(edges));
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace kfx
