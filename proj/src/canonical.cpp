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

#include "kfx/canonical.hpp"

#include <algorithm>
#include <vector>

#include "kfx/errors.hpp"

namespace kfx {

std::string rooted_tree_code(const RootedTree& tree) {
  const int size = tree.size();
  std::vector<std::vector<std::string>> pending(static_cast<std::size_t>(size));
  std::string code;
  for (int k = size - 1; k >= 0; --k) {
    auto& kids = pending[static_cast<std::size_t>(k)];
    std::sort(kids.begin(), kids.end());
    std::size_t total = 2;
    for (const auto& c : kids) total += c.size();
    code.clear();
    code.reserve(total);
    code.push_back('(');
    for (const auto& c : kids) code += c;
    code.push_back(')');
    kids.clear();
    kids.shrink_to_fit();
    if (k > 0) pending[static_cast<std::size_t>(tree.parent(k))].push_back(code);
  }
  return code;
}

CanonicalCode canonical_code_from_tree_codes(std::span<const std::string_view> codes) {
  const std::size_t l = codes.size();
  std::size_t total = 1;
  for (auto c : codes) total += c.size();

  std::string best;
  std::string candidate;
  candidate.reserve(total);
  for (int direction : {1, -1}) {
    for (std::size_t start = 0; start < l; ++start) {
      candidate.assign("U");
      for (std::size_t step = 0; step < l; ++step) {
        const std::size_t idx = direction > 0 ? (start + step) % l : (start + l - step) % l;
        candidate += codes[idx];
      }
      if (best.empty() || candidate < best) best = candidate;
    }
  }
  return CanonicalCode(std::move(best));
}

CanonicalCode canonical_code(const UnicyclicRepr& u) {
  std::vector<std::string> codes;
  codes.reserve(u.trees().size());
  for (const auto& t : u.trees()) codes.push_back(rooted_tree_code(t));
  std::vector<std::string_view> views(codes.begin(), codes.end());
  return canonical_code_from_tree_codes(views);
}

namespace {

RootedTree root_tree_at(const Graph& tree, Vertex root) {
  std::vector<int> parent{-1};
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
      self = static_cast<int>(parent.size()) - 1;
    }
    for (Vertex w : tree.neighbors(f.vertex)) {
      if (w != f.up) dfs.push_back({w, f.vertex, self});
    }
  }
  return RootedTree(std::move(parent));
}

}  // namespace

CanonicalCode canonical_tree_code(const Graph& tree) {
  if (!tree.is_tree()) throw InvalidGraph("graph is not a tree");
  const int n = tree.vertex_count();
  // Peel leaves layer by layer; the last one or two survivors are the centre.
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = tree.degree(v);
    if (deg[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex w : tree.neighbors(v)) {
        if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::string best;
  for (Vertex c : layer) {
    std::string code = "T" + rooted_tree_code(root_tree_at(tree, c));
    if (best.empty() || code < best) best = std::move(code);
  }
  return CanonicalCode(std::move(best));
}

CanonicalCode canonical_code(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (g.edge_count() == n) return canonical_code(decompose_unicyclic(g).repr);
  if (g.edge_count() + 1 == n) return canonical_tree_code(g);
  throw InvalidGraph("canonical codes exist only for trees and unicyclic graphs");
}

}  // namespace kfx
