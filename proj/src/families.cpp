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

#include "kfx/families.hpp"

#include <array>
#include <utility>

#include "kfx/errors.hpp"

namespace kfx {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 11> kNames{{
    {Family::Cycle, "cycle"},
    {Family::Path, "path"},
    {Family::SnL, "sun"},
    {Family::PnL, "tadpole"},
    {Family::TnDelta, "broom"},
    {Family::PFamilyMember, "p-member"},
    {Family::GraphA, "graph-a"},
    {Family::GraphB, "graph-b"},
    {Family::P3Extremal, "p3"},
    {Family::ConjMinI, "conj-min-i"},
    {Family::ConjMinII, "conj-min-ii"},
}};

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParameter(what);
}

std::vector<RootedTree> trivial_trees(int count) { return std::vector<RootedTree>(static_cast<std::size_t>(count)); }

// Hanging tree rooted at v: `pendants` leaves, then a path of `path` vertices.
RootedTree pendants_then_path(int pendants, int path) {
  RootedTreeBuilder b;
  b.add_leaves(0, pendants);
  b.add_path(0, path);
  return b.build();
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [family, name] : kNames) {
    if (family == f) return name;
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [family, n] : kNames) {
    if (n == name) return family;
  }
  return std::nullopt;
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> families = [] {
    std::vector<Family> out;
    for (const auto& entry : kNames) out.push_back(entry.first);
    return out;
  }();
  return families;
}

Graph make_cycle(int l) {
  require(l >= 3, "cycle length must be at least 3");
  return UnicyclicRepr(trivial_trees(l)).to_graph();
}

Graph make_path(int n) {
  require(n >= 1, "path needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph make_s_n_l(int n, int l) {
  require(l >= 3 && l <= n, "sun graph needs 3 <= l <= n");
  auto trees = trivial_trees(l);
  trees[0] = pendants_then_path(n - l, 0);
  return UnicyclicRepr(std::move(trees)).to_graph();
}

Graph make_p_n_l(int n, int l) {
  require(l >= 3 && l <= n, "tadpole needs 3 <= l <= n");
  auto trees = trivial_trees(l);
  trees[0] = pendants_then_path(0, n - l);
  return UnicyclicRepr(std::move(trees)).to_graph();
}

Graph make_t_n_delta(int n, int delta) {
  require(delta >= 2 && n >= delta + 1, "broom needs n >= delta + 1 >= 3");
  // Hub is vertex 0: path 0..n-delta, then delta-1 pendants on the hub.
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n - delta; ++v) edges.emplace_back(v, v + 1);
  for (Vertex v = n - delta + 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph(n, std::move(edges));
}

int max_hub_pos(int n, int l, int delta) { return n - l - delta + 1 > 0 ? n - l - delta + 1 : 0; }

UnicyclicRepr p_family_member_repr(int n, int l, int delta, int hub_pos) {
  require(l >= 3 && delta >= 3 && n >= l + delta - 2, "family member needs l >= 3, delta >= 3, n >= l + delta - 2");
  require(hub_pos >= 0 && hub_pos <= max_hub_pos(n, l, delta), "hub_pos out of range 0..n-l-delta+1");
  const int tree_size = n - l + 1;
  RootedTreeBuilder b;
  RootedTree tree;
  if (hub_pos == 0) {
    // Hub on the cycle: delta-2 tree neighbours, one of them starting the tail.
    tree = pendants_then_path(delta - 3, tree_size - 1 - (delta - 3));
  } else {
    // Tail of hub_pos vertices down to the hub, delta-2 pendants there and the
    // rest of the tail below it (at least one vertex).
    const int hub = b.add_path(0, hub_pos);
    b.add_leaves(hub, delta - 2);
    b.add_path(hub, tree_size - 1 - hub_pos - (delta - 2));
    tree = b.build();
  }
  auto trees = trivial_trees(l);
  trees[0] = std::move(tree);
  return UnicyclicRepr(std::move(trees));
}

Graph make_p_family_member(int n, int l, int delta, int hub_pos) {
  return p_family_member_repr(n, l, delta, hub_pos).to_graph();
}

Graph make_graph_a(int n, int l, int delta) { return make_p_family_member(n, l, delta, 0); }

Graph make_graph_b(int n, int l, int delta) {
  require(l >= 3 && delta >= 3, "graph (b) needs l >= 3 and delta >= 3");
  require(n >= l + delta, "graph (b) needs n >= l + delta (hub strictly below the cycle)");
  // Path of n-l-delta+1 vertices below v, the last one carrying delta-1 pendants.
  RootedTreeBuilder b;
  const int hub = b.add_path(0, n - l - delta + 1);
  b.add_leaves(hub, delta - 1);
  auto trees = trivial_trees(l);
  trees[0] = b.build();
  return UnicyclicRepr(std::move(trees)).to_graph();
}

Graph make_p3_extremal(int n, int delta) {
  require(delta >= 3 && n >= delta + 1, "P3 extremal graph needs delta >= 3 and n >= delta + 1");
  auto trees = trivial_trees(3);
  trees[0] = pendants_then_path(delta - 3, n - delta);
  return UnicyclicRepr(std::move(trees)).to_graph();
}

Graph make_conj_min_i(int n, int delta) {
  require(delta >= 3 && n >= delta + 1, "conjecture (i) graph needs delta >= 3 and n >= delta + 1");
  return make_s_n_l(n, n - delta + 2);
}

Graph make_conj_min_ii(int n, int delta, int x) {
  require(delta >= 3 && x >= 1, "conjecture (ii) graph needs delta >= 3 and x >= 1");
  const int l = n - x * (delta - 2);
  require(l >= 3, "conjecture (ii) graph needs l = n - x(delta-2) >= 3");
  require(x <= l, "conjecture (ii) graph needs x <= l");
  auto trees = trivial_trees(l);
  for (int i = 0; i < x; ++i) trees[static_cast<std::size_t>(i)] = pendants_then_path(delta - 2, 0);
  return UnicyclicRepr(std::move(trees)).to_graph();
}

Graph make_family(const FamilyParams& p) {
  switch (p.family) {
    case Family::Cycle:
      return make_cycle(p.l > 0 ? p.l : p.n);
    case Family::Path:
      return make_path(p.n);
    case Family::SnL:
      return make_s_n_l(p.n, p.l);
    case Family::PnL:
      return make_p_n_l(p.n, p.l);
    case Family::TnDelta:
      return make_t_n_delta(p.n, p.delta);
    case Family::PFamilyMember:
      return make_p_family_member(p.n, p.l, p.delta, p.hub_pos);
    case Family::GraphA:
      return make_graph_a(p.n, p.l, p.delta);
    case Family::GraphB:
      return make_graph_b(p.n, p.l, p.delta);
    case Family::P3Extremal:
      return make_p3_extremal(p.n, p.delta);
    case Family::ConjMinI:
      return make_conj_min_i(p.n, p.delta);
    case Family::ConjMinII:
      return make_conj_min_ii(p.n, p.delta, p.x);
  }
  throw InvalidParameter("unknown family");
}

}  // namespace kfx
