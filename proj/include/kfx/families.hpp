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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kfx/graph.hpp"
#include "kfx/unicyclic.hpp"

namespace kfx {

// Named families. Unicyclic members are emitted in the reassembled
// numbering (cycle 0..l-1 first, then hanging-tree vertices in preorder),
// with every hub on cycle vertex 0 unless stated otherwise.
enum class Family {
  Cycle,          // C_l
  Path,           // P_n
  SnL,            // C_l with n-l pendants on one cycle vertex
  PnL,            // tadpole: C_l with a path of n-l vertices on one cycle vertex
  TnDelta,        // broom: path on n-Delta+1 vertices, Delta-1 pendants at one end
  PFamilyMember,  // tadpole with pendants on the tail vertex at distance hub_pos
  GraphA,         // PFamilyMember with hub_pos = 0
  GraphB,         // PFamilyMember with the hub at the far end of the tail
  P3Extremal,     // triangle carrying Delta-3 pendants and a path of n-Delta vertices
  ConjMinI,       // C_{n-Delta+2} with Delta-2 pendants on one cycle vertex
  ConjMinII,      // C_l, l = n - x(Delta-2), Delta-2 pendants on x consecutive cycle vertices
};

struct FamilyParams {
  Family family = Family::Cycle;
  int n = 0;
  int l = 0;
  int delta = 0;
  int x = 0;
  int hub_pos = 0;
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);
const std::vector<Family>& all_families();

Graph make_cycle(int l);
Graph make_path(int n);
Graph make_s_n_l(int n, int l);
Graph make_p_n_l(int n, int l);
Graph make_t_n_delta(int n, int delta);
Graph make_p_family_member(int n, int l, int delta, int hub_pos);
Graph make_graph_a(int n, int l, int delta);
Graph make_graph_b(int n, int l, int delta);
Graph make_p3_extremal(int n, int delta);
Graph make_conj_min_i(int n, int delta);
Graph make_conj_min_ii(int n, int delta, int x);

// Largest admissible hub_pos, n - l - delta + 1 (0 when only graph (a) exists).
int max_hub_pos(int n, int l, int delta);

// Unicyclic members as representations (same numbering as the graphs).
UnicyclicRepr p_family_member_repr(int n, int l, int delta, int hub_pos);

// Dispatch on params.family; validates the parameters the family uses.
Graph make_family(const FamilyParams& params);

}  // namespace kfx
