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

#include <gtest/gtest.h>

#include "kfx/canonical.hpp"
#include "kfx/errors.hpp"
#include "kfx/families.hpp"
#include "kfx/metrics.hpp"

namespace kfx {
namespace {

BigRational q(long p, long d = 1) { return BigRational(p, d); }

TEST(Families, Basic) {
  EXPECT_EQ(make_cycle(3).edge_count(), 3u);
  EXPECT_EQ(make_path(2).edge_count(), 1u);
  EXPECT_EQ(kirchhoff_index(make_cycle(5)), q(10));
  EXPECT_THROW(make_cycle(2), InvalidParameter);
  EXPECT_THROW(make_path(0), InvalidParameter);
}

TEST(Families, SunAndTadpole) {
  EXPECT_EQ(kirchhoff_index(make_s_n_l(4, 3), Engine::Oracle), q(19, 3));
  EXPECT_EQ(max_degree(make_s_n_l(5, 3)), 4);
  EXPECT_EQ(canonical_code(make_s_n_l(6, 6)), canonical_code(make_cycle(6)));
  EXPECT_EQ(canonical_code(make_p_n_l(6, 6)), canonical_code(make_cycle(6)));
  EXPECT_EQ(max_degree(make_p_n_l(6, 4)), 3);
  EXPECT_EQ(canonical_code(make_p_n_l(5, 3)), canonical_code(make_p3_extremal(5, 3)));
  EXPECT_THROW(make_s_n_l(3, 4), InvalidParameter);
}

TEST(Families, Broom) {
  EXPECT_EQ(wiener(make_t_n_delta(4, 3)), 9);
  EXPECT_EQ(wiener(make_t_n_delta(7, 3)), 52);
  const Graph star = make_t_n_delta(6, 5);
  EXPECT_EQ(max_degree(star), 5);
  EXPECT_EQ(canonical_tree_code(star), canonical_tree_code(Graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}})));
  EXPECT_TRUE(make_t_n_delta(9, 4).is_tree());
}

TEST(Families, FamilyMembers) {
  const Graph g = make_p_family_member(7, 3, 4, 0);
  EXPECT_EQ(g.vertex_count(), 7);
  EXPECT_EQ(g.edge_count(), 7u);
  EXPECT_EQ(max_degree(g), 4);
  EXPECT_EQ(max_hub_pos(8, 3, 4), 2);
  for (int n = 6; n <= 12; ++n) {
    for (int l = 3; l <= 6; ++l) {
      for (int delta = 3; delta <= 5 && n >= l + delta - 2; ++delta) {
        for (int h = 0; h <= max_hub_pos(n, l, delta); ++h) {
          const Graph m = make_p_family_member(n, l, delta, h);
          EXPECT_TRUE(m.is_unicyclic());
          EXPECT_EQ(m.vertex_count(), n);
          EXPECT_EQ(max_degree(m), delta);
          EXPECT_EQ(decompose_unicyclic(m).repr.cycle_length(), l);
        }
        EXPECT_THROW(make_p_family_member(n, l, delta, max_hub_pos(n, l, delta) + 1), InvalidParameter);
        EXPECT_EQ(canonical_code(make_graph_a(n, l, delta)), canonical_code(make_p_family_member(n, l, delta, 0)));
        if (n >= l + delta) {
          EXPECT_EQ(canonical_code(make_graph_b(n, l, delta)),
                    canonical_code(make_p_family_member(n, l, delta, max_hub_pos(n, l, delta))));
        } else {
          EXPECT_THROW(make_graph_b(n, l, delta), InvalidParameter);
        }
      }
    }
  }
}

TEST(Families, GraphAOnTriangleIsExtremal) {
  for (int delta = 3; delta <= 6; ++delta) {
    for (int n = delta + 1; n <= 12; ++n) {
      EXPECT_EQ(canonical_code(make_graph_a(n, 3, delta)), canonical_code(make_p3_extremal(n, delta)));
    }
  }
}

TEST(Families, P3Extremal) {
  EXPECT_EQ(kirchhoff_index(make_p3_extremal(5, 3), Engine::Oracle), q(44, 3));
  EXPECT_EQ(kirchhoff_index(make_p3_extremal(100, 96)), q(30925, 3));
  EXPECT_EQ(max_degree(make_p3_extremal(100, 96)), 96);
  EXPECT_EQ(canonical_code(make_p3_extremal(6, 5)), canonical_code(make_s_n_l(6, 3)));
  EXPECT_THROW(make_p3_extremal(4, 4), InvalidParameter);
}

TEST(Families, ConjectureGraphs) {
  EXPECT_EQ(kirchhoff_index(make_conj_min_i(5, 3), Engine::Oracle), q(23, 2));
  EXPECT_EQ(canonical_code(make_conj_min_i(8, 3)), canonical_code(make_s_n_l(8, 7)));
  const Graph g = make_conj_min_ii(12, 4, 2);
  EXPECT_EQ(decompose_unicyclic(g).repr.cycle_length(), 8);
  EXPECT_EQ(max_degree(g), 4);
  for (int n = 6; n <= 12; ++n) {
    for (int delta = 3; delta < n - 1; ++delta) {
      EXPECT_EQ(canonical_code(make_conj_min_ii(n, delta, 1)), canonical_code(make_conj_min_i(n, delta)));
    }
  }
  EXPECT_THROW(make_conj_min_ii(6, 4, 3), InvalidParameter);
}

TEST(Families, DispatchByName) {
  for (Family f : all_families()) EXPECT_EQ(parse_family(family_name(f)), f);
  EXPECT_FALSE(parse_family("nope").has_value());
  FamilyParams p;
  p.family = Family::SnL;
  p.n = 4;
  p.l = 3;
  EXPECT_EQ(make_family(p), make_s_n_l(4, 3));
}

}  // namespace
}  // namespace kfx
