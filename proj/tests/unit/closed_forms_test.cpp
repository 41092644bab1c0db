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

#include "kfx/closed_forms.hpp"
#include "kfx/errors.hpp"
#include "kfx/families.hpp"
#include "kfx/metrics.hpp"
#include "support/oracles.hpp"

namespace kfx {
namespace {

BigRational q(long p, long d = 1) { return BigRational(p, d); }

TEST(ClosedForms, Cycle) {
  EXPECT_EQ(kf_cycle_formula(3), q(2));
  EXPECT_EQ(kf_cycle_formula(4), q(5));
  EXPECT_EQ(kf_cycle_formula(5), q(10));
  EXPECT_EQ(kfv_cycle_formula(3), q(4, 3));
  EXPECT_EQ(kfv_cycle_formula(5), q(4));
  EXPECT_EQ(kfv_cycle_formula(7), q(8));
  for (int l = 3; l <= 12; ++l) {
    EXPECT_EQ(kf_cycle_formula(l), testing::grounded_kirchhoff(make_cycle(l)));
    EXPECT_EQ(kfv_cycle_formula(l), kf_vertex(make_cycle(l), 0, Engine::Oracle));
  }
}

TEST(ClosedForms, Broom) {
  EXPECT_EQ(wiener_broom_formula(4, 3), 9);
  EXPECT_EQ(wiener_broom_formula(7, 3), 52);
  EXPECT_EQ(wiener_broom_formula(6, 3), 32);
  for (int n = 3; n <= 14; ++n) {
    EXPECT_EQ(wiener_broom_formula(n, 2), BigInt((n + 1) * n * (n - 1) / 6));
    for (int delta = 2; delta < n; ++delta) {
      EXPECT_EQ(wiener_broom_formula(n, delta), testing::floyd_wiener(make_t_n_delta(n, delta)));
    }
  }
}

TEST(ClosedForms, GraphsAAndB) {
  EXPECT_EQ(kf_a_formula(8, 4, 3), q(65));
  EXPECT_EQ(kf_b_formula(8, 4, 3), q(60));
  EXPECT_EQ(kf_a_formula(8, 4, 4), q(56));
  EXPECT_EQ(kf_b_formula(8, 4, 4), q(52));
  EXPECT_EQ(kf_a_formula(9, 3, 3), q(108));
  EXPECT_EQ(kf_a_formula(7, 3, 3), q(142, 3));
  EXPECT_EQ(kf_a_formula(8, 4, 3), kirchhoff_index(make_graph_a(8, 4, 3), Engine::Oracle));
  EXPECT_EQ(kf_b_formula(8, 4, 3), testing::grounded_kirchhoff(make_graph_b(8, 4, 3)));
  for (auto [n, delta] : {std::pair{6, 3}, {7, 4}, {10, 5}}) {
    EXPECT_EQ(kf_a_formula(n, 3, delta), theorem_bound(n, delta));
  }
}

TEST(ClosedForms, PrintedKfBDiffersFromGraphs) {
  // As printed the (l^2-1)/6 term has coefficient n-1; the graphs need n-l.
  EXPECT_NE(kf_b_formula(8, 4, 3, FormulaVariant::AsPrinted), kf_b_formula(8, 4, 3));
  EXPECT_EQ(kf_b_formula(8, 4, 3, FormulaVariant::AsPrinted) - kf_b_formula(8, 4, 3), q(4 - 1) * q(15, 6));
}

TEST(ClosedForms, Difference) {
  for (int n = 4; n <= 20; ++n) {
    for (int l = 3; l + 1 <= n; ++l) EXPECT_EQ(kf_a_minus_b(n, l, 3), q(n - 3));
  }
  for (int l = 3; l <= 8; ++l) {
    for (int delta = 3; delta <= 6; ++delta) {
      for (int n = l + delta - 2; n <= 14; ++n) {
        EXPECT_EQ(kf_a_minus_b(n, l, delta), kf_a_formula(n, l, delta) - kf_b_formula(n, l, delta));
        EXPECT_EQ(p3_minus_a_polynomial(n, l, delta), theorem_bound(n, delta) - kf_a_formula(n, l, delta));
      }
    }
  }
}

TEST(ClosedForms, TheoremBound) {
  EXPECT_EQ(theorem_bound(100, 96), q(30925, 3));
  EXPECT_EQ(theorem_bound(5, 3), q(44, 3));
  EXPECT_EQ(theorem_bound(4, 3), q(19, 3));
  for (int delta = 3; delta <= 7; ++delta) {
    for (int n = delta + 1; n <= 15; ++n) {
      EXPECT_EQ(theorem_bound(n, delta), kirchhoff_index(make_p3_extremal(n, delta)));
    }
  }
  EXPECT_THROW(theorem_bound(4, 4), InvalidParameter);
}

TEST(ClosedForms, Conjecture) {
  EXPECT_EQ(conj_min_formula_i(5, 3), q(23, 2));
  EXPECT_EQ(conj_min_formula_i(4, 3), q(19, 3));
  EXPECT_EQ(conj_min_formula_ii(12, 4, 2), q(263, 2));
  EXPECT_EQ(conj_min_formula_ii(12, 4, 3), q(261, 2));
  EXPECT_EQ(conj_min_formula_ii(11, 3, 2), q(968, 9));
  EXPECT_EQ(conj_min_formula_ii(12, 5, 2), q(126));
  for (int n = 5; n <= 14; ++n) {
    for (int delta = 3; delta < n; ++delta) {
      EXPECT_EQ(conj_min_formula_i(n, delta), kirchhoff_index(make_conj_min_i(n, delta)));
      for (int x = 1; n - x * (delta - 2) >= 3 && x <= n - x * (delta - 2); ++x) {
        EXPECT_EQ(conj_min_formula_ii(n, delta, x), kirchhoff_index(make_conj_min_ii(n, delta, x)))
            << n << ' ' << delta << ' ' << x;
      }
    }
  }
  EXPECT_EQ(admissible_x(12, 4), (std::vector<int>{4}));
  EXPECT_EQ(admissible_x(12, 5), (std::vector<int>{3}));
  EXPECT_TRUE(admissible_x(12, 7).empty());
}

TEST(ClosedForms, SingleHubReduction) {
  for (int n = 6; n <= 12; ++n) {
    for (int delta = 3; delta <= n - 2; ++delta) {
      const int l = n - (delta - 2);
      const BigRational expected =
          kf_cycle_formula(l) + q((delta - 2) * (delta - 3)) + q(delta - 2) * (q(l * l - 1, 6) + q(l));
      EXPECT_EQ(conj_min_formula_ii(n, delta, 1), expected);
    }
  }
}

TEST(ClosedForms, Evaluate) {
  const FormulaValue v = evaluate_formula("theorem-bound", FormulaParams{100, std::nullopt, 96, std::nullopt});
  EXPECT_EQ(v.value, q(30925, 3));
  EXPECT_THROW(evaluate_formula("kf-a", FormulaParams{8, std::nullopt, 3, std::nullopt}), InvalidParameter);
  EXPECT_THROW(evaluate_formula("nope", FormulaParams{}), InvalidParameter);
  EXPECT_THROW(kf_a_formula(4, 3, 4), InvalidParameter);
  EXPECT_EQ(formula_catalog().size(), 10u);
}

}  // namespace
}  // namespace kfx
