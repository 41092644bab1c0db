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

#include "kfx/rational.hpp"

namespace kfx {

// Which transcription of a printed closed form to evaluate. `AsPrinted` is
// the final displayed line verbatim; `Validated` is the reading confirmed
// against exact graph computations. They differ only where the printed
// algebra contains a slip (currently Kf_(b)).
enum class FormulaVariant { AsPrinted, Validated };

const char* variant_name(FormulaVariant v);

BigRational kf_cycle_formula(int l);   // (l^3 - l)/12
BigRational kfv_cycle_formula(int l);  // (l^2 - 1)/6
BigInt wiener_broom_formula(int n, int delta);

// Graphs (a) and (b) of the tadpole-with-hub family.
BigRational kf_a_formula(int n, int l, int delta);
BigRational kf_b_formula(int n, int l, int delta, FormulaVariant v = FormulaVariant::Validated);
// Simplified difference polynomial (Delta-3)l^2 + (Delta-3)(Delta-n-4)l - 8n + 12Delta + 3n Delta - 3Delta^2 - 12.
BigRational kf_a_minus_b(int n, int l, int delta);

// Maximum Kirchhoff index over unicyclic graphs with n vertices and maximum degree delta.
BigRational theorem_bound(int n, int delta);
// Printed polynomial for Kf(P3_{n,Delta}) - Kf_(a), with n kept symbolic in
// the last term; equals theorem_bound - kf_a_formula.
BigRational p3_minus_a_polynomial(int n, int l, int delta);

// Conjectured minima.
BigRational conj_min_formula_i(int n, int delta);
BigRational conj_min_formula_ii(int n, int delta, int x);
// Positive integers x with l = n - x(delta-2) >= 3 and x <= l <= x + delta - 2.
std::vector<int> admissible_x(int n, int delta);

struct FormulaParams {
  std::optional<int> n;
  std::optional<int> l;
  std::optional<int> delta;
  std::optional<int> x;
};

struct FormulaValue {
  std::string name;
  FormulaVariant variant = FormulaVariant::Validated;
  FormulaParams params;
  BigRational value;
};

struct FormulaInfo {
  std::string_view name;
  std::string_view required;  // subset of "n", "l", "delta", "x"
  std::string_view description;
  std::string_view discrepancy;  // empty when the printed form checks out
};

const std::vector<FormulaInfo>& formula_catalog();

// Evaluates a catalog entry by name; throws InvalidParameter on an unknown
// name or a missing parameter.
FormulaValue evaluate_formula(std::string_view name, const FormulaParams& params,
                              FormulaVariant variant = FormulaVariant::Validated);

}  // namespace kfx
