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

#include "kfx/closed_forms.hpp"

#include <algorithm>

#include "kfx/errors.hpp"

namespace kfx {

namespace {

BigRational q(long value) { return BigRational(value); }
BigRational frac(long num, long den) { return BigRational(BigInt(num), BigInt(den)); }

void require(bool ok, const char* what) {
  if (!ok) throw InvalidParameter(what);
}

void require_tadpole_params(int n, int l, int delta) {
  require(l >= 3 && delta >= 3 && n >= l + delta - 2, "needs l >= 3, delta >= 3, n >= l + delta - 2");
}

BigRational binom3(long m) { return q(m) * q(m - 1) * q(m - 2) / q(6); }

}  // namespace

const char* variant_name(FormulaVariant v) { return v == FormulaVariant::AsPrinted ? "as-printed" : "validated"; }

BigRational kf_cycle_formula(int l) {
  require(l >= 3, "cycle length must be at least 3");
  return frac(static_cast<long>(l) * l * l - l, 12);
}

BigRational kfv_cycle_formula(int l) {
  require(l >= 3, "cycle length must be at least 3");
  return frac(static_cast<long>(l) * l - 1, 6);
}

BigInt wiener_broom_formula(int n, int delta) {
  require(delta >= 2 && n >= delta + 1, "broom needs delta >= 2 and n >= delta + 1");
  const BigRational w = binom3(n - delta + 2) + q(delta - 1) * q(n - delta + 1) * q(n - delta + 2) / q(2) +
                        q(delta - 1) * q(delta - 2);
  return w.numerator();
}

BigRational kf_a_formula(int n, int l, int delta) {
  require_tadpole_params(n, l, delta);
  const long k = n - l - delta;
  return kf_cycle_formula(l) + q(k + 5) * q(k + 4) * q(n - l + 2 * delta - 6) / q(6) +
         q(n - l) * q(static_cast<long>(l) * l - 1) / q(6) + q(delta - 2) * q(l - 1) + q(delta - 3) * q(delta - 4) +
         q(l - 1) * q(k + 2) * q(k + 5) / q(2);
}

BigRational kf_b_formula(int n, int l, int delta, FormulaVariant v) {
  require_tadpole_params(n, l, delta);
  const long k = n - l - delta;
  // The printed final line carries (n-1) where the derivation gives (n-l).
  const long cycle_coeff = v == FormulaVariant::AsPrinted ? n - 1 : n - l;
  return kf_cycle_formula(l) + q(k + 2) * q(k + 3) * q(n - l + 2 * delta - 2) / q(6) +
         q(cycle_coeff) * q(static_cast<long>(l) * l - 1) / q(6) + q(delta - 1) * q(delta - 2) +
         q(k + 2) * q(delta - 1) * q(l - 1) + q(l - 1) * q(k + 1) * q(k + 2) / q(2);
}

BigRational kf_a_minus_b(int n, int l, int delta) {
  require_tadpole_params(n, l, delta);
  const long L = l;
  const long d = delta;
  return q((d - 3) * L * L + (d - 3) * (d - n - 4) * L - 8L * n + 12 * d + 3L * n * d - 3 * d * d - 12);
}

BigRational theorem_bound(int n, int delta) {
  require(delta >= 3 && n >= delta + 1, "needs delta >= 3 and n >= delta + 1");
  const long m = n - delta;
  return q(m + 1) * q(m + 2) * q(n + 2L * delta - 9) / q(6) + q(delta - 3) * (q(delta) - frac(2, 3)) + q(m * m) +
         frac(7 * m, 3) + q(2);
}

BigRational p3_minus_a_polynomial(int n, int l, int delta) {
  require_tadpole_params(n, l, delta);
  const BigRational L = q(l);
  const BigRational D = q(delta);
  return -(L * L * L) / q(4) + (frac(7, 2) - D) * L * L + (-(D * D) + q(7) * D - frac(49, 4)) * L + q(3) * D * D -
         q(12) * D + q(12) + (L * L / q(3) + L * D - frac(7, 2) * L - q(3) * D + frac(15, 2)) * q(n);
}

BigRational conj_min_formula_i(int n, int delta) {
  require(delta >= 3 && n >= delta + 1, "needs delta >= 3 and n >= delta + 1");
  return q(n + delta - 2) * q(n - delta + 3) * q(n - delta + 1) / q(12) + q(delta - 2) * q(n - 1);
}

std::vector<int> admissible_x(int n, int delta) {
  std::vector<int> out;
  if (delta < 3) return out;
  for (int x = 1; x * (delta - 2) <= n; ++x) {
    const int l = n - x * (delta - 2);
    if (l >= 3 && x <= l && l <= x + delta - 2) out.push_back(x);
  }
  return out;
}

BigRational conj_min_formula_ii(int n, int delta, int x) {
  require(delta >= 3 && x >= 1, "needs delta >= 3 and x >= 1");
  const long l = n - static_cast<long>(x) * (delta - 2);
  require(l >= 3 && x <= l, "needs l = n - x(delta-2) >= 3 and x <= l");
  const long h = delta - 2;
  BigRational value = kf_cycle_formula(static_cast<int>(l)) + q(x) * q(h) * q(delta - 3) +
                      q(x) * q(h) * (frac(l * l - 1, 6) + q(l)) + q(x) * q(x - 1) * q(h * h);
  BigRational tail;
  for (long i = 1; i <= x - 1; ++i) tail += frac(i * (l - i) * (x - i), l);
  return value + q(h * h) * tail;
}

const std::vector<FormulaInfo>& formula_catalog() {
  static const std::vector<FormulaInfo> catalog{
      {"kf-cycle", "l", "Kf(C_l) = (l^3 - l)/12", ""},
      {"kfv-cycle", "l", "Kf_v(C_l) = (l^2 - 1)/6", ""},
      {"wiener-broom", "n delta", "W(T_{n,Delta})", ""},
      {"kf-a", "n l delta", "Kf of graph (a): hub on the cycle", ""},
      {"kf-b", "n l delta", "Kf of graph (b): hub at the far end of the tail",
       "printed final line has (n-1)(l^2-1)/6; graph computations confirm (n-l)(l^2-1)/6 (validated)"},
      {"kf-a-minus-b", "n l delta", "simplified Kf_(a) - Kf_(b) polynomial", ""},
      {"theorem-bound", "n delta", "maximum Kf over unicyclic graphs with max degree Delta", ""},
      {"p3-minus-a", "n l delta", "printed polynomial for Kf(P3_{n,Delta}) - Kf_(a)", ""},
      {"conj-min-i", "n delta", "conjectured minimum, branch (i), l = n - Delta + 2", ""},
      {"conj-min-ii", "n delta x", "conjectured minimum, branch (ii), l = n - x(Delta-2)", ""},
  };
  return catalog;
}

FormulaValue evaluate_formula(std::string_view name, const FormulaParams& p, FormulaVariant variant) {
  const auto need = [&](const std::optional<int>& value, const char* what) {
    if (!value) throw InvalidParameter(std::string("formula ") + std::string(name) + " needs --" + what);
    return *value;
  };
  FormulaValue out;
  out.name = std::string(name);
  out.variant = variant;
  out.params = p;
  if (name == "kf-cycle") {
    out.value = kf_cycle_formula(need(p.l, "l"));
  } else if (name == "kfv-cycle") {
    out.value = kfv_cycle_formula(need(p.l, "l"));
  } else if (name == "wiener-broom") {
    out.value = BigRational(wiener_broom_formula(need(p.n, "n"), need(p.delta, "delta")));
  } else if (name == "kf-a") {
    out.value = kf_a_formula(need(p.n, "n"), need(p.l, "l"), need(p.delta, "delta"));
  } else if (name == "kf-b") {
    out.value = kf_b_formula(need(p.n, "n"), need(p.l, "l"), need(p.delta, "delta"), variant);
  } else if (name == "kf-a-minus-b") {
    out.value = kf_a_minus_b(need(p.n, "n"), need(p.l, "l"), need(p.delta, "delta"));
  } else if (name == "theorem-bound") {
    out.value = theorem_bound(need(p.n, "n"), need(p.delta, "delta"));
  } else if (name == "p3-minus-a") {
    out.value = p3_minus_a_polynomial(need(p.n, "n"), need(p.l, "l"), need(p.delta, "delta"));
  } else if (name == "conj-min-i") {
    out.value = conj_min_formula_i(need(p.n, "n"), need(p.delta, "delta"));
  } else if (name == "conj-min-ii") {
    out.value = conj_min_formula_ii(need(p.n, "n"), need(p.delta, "delta"), need(p.x, "x"));
  } else {
    throw InvalidParameter("unknown formula: " + std::string(name));
  }
  return out;
}

}  // namespace kfx
