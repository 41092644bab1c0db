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

#include "kfx/suites.hpp"

#include <array>
#include <random>

#include "kfx/closed_forms.hpp"
#include "kfx/families.hpp"
#include "kfx/metrics.hpp"

namespace kfx {

namespace {

// Unlabeled connected unicyclic graphs on n = 3..12 vertices.
constexpr std::array<std::uint64_t, 10> kUnicyclicCounts{1, 2, 5, 13, 33, 89, 240, 657, 1806, 5026};

constexpr std::size_t kMaxListedFailures = 10;

void check_engines(SuiteResult& suite, const Graph& g, const std::string& label) {
  const auto dec = decompose_unicyclic(g);
  const ResistanceOracle oracle(g);
  BigRational pairwise;
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    for (Vertex b = a + 1; b < g.vertex_count(); ++b) {
      const BigRational r = oracle(a, b);
      pairwise += r;
      ++suite.checks;
      if (resistance_structural(dec.repr, dec.to_repr[static_cast<std::size_t>(a)],
                                dec.to_repr[static_cast<std::size_t>(b)]) != r) {
        suite.fail(label + ": engines disagree on pair " + std::to_string(a) + "," + std::to_string(b));
      }
    }
  }
  ++suite.checks;
  if (kf_decomposition(dec.repr) != pairwise) suite.fail(label + ": decomposition differs from pairwise sum");
}

}  // namespace

void SuiteResult::fail(std::string what) {
  passed = false;
  if (failures.size() < kMaxListedFailures) failures.push_back(std::move(what));
}

SuiteResult run_theorem_suite(int n_max, const RunLimits& limits) {
  SuiteResult suite{"theorem"};
  Json reports = Json::array();
  for (int n = 4; n <= n_max; ++n) {
    for (int delta = 3; delta <= n - 1; ++delta) {
      const auto r = verify_theorem(n, delta, limits);
      ++suite.checks;
      if (r.verdict != Verdict::Match) {
        suite.fail("n=" + std::to_string(n) + " delta=" + std::to_string(delta) + " verdict " + verdict_name(r.verdict));
      }
      reports.push_back(to_json(r));
    }
  }
  suite.details["reports"] = std::move(reports);
  return suite;
}

SuiteResult run_engine_suite(int n_exhaustive, int random_count, std::uint64_t seed, const RunLimits& limits) {
  SuiteResult suite{"engines"};
  std::uint64_t exhaustive = 0;
  for (int n = 3; n <= n_exhaustive; ++n) {
    EnumerationOptions eo;
    eo.n = n;
    eo.cap = limits.cap;
    eo.workers = limits.workers;
    for (const auto& g : enumerate_unicyclic(eo)) {
      check_engines(suite, g.repr.to_graph(), g.code.str());
      ++exhaustive;
    }
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < random_count; ++i) {
    const int n = std::uniform_int_distribution<int>(9, 12)(rng);
    check_engines(suite, random_unicyclic_graph(n, rng), "random #" + std::to_string(i));
  }
  suite.details["seed"] = seed;
  suite.details["exhaustive_graphs"] = exhaustive;
  suite.details["random_graphs"] = random_count;
  return suite;
}

SuiteResult run_formula_suite() {
  SuiteResult suite{"formulas"};
  std::uint64_t printed_b_mismatches = 0;
  Json nonpositive = Json::array();
  for (int l = 3; l <= 8; ++l) {
    for (int delta = 3; delta <= 6; ++delta) {
      for (int n = l + delta - 2; n <= 14; ++n) {
        const std::string at = "n=" + std::to_string(n) + " l=" + std::to_string(l) + " delta=" + std::to_string(delta);
        const BigRational a = kf_a_formula(n, l, delta);
        const BigRational b = kf_b_formula(n, l, delta);
        suite.checks += 4;
        if (kirchhoff_index(make_graph_a(n, l, delta)) != a) suite.fail(at + ": Kf(graph a) != kf-a");
        if (n >= l + delta) {
          ++suite.checks;
          const BigRational kb = kirchhoff_index(make_graph_b(n, l, delta));
          if (kb != b) suite.fail(at + ": Kf(graph b) != kf-b");
          if (kb != kf_b_formula(n, l, delta, FormulaVariant::AsPrinted)) ++printed_b_mismatches;
        }
        const BigRational diff = kf_a_minus_b(n, l, delta);
        if (diff != a - b) suite.fail(at + ": kf-a-minus-b != kf-a - kf-b");
        if (n > 3 && diff.sign() <= 0) {
          suite.fail(at + ": kf-a-minus-b not positive");
          nonpositive.push_back(Json::array({n, l, delta, diff.to_fraction()}));
        }
        const BigRational gap = theorem_bound(n, delta) - a;
        if (gap.sign() < 0 || (gap.sign() == 0) != (l == 3)) suite.fail(at + ": theorem bound gap sign");
      }
    }
  }
  suite.details["kf_b_as_printed_mismatches"] = printed_b_mismatches;
  suite.details["kf_a_minus_b_nonpositive"] = std::move(nonpositive);
  return suite;
}

SuiteResult run_count_suite(int n_max, const RunLimits& limits) {
  SuiteResult suite{"counts"};
  Json counts = Json::object();
  for (int n = 3; n <= n_max && n - 3 < static_cast<int>(kUnicyclicCounts.size()); ++n) {
    EnumerationOptions eo;
    eo.n = n;
    eo.cap = limits.cap;
    eo.workers = limits.workers;
    const auto classes = enumerate_unicyclic(eo);
    ++suite.checks;
    counts[std::to_string(n)] = classes.size();
    if (classes.size() != kUnicyclicCounts[static_cast<std::size_t>(n - 3)]) {
      suite.fail("n=" + std::to_string(n) + ": " + std::to_string(classes.size()) + " classes");
    }
  }
  suite.details["counts"] = std::move(counts);
  return suite;
}

SuiteResult run_lemma_suite(int n_max, const RunLimits& limits) {
  SuiteResult suite{"lemmas"};
  LemmaOptions options;
  options.n_max = n_max;
  options.limits = limits;
  const auto report = check_lemma_properties(options);
  for (const auto& r : report.results) {
    if (!r.asserted) continue;
    ++suite.checks;
    if (!r.passed()) suite.fail(r.name + ": " + r.first_violation);
  }
  suite.details = to_json(report);
  return suite;
}

Json to_json(const SuiteResult& suite) {
  Json j;
  j["suite"] = suite.name;
  j["passed"] = suite.passed;
  j["checks"] = suite.checks;
  j["failures"] = suite.failures;
  j["details"] = suite.details;
  return j;
}

}  // namespace kfx
