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

#include <set>

#include "kfx/canonical.hpp"
#include "kfx/errors.hpp"
#include "kfx/families.hpp"
#include "kfx/metrics.hpp"
#include "kfx/report.hpp"
#include "kfx/search.hpp"
#include "support/oracles.hpp"

namespace kfx {
namespace {

BigRational q(long p, long d = 1) { return BigRational(p, d); }

std::vector<std::string> codes_of(const std::vector<EnumeratedGraph>& graphs) {
  std::vector<std::string> out;
  for (const auto& g : graphs) out.push_back(g.code.str());
  return out;
}

TEST(RootedTrees, Counts) {
  const std::vector<int> expected{1, 1, 2, 4, 9, 20, 48, 115, 286, 719};
  const auto counts = rooted_tree_counts(10);
  for (int s = 1; s <= 10; ++s) {
    EXPECT_EQ(counts[s], expected[s - 1]);
    EXPECT_EQ(static_cast<int>(rooted_trees(s).size()), expected[s - 1]);
  }
}

TEST(Enumerate, SmallExamples) {
  EnumerationOptions eo;
  eo.n = 4;
  EXPECT_EQ(enumerate_unicyclic(eo).size(), 2u);
  eo.n = 5;
  EXPECT_EQ(enumerate_unicyclic(eo).size(), 5u);
  eo.delta = 2;
  const auto only = enumerate_unicyclic(eo);
  ASSERT_EQ(only.size(), 1u);
  EXPECT_EQ(only[0].code, canonical_code(make_cycle(5)));
  eo.delta = 3;
  EXPECT_EQ(enumerate_unicyclic(eo).size(), 3u);
}

TEST(Enumerate, SoundnessAndFilters) {
  EnumerationOptions eo;
  eo.n = 9;
  eo.delta = 4;
  eo.min_cycle_length = 4;
  eo.max_cycle_length = 5;
  for (const auto& cls : enumerate_unicyclic(eo)) {
    const Graph g = cls.repr.to_graph();
    EXPECT_TRUE(g.is_unicyclic());
    EXPECT_EQ(g.vertex_count(), 9);
    EXPECT_EQ(max_degree(g), 4);
    EXPECT_GE(cls.repr.cycle_length(), 4);
    EXPECT_LE(cls.repr.cycle_length(), 5);
    EXPECT_EQ(canonical_code(g), cls.code);
  }
  eo.degree_mode = DegreeMode::AtMost;
  for (const auto& cls : enumerate_unicyclic(eo)) EXPECT_LE(max_degree(cls.repr.to_graph()), 4);
}

TEST(Enumerate, CompleteAgainstLabeledBruteForce) {
  for (int n = 3; n <= 7; ++n) {
    std::set<std::string> labeled;
    testing::for_each_labeled_unicyclic(n, [&](const Graph& g) { labeled.insert(canonical_code(g).str()); });
    EnumerationOptions eo;
    eo.n = n;
    const auto codes = codes_of(enumerate_unicyclic(eo));
    EXPECT_EQ(std::set<std::string>(codes.begin(), codes.end()), labeled) << "n=" << n;
    EXPECT_EQ(codes.size(), labeled.size());
  }
}

TEST(Enumerate, WorkerCountDoesNotChangeOutput) {
  EnumerationOptions eo;
  eo.n = 10;
  const auto one = codes_of(enumerate_unicyclic(eo));
  eo.workers = 4;
  EXPECT_EQ(codes_of(enumerate_unicyclic(eo)), one);
  EXPECT_EQ(one.size(), 657u);
  EXPECT_TRUE(std::is_sorted(one.begin(), one.end()));
}

TEST(Enumerate, CapExceeded) {
  EnumerationOptions eo;
  eo.n = 10;
  eo.cap = 100;
  EXPECT_THROW(enumerate_unicyclic(eo), CapExceeded);
}

TEST(Trees, Enumeration) {
  EXPECT_EQ(enumerate_trees(4).size(), 2u);
  EXPECT_EQ(enumerate_trees(6).size(), 6u);
  const auto stars = enumerate_trees(7, 6);
  ASSERT_EQ(stars.size(), 1u);
  EXPECT_EQ(stars[0].code, canonical_tree_code(make_t_n_delta(7, 6)));
  const std::vector<std::size_t> counts{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(enumerate_trees(n).size(), counts[n - 1]);
}

TEST(Extremal, TheoremSmallCases) {
  const auto r53 = verify_theorem(5, 3);
  EXPECT_EQ(r53.mode, "exhaustive");
  EXPECT_EQ(r53.graph_count, 3u);
  EXPECT_EQ(*r53.extremal_value, q(44, 3));
  EXPECT_EQ(r53.argext_codes, std::vector<CanonicalCode>{canonical_code(make_p3_extremal(5, 3))});
  EXPECT_EQ(r53.verdict, Verdict::Match);
  const auto r43 = verify_theorem(4, 3);
  EXPECT_EQ(r43.graph_count, 1u);
  EXPECT_EQ(*r43.extremal_value, q(19, 3));
  EXPECT_EQ(r43.verdict, Verdict::Match);
}

TEST(Extremal, TheoremFormulaOnlyWhenTooLarge) {
  const auto r = verify_theorem(100, 96);
  EXPECT_EQ(r.mode, "formula-only");
  EXPECT_EQ(*r.formula_value, q(30925, 3));
  EXPECT_EQ(*r.extremal_value, q(30925, 3));
  EXPECT_EQ(r.verdict, Verdict::Match);
}

TEST(Extremal, ConjectureSmallCases) {
  const auto r53 = probe_conjecture(5, 3);
  EXPECT_EQ(r53.branch, "i");
  EXPECT_EQ(*r53.extremal_value, q(23, 2));
  EXPECT_EQ(r53.verdict, Verdict::Match);
  const auto r43 = probe_conjecture(4, 3);
  EXPECT_EQ(*r43.extremal_value, q(19, 3));
  EXPECT_EQ(*r43.formula_value, q(19, 3));
}

TEST(Extremal, ConjectureMismatchCarriesWitness) {
  const auto r = probe_conjecture(10, 3);
  EXPECT_EQ(r.verdict, Verdict::Mismatch);
  EXPECT_EQ(*r.extremal_value, q(655, 8));
  ASSERT_FALSE(r.argext_codes.empty());
  bool witness = false;
  for (const auto& note : r.notes) witness = witness || note == "witness " + r.argext_codes.front().str();
  EXPECT_TRUE(witness);
}

TEST(Extremal, MaxWithCycleFilterUsesGraphA) {
  SearchOptions so;
  so.enumeration.n = 8;
  so.enumeration.delta = 3;
  so.enumeration.only_cycle_length(4);
  const auto r = search_extremal(so).report;
  EXPECT_EQ(r.formula_name, "kf-a");
  EXPECT_EQ(*r.extremal_value, q(65));
  EXPECT_EQ(r.verdict, Verdict::Match);
}

TEST(Extremal, DeterministicReports) {
  const auto a = dump_json(to_json(verify_theorem(9, 4, RunLimits{kDefaultCap, 1})));
  const auto b = dump_json(to_json(verify_theorem(9, 4, RunLimits{kDefaultCap, 3})));
  EXPECT_EQ(a, b);
}

TEST(Lemmas, SmallSweepPasses) {
  LemmaOptions opt;
  opt.n_max = 7;
  opt.tree_n_max = 9;
  const auto report = check_lemma_properties(opt);
  EXPECT_TRUE(report.passed());
  for (const auto& r : report.results) {
    EXPECT_GT(r.instances, 0u) << r.name;
    if (r.asserted) EXPECT_EQ(r.violations, 0u) << r.name << ": " << r.first_violation;
  }
}

TEST(Random, GraphsAreUnicyclic) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const Graph g = random_unicyclic_graph(9 + i % 4, rng);
    EXPECT_TRUE(g.is_unicyclic());
  }
}

}  // namespace
}  // namespace kfx
