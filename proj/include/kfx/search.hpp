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

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "kfx/canonical.hpp"
#include "kfx/rational.hpp"
#include "kfx/unicyclic.hpp"

namespace kfx {

inline constexpr std::uint64_t kDefaultCap = 5'000'000;

enum class DegreeMode { Exact, AtMost };
enum class Objective { Max, Min };
enum class Verdict { Match, Mismatch, NotApplicable };

const char* degree_mode_name(DegreeMode m);
const char* objective_name(Objective o);
const char* verdict_name(Verdict v);

struct EnumerationOptions {
  int n = 0;
  std::optional<int> delta;  // no filter when empty
  DegreeMode degree_mode = DegreeMode::Exact;
  int min_cycle_length = 3;
  std::optional<int> max_cycle_length;  // defaults to n
  std::uint64_t cap = kDefaultCap;
  int workers = 1;

  // Restricts the cycle length to exactly l.
  EnumerationOptions& only_cycle_length(int l) {
    min_cycle_length = l;
    max_cycle_length = l;
    return *this;
  }
};

struct EnumeratedGraph {
  CanonicalCode code;
  UnicyclicRepr repr;
};

struct TreeClass {
  CanonicalCode code;
  Graph tree;
};

// All rooted trees on `size` nodes, one per isomorphism class, from the
// constant-amortized level-sequence successor rule. Trees come out in
// preorder, which is exactly the RootedTree layout.
std::vector<RootedTree> rooted_trees(int size);

// Number of rooted trees on 1..max_size nodes (index 0 unused).
std::vector<BigInt> rooted_tree_counts(int max_size);

// Lower bound on the number of classes the unfiltered enumeration at n
// visits: (rooted-tree l-tuples summed over l) / (2n).
BigInt estimated_unicyclic_classes(int n);

// One representative per isomorphism class of connected unicyclic graphs,
// sorted by canonical code. Throws CapExceeded when the class count (or its
// estimate) exceeds options.cap.
std::vector<EnumeratedGraph> enumerate_unicyclic(const EnumerationOptions& options);

// One representative per isomorphism class of trees on n vertices.
std::vector<TreeClass> enumerate_trees(int n, std::optional<int> delta = std::nullopt,
                                       DegreeMode mode = DegreeMode::Exact);

struct ClassRecord {
  CanonicalCode code;
  int cycle_length = 0;
  int max_degree = 0;
  BigRational kf;
};

struct ExtremalReport {
  int n = 0;
  int delta = 0;
  std::optional<int> l_filter;
  Objective objective = Objective::Max;
  DegreeMode degree_mode = DegreeMode::Exact;
  std::string mode = "exhaustive";  // or "formula-only"
  std::uint64_t graph_count = 0;
  std::optional<BigRational> extremal_value;
  std::vector<CanonicalCode> argext_codes;
  std::string formula_name;
  std::optional<BigRational> formula_value;
  std::optional<CanonicalCode> expected_code;  // the graph the formula describes
  std::string branch;                          // conjecture branch, "i" or "ii"
  std::optional<int> formula_x;
  Verdict verdict = Verdict::NotApplicable;
  std::vector<std::string> notes;
};

struct SearchOptions {
  EnumerationOptions enumeration;
  Objective objective = Objective::Max;
  bool collect_all = false;
};

struct SearchResult {
  ExtremalReport report;
  std::vector<ClassRecord> records;  // filled when collect_all, sorted by code
};

// Exact extremum of Kf over the enumerated classes. The work is split into
// units by (l, tree-size composition up to cycle symmetry); units reduce
// locally and merge in a fixed order, so output is independent of workers.
// The report compares against the applicable closed form when one exists.
SearchResult search_extremal(const SearchOptions& options);

struct RunLimits {
  std::uint64_t cap = kDefaultCap;
  int workers = 1;
};

// Maximum Kf over unicyclic graphs with n vertices and maximum degree exactly
// delta against theorem_bound and the P3 extremal graph. Falls back to a
// formula-only report when enumeration would exceed the cap.
ExtremalReport verify_theorem(int n, int delta, const RunLimits& limits = {});

// Brute-force minimum against the conjectured branch formula.
ExtremalReport probe_conjecture(int n, int delta, const RunLimits& limits = {});

struct LemmaResult {
  std::string name;
  std::string statement;
  bool asserted = true;  // informational checks never fail the report
  std::uint64_t instances = 0;
  std::uint64_t violations = 0;
  std::string first_violation;

  bool passed() const { return violations == 0; }
};

struct LemmaOptions {
  int n_max = 8;
  int tree_n_max = 11;
  RunLimits limits;
};

struct LemmaReport {
  LemmaOptions options;
  std::vector<LemmaResult> results;

  bool passed() const;
};

LemmaReport check_lemma_properties(const LemmaOptions& options = {});

// Random unicyclic graph on n vertices: uniform cycle length, random
// recursive attachment of the remaining vertices, random labels.
Graph random_unicyclic_graph(int n, std::mt19937_64& rng);

}  // namespace kfx
