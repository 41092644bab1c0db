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
#include <string>
#include <vector>

#include "kfx/report.hpp"
#include "kfx/search.hpp"

namespace kfx {

// Outcome of one batch check run from the CLI's verify command.
struct SuiteResult {
  std::string name;
  bool passed = true;
  std::uint64_t checks = 0;
  std::vector<std::string> failures;  // first few only
  Json details = Json::object();

  void fail(std::string what);
};

// Theorem sweep over 4 <= n <= n_max, 3 <= delta <= n-1.
SuiteResult run_theorem_suite(int n_max, const RunLimits& limits);

// Structural vs oracle resistance on every pair, and the decomposition
// formula vs the pairwise sum: exhaustive up to n_exhaustive, plus
// `random_count` seeded random graphs with 9 <= n <= 12.
SuiteResult run_engine_suite(int n_exhaustive, int random_count, std::uint64_t seed, const RunLimits& limits);

// Closed forms against generated graphs on l <= 8, delta <= 6, n <= 14.
SuiteResult run_formula_suite();

// Class counts for 3 <= n <= n_max against the unlabeled unicyclic sequence.
SuiteResult run_count_suite(int n_max, const RunLimits& limits);

SuiteResult run_lemma_suite(int n_max, const RunLimits& limits);

Json to_json(const SuiteResult& suite);

}  // namespace kfx
