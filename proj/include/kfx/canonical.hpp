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

#include <compare>
#include <span>
#include <string>
#include <string_view>

#include "kfx/graph.hpp"
#include "kfx/unicyclic.hpp"

namespace kfx {

// Isomorphism-invariant byte string for a unicyclic graph ("U...") or a
// tree ("T..."). Equal codes iff isomorphic within those two classes; the
// byte-wise order is the deterministic sort order used by reports.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& str() const noexcept { return bytes_; }
  bool empty() const noexcept { return bytes_.empty(); }

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

 private:
  std::string bytes_;
};

// AHU encoding: a node is "(" + sorted child encodings + ")".
std::string rooted_tree_code(const RootedTree& tree);

// Smallest concatenation of hanging-tree codes over the 2l dihedral
// images of the cycle.
CanonicalCode canonical_code(const UnicyclicRepr& u);
// Same, from already computed AHU codes listed in cycle order.
CanonicalCode canonical_code_from_tree_codes(std::span<const std::string_view> codes);

// Unrooted tree code: rooted at the centre, or the smaller of the two
// rootings for a bicentral tree.
CanonicalCode canonical_tree_code(const Graph& tree);

// Dispatches on edge count: unicyclic graphs and trees only.
CanonicalCode canonical_code(const Graph& g);

}  // namespace kfx
