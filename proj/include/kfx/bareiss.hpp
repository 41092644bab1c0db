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

#include <vector>

#include "kfx/rational.hpp"

namespace kfx {

using IntMatrix = std::vector<std::vector<BigInt>>;

// Determinant of a square integer matrix by fraction-free (Bareiss)
// elimination; every intermediate is an exact minor, so no rationals appear.
// The empty matrix has determinant 1.
BigInt bareiss_determinant(IntMatrix m);

}  // namespace kfx
