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

#include "kfx/bareiss.hpp"

#include <utility>

#include "kfx/errors.hpp"

namespace kfx {

BigInt bareiss_determinant(IntMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw InvalidParameter("determinant of a non-square matrix");
  }
  if (n == 0) return 1;

  BigInt prev_pivot = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Exact: Sylvester's identity guarantees divisibility.
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev_pivot.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev_pivot = m[k][k];
  }
  BigInt det = m[n - 1][n - 1];
  if (sign < 0) det = -det;
  return det;
}

}  // namespace kfx
