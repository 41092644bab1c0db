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

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace kfx {

using BigInt = mpz_class;

// Exact rational in lowest terms with a positive denominator. Thin value
// wrapper over GMP's mpq_class; every Kirchhoff-type quantity lives here.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& value) : value_(value) {}  // NOLINT
  BigRational(const BigInt& numerator, const BigInt& denominator);

  // Accepts "p", "p/q" or "-p/q"; the result is canonicalized.
  static BigRational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }

  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }
  BigRational operator-() const;

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  // Always "p/q", including "2/1" and "0/1". Machine formats use this.
  std::string to_fraction() const;
  // "p" for integers, "p/q" otherwise.
  std::string to_string() const;
  // Mixed-number form: "10308 1/3", "-2 1/2", "7".
  std::string to_mixed() const;
  // Decimal with exactly `digits` fractional digits, rounded half to even.
  std::string to_decimal(int digits) const;

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& value);

}  // namespace kfx
