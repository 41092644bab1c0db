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

#include <random>
#include <stdexcept>

#include "kfx/rational.hpp"

namespace kfx {
namespace {

BigInt random_big(std::mt19937_64& rng, int words) {
  BigInt v = 0;
  for (int i = 0; i < words; ++i) {
    v <<= 64;
    v += BigInt(std::to_string(rng()));
  }
  return rng() % 2 ? v : BigInt(-v);
}

BigRational random_rational(std::mt19937_64& rng) {
  BigInt den = random_big(rng, 4);
  if (den == 0) den = 1;
  return BigRational(random_big(rng, 4), den);
}

TEST(Rational, NormalizesOnConstruction) {
  const BigRational r(6, -4);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r.to_fraction(), "-3/2");
  EXPECT_EQ(BigRational(0, -7).to_fraction(), "0/1");
}

TEST(Rational, ZeroDenominatorThrows) {
  EXPECT_THROW(BigRational(1, 0), std::domain_error);
  BigRational one(1);
  EXPECT_THROW(one /= BigRational(0), std::domain_error);
}

TEST(Rational, Formatting) {
  EXPECT_EQ(BigRational(2).to_fraction(), "2/1");
  EXPECT_EQ(BigRational(2).to_string(), "2");
  EXPECT_EQ(BigRational(30925, 3).to_string(), "30925/3");
  EXPECT_EQ(BigRational(30925, 3).to_mixed(), "10308 1/3");
  EXPECT_EQ(BigRational(-7, 2).to_mixed(), "-3 1/2");
  EXPECT_EQ(BigRational(30925, 3).to_decimal(3), "10308.333");
  EXPECT_EQ(BigRational(2, 3).to_decimal(2), "0.67");
}

TEST(Rational, DecimalRoundsHalfToEven) {
  EXPECT_EQ(BigRational(1, 8).to_decimal(2), "0.12");
  EXPECT_EQ(BigRational(3, 8).to_decimal(2), "0.38");
  EXPECT_EQ(BigRational(5, 2).to_decimal(0), "2");
  EXPECT_EQ(BigRational(7, 2).to_decimal(0), "4");
  EXPECT_EQ(BigRational(-1, 8).to_decimal(2), "-0.12");
}

TEST(Rational, ParseRoundTrip) {
  EXPECT_EQ(BigRational::parse("30925/3"), BigRational(30925, 3));
  EXPECT_EQ(BigRational::parse("-4/6"), BigRational(-2, 3));
  EXPECT_EQ(BigRational::parse("12"), BigRational(12));
  EXPECT_THROW(BigRational::parse("1/0"), std::exception);
  EXPECT_THROW(BigRational::parse("x"), std::exception);
}

TEST(Rational, FieldAxiomsOnWideOperands) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const BigRational a = random_rational(rng);
    const BigRational b = random_rational(rng);
    const BigRational c = random_rational(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) - b, a);
    if (b.sign() != 0) EXPECT_EQ((a / b) * b, a);
    EXPECT_EQ(a - a, BigRational(0));
    EXPECT_EQ(BigRational::parse(a.to_fraction()), a);
    EXPECT_EQ(a < b, (b - a).sign() > 0);
  }
}

}  // namespace
}  // namespace kfx
