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

#include "kfx/rational.hpp"

#include <stdexcept>

namespace kfx {

BigRational::BigRational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return BigRational(BigInt(std::string(text), 10));
    return BigRational(BigInt(std::string(text.substr(0, slash)), 10),
                       BigInt(std::string(text.substr(slash + 1)), 10));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: " + std::string(text));
  }
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.sign() == 0) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

BigRational BigRational::operator-() const {
  BigRational out;
  out.value_ = -value_;
  return out;
}

std::string BigRational::to_fraction() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string BigRational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return to_fraction();
}

std::string BigRational::to_mixed() const {
  if (is_integer()) return value_.get_num().get_str();
  const BigInt num = abs(value_.get_num());
  const BigInt& den = value_.get_den();
  BigInt whole;
  BigInt rem;
  mpz_tdiv_qr(whole.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  std::string out = sign() < 0 ? "-" : "";
  if (whole != 0) out += whole.get_str() + " ";
  return out + rem.get_str() + "/" + den.get_str();
}

std::string BigRational::to_decimal(int digits) const {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const BigInt num = abs(value_.get_num()) * scale;
  const BigInt& den = value_.get_den();
  BigInt q;
  BigInt r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  const int half = cmp(BigInt(2 * r), den);
  if (half > 0 || (half == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;

  std::string body = q.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  return (sign() < 0 && q != 0 ? "-" : "") + body;
}

std::ostream& operator<<(std::ostream& os, const BigRational& value) {
  return os << value.to_string();
}

}  // namespace kfx
