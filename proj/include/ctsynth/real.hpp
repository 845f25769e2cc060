// Copyright 2026 The ctsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace ctsynth {

/// Arbitrary-precision real backed by an MPFR value.
///
/// Every value carries its own precision. Binary operations round to the
/// larger of the two operand precisions, so a computation started at a given
/// precision stays there without any global state.
class Real {
 public:
  static constexpr long kDefaultPrecision = 128;

  Real() : Real(kDefaultPrecision) {}
  explicit Real(long precision_bits);
  Real(long value, long precision_bits);
  Real(const mpz_class& value, long precision_bits);
  Real(double value, long precision_bits);

  /// Parses a decimal string ("1e-10", "-0.25", "3"). Throws
  /// std::invalid_argument on malformed input.
  static Real parse(std::string_view text, long precision_bits);

  static Real pi(long precision_bits);
  static Real sqrt2(long precision_bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }
  /// Returns a copy rounded to the given precision.
  Real with_precision(long precision_bits) const;

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Decimal rendering with the given number of significant digits.
  std::string to_string(int significant_digits) const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator-(const Real& a);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

  /// Multiplies by 2^exponent exactly.
  Real ldexp(long exponent) const;

  mpfr_srcptr raw() const { return value_; }
  mpfr_ptr raw() { return value_; }

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan2(const Real& y, const Real& x);
Real log2(const Real& x);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

mpz_class floor_to_integer(const Real& x);
mpz_class ceil_to_integer(const Real& x);
mpz_class round_to_integer(const Real& x);

std::ostream& operator<<(std::ostream& os, const Real& x);

/// Complex number with Real parts, enough for 2x2 unitary arithmetic.
struct Complex {
  Real re;
  Real im;

  Complex conj() const { return {re, -im}; }
  Real norm_sq() const { return re * re + im * im; }
  Real abs() const;
  /// Principal argument in (-pi, pi]; arg(0) = 0.
  Real arg() const;

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Real& s, const Complex& a) { return {s * a.re, s * a.im}; }

  static Complex polar(const Real& modulus, const Real& angle);
};

}  // namespace ctsynth
