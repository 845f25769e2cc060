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

#include "ctsynth/real.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <vector>

namespace ctsynth {
namespace {

long joint_precision(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

long checked_precision(long bits) {
  if (bits < MPFR_PREC_MIN || bits > 1L << 24) {
    throw std::invalid_argument("precision out of range: " + std::to_string(bits));
  }
  return bits;
}

}  // namespace

Real::Real(long precision_bits) {
  mpfr_init2(value_, checked_precision(precision_bits));
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, long precision_bits) : Real(precision_bits) { mpfr_set_si(value_, value, MPFR_RNDN); }

Real::Real(const mpz_class& value, long precision_bits) : Real(precision_bits) {
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(double value, long precision_bits) : Real(precision_bits) { mpfr_set_d(value_, value, MPFR_RNDN); }

Real Real::parse(std::string_view text, long precision_bits) {
  Real r(precision_bits);
  std::string s(text);
  // mpfr_strtofr accepts leading whitespace and partial input; reject both.
  if (s.empty() || std::isspace(static_cast<unsigned char>(s.front()))) {
    throw std::invalid_argument("malformed number: '" + s + "'");
  }
  char* end = nullptr;
  mpfr_strtofr(r.value_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end == s.c_str() || *end != '\0' || !mpfr_number_p(r.value_)) {
    throw std::invalid_argument("malformed number: '" + s + "'");
  }
  return r;
}

Real Real::pi(long precision_bits) {
  Real r(precision_bits);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

Real Real::sqrt2(long precision_bits) {
  Real r(precision_bits);
  mpfr_sqrt_ui(r.value_, 2, MPFR_RNDN);
  return r;
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::with_precision(long precision_bits) const {
  Real r(precision_bits);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

std::string Real::to_string(int significant_digits) const {
  if (mpfr_zero_p(value_)) return "0";
  std::vector<char> buf(static_cast<size_t>(significant_digits) + 64);
  std::string fmt = "%." + std::to_string(significant_digits) + "Rg";
  int n = mpfr_snprintf(buf.data(), buf.size(), fmt.c_str(), value_);
  if (n >= static_cast<int>(buf.size())) {
    buf.resize(static_cast<size_t>(n) + 1);
    mpfr_snprintf(buf.data(), buf.size(), fmt.c_str(), value_);
  }
  return std::string(buf.data());
}

Real& Real::operator+=(const Real& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real operator+(const Real& a, const Real& b) {
  Real r(joint_precision(a, b));
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(joint_precision(a, b));
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(joint_precision(a, b));
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(joint_precision(a, b));
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a) {
  Real r(a.precision());
  mpfr_neg(r.value_, a.value_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

Real Real::ldexp(long exponent) const {
  Real r(precision());
  mpfr_mul_2si(r.value_, value_, exponent, MPFR_RNDN);
  return r;
}

Real abs(const Real& x) {
  Real r(x.precision());
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  Real r(x.precision());
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real sin(const Real& x) {
  Real r(x.precision());
  mpfr_sin(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real cos(const Real& x) {
  Real r(x.precision());
  mpfr_cos(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real atan2(const Real& y, const Real& x) {
  Real r(std::max(x.precision(), y.precision()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real log2(const Real& x) {
  Real r(x.precision());
  mpfr_log2(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

mpz_class floor_to_integer(const Real& x) {
  if (!mpfr_number_p(x.raw())) throw std::domain_error("floor of non-finite value");
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), x.raw(), MPFR_RNDD);
  return z;
}

mpz_class ceil_to_integer(const Real& x) {
  if (!mpfr_number_p(x.raw())) throw std::domain_error("ceil of non-finite value");
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), x.raw(), MPFR_RNDU);
  return z;
}

mpz_class round_to_integer(const Real& x) {
  if (!mpfr_number_p(x.raw())) throw std::domain_error("round of non-finite value");
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), x.raw(), MPFR_RNDN);
  return z;
}

std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.to_string(17); }

Real Complex::abs() const { return sqrt(norm_sq()); }

Real Complex::arg() const {
  if (re.is_zero() && im.is_zero()) return Real(re.precision());
  return atan2(im, re);
}

Complex Complex::polar(const Real& modulus, const Real& angle) {
  return {modulus * cos(angle), modulus * sin(angle)};
}

}  // namespace ctsynth
