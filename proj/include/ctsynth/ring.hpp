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

// Exact arithmetic in O = Z[sqrt2], in Z[sqrt2][i] and Z[omega]
// (omega = e^{i pi/4}), and exact single-qubit unitaries with entries in
// those rings.

#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <ostream>
#include <string>

#include "ctsynth/real.hpp"
#include "ctsynth/su2.hpp"

namespace ctsynth {

enum class GaloisEmbedding { kPlus, kMinus };

/// a + b sqrt2 with arbitrary-precision integer coefficients.
class ZRoot2 {
 public:
  ZRoot2() = default;
  ZRoot2(long a) : a_(a) {}  // NOLINT(google-explicit-constructor): integers embed in O
  ZRoot2(long a, long b) : a_(a), b_(b) {}
  ZRoot2(mpz_class a, mpz_class b) : a_(std::move(a)), b_(std::move(b)) {}

  static ZRoot2 sqrt2() { return {0, 1}; }
  /// The fundamental unit 1 + sqrt2.
  static ZRoot2 lambda() { return {1, 1}; }
  static ZRoot2 lambda_inverse() { return {-1, 1}; }
  /// sqrt2^n for n >= 0.
  static ZRoot2 sqrt2_power(int n);

  const mpz_class& a() const { return a_; }
  const mpz_class& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }

  ZRoot2& operator+=(const ZRoot2& y);
  ZRoot2& operator-=(const ZRoot2& y);
  ZRoot2& operator*=(const ZRoot2& y);

  friend ZRoot2 operator+(ZRoot2 x, const ZRoot2& y) { return x += y; }
  friend ZRoot2 operator-(ZRoot2 x, const ZRoot2& y) { return x -= y; }
  friend ZRoot2 operator*(ZRoot2 x, const ZRoot2& y) { return x *= y; }
  friend ZRoot2 operator-(const ZRoot2& x) { return {-x.a_, -x.b_}; }
  friend bool operator==(const ZRoot2& x, const ZRoot2& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  ZRoot2 pow(unsigned n) const;

  /// Exact sign of the image under the given embedding.
  int sign(GaloisEmbedding e = GaloisEmbedding::kPlus) const;
  bool is_totally_nonnegative() const {
    return sign(GaloisEmbedding::kPlus) >= 0 && sign(GaloisEmbedding::kMinus) >= 0;
  }
  /// Exact comparison of the sigma_+ images.
  friend int compare(const ZRoot2& x, const ZRoot2& y) { return (x - y).sign(); }

  /// Quotient x / y when it lies in O; nullopt otherwise (or when y = 0).
  std::optional<ZRoot2> divide_exact(const ZRoot2& y) const;
  /// Euclidean quotient: x / y rounded coefficient-wise to the nearest element of O.
  ZRoot2 divide_rounded(const ZRoot2& y) const;

  std::string to_string() const;

 private:
  mpz_class a_ = 0;
  mpz_class b_ = 0;
};

std::ostream& operator<<(std::ostream& os, const ZRoot2& x);

/// sigma_-: sqrt2 -> -sqrt2.
ZRoot2 galois(const ZRoot2& x);
/// N(x) = a^2 - 2 b^2 = x * galois(x).
mpz_class field_norm(const ZRoot2& x);
/// Real image of x under the embedding, with relative error below
/// 2^-precision_bits (no cancellation: opposite-sign cases go through the norm).
Real embed(const ZRoot2& x, GaloisEmbedding e, long precision_bits);
/// y with y * sqrt2 = x, present iff the rational part of x is even.
std::optional<ZRoot2> divide_by_sqrt2(const ZRoot2& x);
/// Largest v with sqrt2^v dividing x; x must be non-zero.
int sqrt2_valuation(const ZRoot2& x);
ZRoot2 gcd(ZRoot2 x, ZRoot2 y);

/// re + im * i in Z[sqrt2][i].
struct ZRoot2Complex {
  ZRoot2 re;
  ZRoot2 im;

  ZRoot2Complex conj() const { return {re, -im}; }
  /// |z|^2 = re^2 + im^2, always totally non-negative.
  ZRoot2 norm_sq() const { return re * re + im * im; }
  friend ZRoot2Complex operator*(const ZRoot2Complex& x, const ZRoot2Complex& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend bool operator==(const ZRoot2Complex&, const ZRoot2Complex&) = default;
};

/// a + b omega + c omega^2 + d omega^3 in Z[omega], omega = e^{i pi/4}.
class ZOmega {
 public:
  ZOmega() = default;
  ZOmega(mpz_class a, mpz_class b, mpz_class c, mpz_class d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}
  static ZOmega from_real(const ZRoot2& x);
  static ZOmega from_complex(const ZRoot2Complex& z);
  static ZOmega omega() { return {0, 1, 0, 0}; }
  static ZOmega i() { return {0, 0, 1, 0}; }

  const mpz_class& a() const { return a_; }
  const mpz_class& b() const { return b_; }
  const mpz_class& c() const { return c_; }
  const mpz_class& d() const { return d_; }
  bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }

  friend ZOmega operator+(const ZOmega& x, const ZOmega& y);
  friend ZOmega operator-(const ZOmega& x, const ZOmega& y);
  friend ZOmega operator*(const ZOmega& x, const ZOmega& y);
  friend bool operator==(const ZOmega& x, const ZOmega& y) = default;

  /// Complex conjugate (omega -> omega^7).
  ZOmega conj() const { return {a_, -d_, -c_, -b_}; }
  /// The automorphism omega -> -omega, which sends sqrt2 to -sqrt2 and fixes i.
  ZOmega galois() const { return {a_, -b_, c_, -d_}; }
  ZOmega times_omega() const { return {-d_, a_, b_, c_}; }
  /// z * conj(z), an element of O.
  ZRoot2 norm_sq() const;
  /// |N_{Q(omega)/Q}(z)| = N(z conj(z)), a non-negative integer.
  mpz_class absolute_norm() const;
  /// The Z[sqrt2][i] coordinates when b = d (mod 2).
  std::optional<ZRoot2Complex> to_complex() const;

  /// Euclidean division with coefficient-wise rounding.
  ZOmega divide_rounded(const ZOmega& y) const;
  std::optional<ZOmega> divide_exact(const ZOmega& y) const;

  std::string to_string() const;

 private:
  mpz_class a_ = 0;
  mpz_class b_ = 0;
  mpz_class c_ = 0;
  mpz_class d_ = 0;
};

ZOmega gcd(ZOmega x, ZOmega y);

/// Exact element of PU(2) of the form
///   (1/sqrt2^k) [[x0 + x1 i, x2 + x3 i], [-x2 + x3 i, x0 - x1 i]]
/// with x0^2 + x1^2 + x2^2 + x3^2 = 2^k. Stored reduced: for k > 0 not all
/// four coordinates are divisible by sqrt2.
struct ExactUnitary {
  std::array<ZRoot2, 4> x;
  int k = 0;

  static ExactUnitary identity() { return {{ZRoot2(1), ZRoot2(0), ZRoot2(0), ZRoot2(0)}, 0}; }
  bool is_reduced() const;

  ZRoot2Complex alpha() const { return {x[0], x[1]}; }
  ZRoot2Complex beta() const { return {x[2], x[3]}; }

  /// Equality in PU(2): same reduced form up to an overall sign.
  bool same_element(const ExactUnitary& other) const;
  friend bool operator==(const ExactUnitary&, const ExactUnitary&) = default;
};

/// Validates the determinant identity and returns the reduced representative.
/// Throws std::invalid_argument when x0^2 + x1^2 + x2^2 + x3^2 != 2^k or k < 0.
ExactUnitary make_exact_unitary(const ZRoot2& x0, const ZRoot2& x1, const ZRoot2& x2, const ZRoot2& x3, int k);

/// Entrywise sigma_+ image divided by sqrt2^k.
UnitaryTarget to_numeric(const ExactUnitary& u, long precision_bits);

}  // namespace ctsynth
