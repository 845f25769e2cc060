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

#include "ctsynth/ring.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace ctsynth {
namespace {

/// Nearest integer to p / q (ties away from zero is fine for Euclid).
mpz_class round_div(const mpz_class& p, const mpz_class& q) {
  mpz_class num = 2 * p + q;
  mpz_class den = 2 * q;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

std::optional<mpz_class> exact_div(const mpz_class& p, const mpz_class& q) {
  if (!mpz_divisible_p(p.get_mpz_t(), q.get_mpz_t())) return std::nullopt;
  mpz_class r;
  mpz_divexact(r.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  return r;
}

int sgn(const mpz_class& v) { return mpz_sgn(v.get_mpz_t()); }

}  // namespace

// ---------------------------------------------------------------- ZRoot2

ZRoot2 ZRoot2::sqrt2_power(int n) {
  if (n < 0) throw std::invalid_argument("negative power of sqrt2");
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(n / 2));
  return n % 2 == 0 ? ZRoot2(p, 0) : ZRoot2(0, p);
}

ZRoot2& ZRoot2::operator+=(const ZRoot2& y) {
  a_ += y.a_;
  b_ += y.b_;
  return *this;
}

ZRoot2& ZRoot2::operator-=(const ZRoot2& y) {
  a_ -= y.a_;
  b_ -= y.b_;
  return *this;
}

ZRoot2& ZRoot2::operator*=(const ZRoot2& y) {
  mpz_class a = a_ * y.a_ + 2 * b_ * y.b_;
  mpz_class b = a_ * y.b_ + b_ * y.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

ZRoot2 ZRoot2::pow(unsigned n) const {
  ZRoot2 result(1);
  ZRoot2 base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

int ZRoot2::sign(GaloisEmbedding e) const {
  const mpz_class& a = a_;
  mpz_class b = e == GaloisEmbedding::kPlus ? b_ : mpz_class(-b_);
  int sa = sgn(a);
  int sb = sgn(b);
  if (sa >= 0 && sb >= 0) return (sa > 0 || sb > 0) ? 1 : 0;
  if (sa <= 0 && sb <= 0) return -1;
  // Opposite signs: compare a^2 with 2 b^2.
  int s = sgn(mpz_class(a * a - 2 * b * b));
  return sa > 0 ? s : -s;
}

std::optional<ZRoot2> ZRoot2::divide_exact(const ZRoot2& y) const {
  mpz_class n = field_norm(y);
  if (n == 0) return std::nullopt;
  ZRoot2 num = *this * galois(y);
  auto a = exact_div(num.a_, n);
  auto b = exact_div(num.b_, n);
  if (!a || !b) return std::nullopt;
  return ZRoot2(*a, *b);
}

ZRoot2 ZRoot2::divide_rounded(const ZRoot2& y) const {
  mpz_class n = field_norm(y);
  if (n == 0) throw std::domain_error("division by zero in Z[sqrt2]");
  ZRoot2 num = *this * galois(y);
  return {round_div(num.a_, n), round_div(num.b_, n)};
}

std::string ZRoot2::to_string() const {
  std::ostringstream os;
  os << a_.get_str() << (b_ < 0 ? "-" : "+") << mpz_class(abs(b_)).get_str() << "√2";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ZRoot2& x) { return os << x.to_string(); }

ZRoot2 galois(const ZRoot2& x) { return {x.a(), -x.b()}; }

mpz_class field_norm(const ZRoot2& x) { return x.a() * x.a() - 2 * x.b() * x.b(); }

Real embed(const ZRoot2& x, GaloisEmbedding e, long precision_bits) {
  long work = precision_bits + 16;
  mpz_class b = e == GaloisEmbedding::kPlus ? x.b() : mpz_class(-x.b());
  Real r2 = Real::sqrt2(work);
  if (sgn(x.a()) * sgn(b) >= 0) {
    return (Real(x.a(), work) + Real(b, work) * r2).with_precision(precision_bits);
  }
  // a + b sqrt2 = (a^2 - 2b^2) / (a - b sqrt2); the denominator has no cancellation.
  Real num(mpz_class(x.a() * x.a() - 2 * b * b), work);
  Real den = Real(x.a(), work) - Real(b, work) * r2;
  return (num / den).with_precision(precision_bits);
}

std::optional<ZRoot2> divide_by_sqrt2(const ZRoot2& x) {
  // (a + b sqrt2) / sqrt2 = b + (a/2) sqrt2
  if (!mpz_even_p(x.a().get_mpz_t())) return std::nullopt;
  mpz_class half = x.a() / 2;
  return ZRoot2(x.b(), half);
}

int sqrt2_valuation(const ZRoot2& x) {
  if (x.is_zero()) throw std::invalid_argument("valuation of zero");
  int v = 0;
  ZRoot2 y = x;
  while (auto q = divide_by_sqrt2(y)) {
    y = *q;
    ++v;
  }
  return v;
}

ZRoot2 gcd(ZRoot2 x, ZRoot2 y) {
  while (!y.is_zero()) {
    ZRoot2 r = x - x.divide_rounded(y) * y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

// ---------------------------------------------------------------- ZOmega

ZOmega ZOmega::from_real(const ZRoot2& x) { return {x.a(), x.b(), 0, -x.b()}; }

ZOmega ZOmega::from_complex(const ZRoot2Complex& z) {
  // sqrt2 = omega - omega^3, i = omega^2, sqrt2 i = omega + omega^3.
  return {z.re.a(), z.re.b() + z.im.b(), z.im.a(), z.im.b() - z.re.b()};
}

ZOmega operator+(const ZOmega& x, const ZOmega& y) { return {x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.d_ + y.d_}; }

ZOmega operator-(const ZOmega& x, const ZOmega& y) { return {x.a_ - y.a_, x.b_ - y.b_, x.c_ - y.c_, x.d_ - y.d_}; }

ZOmega operator*(const ZOmega& x, const ZOmega& y) {
  // omega^4 = -1
  return {x.a_ * y.a_ - x.b_ * y.d_ - x.c_ * y.c_ - x.d_ * y.b_,
          x.a_ * y.b_ + x.b_ * y.a_ - x.c_ * y.d_ - x.d_ * y.c_,
          x.a_ * y.c_ + x.b_ * y.b_ + x.c_ * y.a_ - x.d_ * y.d_,
          x.a_ * y.d_ + x.b_ * y.c_ + x.c_ * y.b_ + x.d_ * y.a_};
}

ZRoot2 ZOmega::norm_sq() const {
  return {a_ * a_ + b_ * b_ + c_ * c_ + d_ * d_, a_ * b_ + b_ * c_ + c_ * d_ - d_ * a_};
}

mpz_class ZOmega::absolute_norm() const { return abs(field_norm(norm_sq())); }

std::optional<ZRoot2Complex> ZOmega::to_complex() const {
  mpz_class diff = b_ - d_;
  if (!mpz_even_p(diff.get_mpz_t())) return std::nullopt;
  mpz_class sum = b_ + d_;
  return ZRoot2Complex{ZRoot2(a_, diff / 2), ZRoot2(c_, sum / 2)};
}

ZOmega ZOmega::divide_rounded(const ZOmega& y) const {
  ZRoot2 yy = y.norm_sq();
  mpz_class n = field_norm(yy);
  if (n == 0) throw std::domain_error("division by zero in Z[omega]");
  ZOmega num = *this * y.conj() * from_real(ctsynth::galois(yy));
  return {round_div(num.a_, n), round_div(num.b_, n), round_div(num.c_, n), round_div(num.d_, n)};
}

std::optional<ZOmega> ZOmega::divide_exact(const ZOmega& y) const {
  ZRoot2 yy = y.norm_sq();
  mpz_class n = field_norm(yy);
  if (n == 0) return std::nullopt;
  ZOmega num = *this * y.conj() * from_real(ctsynth::galois(yy));
  auto a = exact_div(num.a_, n);
  auto b = exact_div(num.b_, n);
  auto c = exact_div(num.c_, n);
  auto d = exact_div(num.d_, n);
  if (!a || !b || !c || !d) return std::nullopt;
  return ZOmega(*a, *b, *c, *d);
}

std::string ZOmega::to_string() const {
  std::ostringstream os;
  os << "(" << a_.get_str() << ", " << b_.get_str() << ", " << c_.get_str() << ", " << d_.get_str() << ")";
  return os.str();
}

ZOmega gcd(ZOmega x, ZOmega y) {
  while (!y.is_zero()) {
    ZOmega r = x - x.divide_rounded(y) * y;
    if (r.absolute_norm() >= y.absolute_norm()) {
      throw std::logic_error("Euclidean step failed to decrease the norm in Z[omega]");
    }
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

// ---------------------------------------------------------------- ExactUnitary

bool ExactUnitary::is_reduced() const {
  if (k == 0) return true;
  for (const auto& xi : x) {
    if (!divide_by_sqrt2(xi)) return true;
  }
  return false;
}

bool ExactUnitary::same_element(const ExactUnitary& other) const {
  if (k != other.k) return false;
  if (x == other.x) return true;
  for (size_t i = 0; i < 4; ++i) {
    if (!(x[i] == -other.x[i])) return false;
  }
  return true;
}

ExactUnitary make_exact_unitary(const ZRoot2& x0, const ZRoot2& x1, const ZRoot2& x2, const ZRoot2& x3, int k) {
  if (k < 0) throw std::invalid_argument("denominator exponent must be non-negative");
  ZRoot2 sum = x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3;
  mpz_class two_k;
  mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(k));
  if (!(sum == ZRoot2(two_k, 0))) {
    throw std::invalid_argument("x0^2 + x1^2 + x2^2 + x3^2 = " + sum.to_string() + " is not 2^" + std::to_string(k));
  }
  ExactUnitary u{{x0, x1, x2, x3}, k};
  while (u.k > 0) {
    std::array<ZRoot2, 4> halved;
    bool divisible = true;
    for (size_t i = 0; i < 4 && divisible; ++i) {
      auto q = divide_by_sqrt2(u.x[i]);
      if (q) {
        halved[i] = *q;
      } else {
        divisible = false;
      }
    }
    if (!divisible) break;
    u.x = halved;
    --u.k;
  }
  return u;
}

UnitaryTarget to_numeric(const ExactUnitary& u, long precision_bits) {
  long work = precision_bits + 8;
  Real scale = Real(1L, work).ldexp(-(u.k / 2));
  if (u.k % 2 != 0) scale /= Real::sqrt2(work);
  auto e = [&](int i) { return (embed(u.x[i], GaloisEmbedding::kPlus, work) * scale).with_precision(precision_bits); };
  return UnitaryTarget{Complex{e(0), e(1)}, Complex{e(2), e(3)}, precision_bits};
}

}  // namespace ctsynth
