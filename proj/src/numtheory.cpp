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

#include "ctsynth/numtheory.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ctsynth {
namespace {

constexpr int kMillerRabinRounds = 64;
constexpr unsigned long kTrialLimit = 1000;

bool is_prime(const mpz_class& n) { return mpz_probab_prime_p(n.get_mpz_t(), kMillerRabinRounds) > 0; }

mpz_class powm(const mpz_class& b, const mpz_class& e, const mpz_class& m) {
  mpz_class r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

mpz_class mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

class Rng {
 public:
  explicit Rng(RandomSeed seed) : state_(gmp_randinit_default) { state_.seed(seed.value); }
  /// Uniform in [lo, hi).
  mpz_class range(const mpz_class& lo, const mpz_class& hi) { return lo + state_.get_z_range(hi - lo); }

 private:
  gmp_randclass state_;
};

struct Budget {
  std::optional<std::uint64_t> remaining;
  bool spend(std::uint64_t n) {
    if (!remaining) return true;
    if (*remaining < n) {
      *remaining = 0;
      return false;
    }
    *remaining -= n;
    return true;
  }
};

/// Non-trivial factor of a composite n (odd, not a perfect square), or
/// nullopt when the budget runs out.
std::optional<mpz_class> pollard_brent(const mpz_class& n, Rng& rng, Budget& budget) {
  constexpr long kBlock = 128;
  for (;;) {
    mpz_class y = rng.range(1, n);
    mpz_class c = rng.range(1, n);
    auto f = [&](const mpz_class& v) { return mod(v * v + c, n); };
    mpz_class g = 1, q = 1, x, ys;
    long r = 1;
    while (g == 1) {
      x = y;
      if (!budget.spend(static_cast<std::uint64_t>(r))) return std::nullopt;
      for (long i = 0; i < r; ++i) y = f(y);
      for (long k = 0; k < r && g == 1; k += kBlock) {
        ys = y;
        long steps = std::min(kBlock, r - k);
        if (!budget.spend(static_cast<std::uint64_t>(steps))) return std::nullopt;
        for (long i = 0; i < steps; ++i) {
          y = f(y);
          q = mod(q * abs(mpz_class(x - y)), n);
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      r *= 2;
    }
    if (g == n) {
      do {
        if (!budget.spend(1)) return std::nullopt;
        ys = f(ys);
        mpz_class diff = abs(mpz_class(x - ys));
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

bool split_into(const mpz_class& n, int multiplicity, std::map<mpz_class, int>& out, Rng& rng, Budget& budget) {
  if (n == 1) return true;
  if (is_prime(n)) {
    out[n] += multiplicity;
    return true;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return split_into(root, 2 * multiplicity, out, rng, budget);
  }
  auto d = pollard_brent(n, rng, budget);
  if (!d) return false;
  mpz_class other = n / *d;
  return split_into(*d, multiplicity, out, rng, budget) && split_into(other, multiplicity, out, rng, budget);
}

std::optional<IntegerFactorization> factor_with_budget(const mpz_class& n, RandomSeed seed, Budget budget) {
  if (n == 0) throw std::invalid_argument("cannot factor zero");
  IntegerFactorization result;
  result.sign = n < 0 ? -1 : 1;
  mpz_class rest = abs(n);
  std::map<mpz_class, int> found;
  for (unsigned long p = 2; p <= kTrialLimit && rest > 1; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      ++found[mpz_class(p)];
    }
  }
  Rng rng(seed);
  if (!split_into(rest, 1, found, rng, budget)) return std::nullopt;
  // Recursive splitting can produce the same prime along several branches.
  result.factors.assign(found.begin(), found.end());
  return result;
}

// Arithmetic in the residue field O / p for an inert rational prime p.
struct Fp2 {
  mpz_class a, b;
};

Fp2 fp2_mul(const Fp2& x, const Fp2& y, const mpz_class& p) {
  return {mod(x.a * y.a + 2 * x.b * y.b, p), mod(x.a * y.b + x.b * y.a, p)};
}

Fp2 fp2_pow(Fp2 x, mpz_class e, const mpz_class& p) {
  Fp2 r{1, 0};
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = fp2_mul(r, x, p);
    x = fp2_mul(x, x, p);
    e >>= 1;
  }
  return r;
}

/// Residue characteristic and degree of a prime of O: (p, 1) for split or
/// ramified primes, (p, 2) for inert ones.
std::pair<mpz_class, int> residue_characteristic(const ZRoot2& prime) {
  mpz_class n = abs(field_norm(prime));
  if (is_prime(n)) return {n, 1};
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  if (root * root == n && is_prime(root)) return {root, 2};
  throw std::invalid_argument("not a prime of Z[sqrt2]: " + prime.to_string());
}

ZRoot2 canonical_sign(ZRoot2 x) { return x.sign() < 0 ? -x : x; }

/// Divides x by pi as often as possible; returns the count.
int strip(ZRoot2& x, const ZRoot2& pi) {
  int count = 0;
  while (auto q = x.divide_exact(pi)) {
    x = *q;
    ++count;
  }
  return count;
}

std::optional<PrimeFactorization> factor_in_O_impl(const ZRoot2& x, RandomSeed seed, Budget budget) {
  if (x.is_zero()) throw std::invalid_argument("cannot factor zero");
  auto norm_factors = factor_with_budget(field_norm(x), seed, budget);
  if (!norm_factors) return std::nullopt;
  PrimeFactorization out;
  ZRoot2 rest = x;
  for (const auto& [p, e] : norm_factors->factors) {
    if (p == 2) {
      out.factors.emplace_back(ZRoot2::sqrt2(), strip(rest, ZRoot2::sqrt2()));
      continue;
    }
    unsigned long r8 = mpz_fdiv_ui(p.get_mpz_t(), 8);
    if (r8 == 3 || r8 == 5) {
      out.factors.emplace_back(ZRoot2(p, 0), strip(rest, ZRoot2(p, 0)));
      continue;
    }
    auto r = sqrt_mod_prime(2, p, seed);
    if (!r) throw std::logic_error("2 has no square root modulo " + p.get_str());
    ZRoot2 pi = canonical_sign(gcd(ZRoot2(p, 0), ZRoot2(*r, 1)));
    ZRoot2 pi_bar = canonical_sign(galois(pi));
    for (const ZRoot2& q : {pi, pi_bar}) {
      int m = strip(rest, q);
      if (m > 0) out.factors.emplace_back(q, m);
    }
  }
  if (abs(field_norm(rest)) != 1) throw std::logic_error("factorization left a non-unit: " + rest.to_string());
  out.unit = rest;
  return out;
}

}  // namespace

mpz_class IntegerFactorization::product() const {
  mpz_class r = sign;
  for (const auto& [p, e] : factors) {
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
    r *= pe;
  }
  return r;
}

IntegerFactorization factor_integer(const mpz_class& n, RandomSeed seed) {
  return *factor_with_budget(n, seed, Budget{});
}

std::optional<IntegerFactorization> try_factor_integer(const mpz_class& n, RandomSeed seed, std::uint64_t budget) {
  return factor_with_budget(n, seed, Budget{budget});
}

ZRoot2 PrimeFactorization::product() const {
  ZRoot2 r = unit;
  for (const auto& [p, e] : factors) r *= p.pow(static_cast<unsigned>(e));
  return r;
}

PrimeFactorization factor_in_O(const ZRoot2& x, RandomSeed seed) { return *factor_in_O_impl(x, seed, Budget{}); }

std::optional<PrimeFactorization> try_factor_in_O(const ZRoot2& x, RandomSeed seed, std::uint64_t budget) {
  return factor_in_O_impl(x, seed, Budget{budget});
}

std::optional<mpz_class> sqrt_mod_prime(const mpz_class& a, const mpz_class& p, RandomSeed seed) {
  mpz_class n = mod(a, p);
  if (n == 0) return mpz_class(0);
  if (mpz_legendre(n.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;
  if (mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) return powm(n, (p + 1) / 4, p);
  // Tonelli-Shanks.
  mpz_class q = p - 1;
  unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
  q >>= s;
  Rng rng(seed);
  mpz_class z;
  do {
    z = rng.range(2, p);
  } while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1);
  mpz_class c = powm(z, q, p);
  mpz_class t = powm(n, q, p);
  mpz_class r = powm(n, (q + 1) / 2, p);
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    mpz_class t2 = t;
    while (t2 != 1) {
      t2 = mod(t2 * t2, p);
      ++i;
    }
    mpz_class b = c;
    for (unsigned long j = 0; j + 1 < m - i; ++j) b = mod(b * b, p);
    m = i;
    c = mod(b * b, p);
    t = mod(t * c, p);
    r = mod(r * b, p);
  }
  return r;
}

std::optional<ZRoot2> sqrt_minus_one_mod(const ZRoot2& prime, RandomSeed seed, int attempts) {
  auto [p, degree] = residue_characteristic(prime);
  if (p == 2) return std::nullopt;
  Rng rng(seed);
  if (degree == 1) {
    if (mpz_fdiv_ui(p.get_mpz_t(), 4) != 1) return std::nullopt;
    mpz_class e = (p - 1) / 4;
    for (int i = 0; i < attempts; ++i) {
      mpz_class t = powm(rng.range(1, p), e, p);
      if (mod(t * t + 1, p) == 0) return ZRoot2(t, 0);
    }
    return std::nullopt;
  }
  // Residue field of size p^2, always 1 mod 4.
  mpz_class e = (p * p - 1) / 4;
  for (int i = 0; i < attempts; ++i) {
    Fp2 x{rng.range(0, p), rng.range(0, p)};
    if (x.a == 0 && x.b == 0) continue;
    Fp2 t = fp2_pow(x, e, p);
    Fp2 sq = fp2_mul(t, t, p);
    if (sq.a == p - 1 && sq.b == 0) return ZRoot2(t.a, t.b);
  }
  return std::nullopt;
}

std::optional<std::pair<ZRoot2, ZRoot2>> solve_sum_of_two_squares(const ZRoot2& m, RandomSeed seed,
                                                                  const TwoSquaresOptions& options) {
  if (m.is_zero()) return std::make_pair(ZRoot2(0), ZRoot2(0));
  if (!m.is_totally_nonnegative()) return std::nullopt;
  // Only an odd power of sqrt2 obstructs landing in Z[sqrt2][i] below.
  if (sqrt2_valuation(m) == 1) return std::nullopt;
  auto fact = factor_in_O_impl(m, seed, Budget{options.factor_budget});
  if (!fact) return std::nullopt;

  // m = unit * prod |t_pi|^2 * v_pi, with v_pi units collected into `unit`.
  ZOmega z = ZOmega::from_real(ZRoot2(1));
  ZRoot2 unit = fact->unit;
  const ZOmega delta = ZOmega::from_real(ZRoot2(1)) + ZOmega::omega();  // |delta|^2 = sqrt2 * lambda
  std::uint64_t sub_seed = seed.value;
  for (const auto& [pi, e] : fact->factors) {
    ++sub_seed;
    if (pi == ZRoot2::sqrt2()) {
      for (int i = 0; i < e; ++i) {
        z = z * delta;
        unit *= ZRoot2::lambda_inverse();
      }
      continue;
    }
    auto [p, degree] = residue_characteristic(pi);
    mpz_class q = degree == 1 ? p : mpz_class(p * p);
    if (mpz_fdiv_ui(q.get_mpz_t(), 4) == 3) {
      if (e % 2 != 0) return std::nullopt;
      z = z * ZOmega::from_real(pi.pow(static_cast<unsigned>(e / 2)));
      continue;
    }
    auto s = sqrt_minus_one_mod(pi, RandomSeed{sub_seed}, options.sqrt_attempts);
    if (!s) return std::nullopt;
    ZOmega t = gcd(ZOmega::from_real(pi), ZOmega::from_real(*s) + ZOmega::i());
    auto v = pi.divide_exact(t.norm_sq());
    if (!v || abs(field_norm(*v)) != 1) return std::nullopt;
    for (int i = 0; i < e; ++i) {
      z = z * t;
      unit *= *v;
    }
  }

  // The leftover unit is totally positive, hence lambda^(2n) = |lambda^n|^2.
  if (unit.sign(GaloisEmbedding::kPlus) <= 0 || unit.sign(GaloisEmbedding::kMinus) <= 0) return std::nullopt;
  const ZRoot2 lambda2 = ZRoot2::lambda() * ZRoot2::lambda();
  const ZRoot2 lambda2_inv = ZRoot2::lambda_inverse() * ZRoot2::lambda_inverse();
  ZOmega scale = ZOmega::from_real(ZRoot2(1));
  while (compare(unit, ZRoot2(1)) > 0) {
    unit *= lambda2_inv;
    scale = scale * ZOmega::from_real(ZRoot2::lambda());
  }
  while (compare(unit, ZRoot2(1)) < 0) {
    unit *= lambda2;
    scale = scale * ZOmega::from_real(ZRoot2::lambda_inverse());
  }
  if (!(unit == ZRoot2(1))) return std::nullopt;
  z = z * scale;

  for (int j = 0; j < 4; ++j, z = z.times_omega()) {
    if (auto c = z.to_complex()) {
      if (!(c->norm_sq() == m)) throw std::logic_error("two-squares construction failed for " + m.to_string());
      return std::make_pair(c->re, c->im);
    }
  }
  return std::nullopt;
}

}  // namespace ctsynth
