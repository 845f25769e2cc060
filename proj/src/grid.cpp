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

#include "ctsynth/grid.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace ctsynth {
namespace {

Real sigma_plus(const ZRoot2& x, long prec) { return embed(x, GaloisEmbedding::kPlus, prec); }

/// Sign of embed(x, e) - sigma_+(y), exactly.
int compare_exact(const ZRoot2& x, GaloisEmbedding e, const ZRoot2& y) {
  return e == GaloisEmbedding::kPlus ? (x - y).sign(GaloisEmbedding::kPlus)
                                     : (x - galois(y)).sign(GaloisEmbedding::kMinus);
}

ZRoot2 lambda_power(long j) {
  return j >= 0 ? ZRoot2::lambda().pow(static_cast<unsigned>(j))
                : ZRoot2::lambda_inverse().pow(static_cast<unsigned>(-j));
}

/// Interval endpoints scaled by s > 0 and pushed outward by a relative margin.
std::pair<Real, Real> widened(const Real& lo, const Real& hi, long prec) {
  Real margin = (Real(1L, prec) + abs(lo) + abs(hi)).ldexp(-(prec - 40));
  return {lo - margin, hi + margin};
}

}  // namespace

// ---------------------------------------------------------------- Interval

Interval::Interval(Real lo, Real hi, bool lo_closed, bool hi_closed)
    : lo_(std::move(lo)), hi_(std::move(hi)), lo_closed_(lo_closed), hi_closed_(hi_closed) {
  if (!(lo_ <= hi_)) {
    throw std::invalid_argument("interval with lo > hi: [" + lo_.to_string(10) + ", " + hi_.to_string(10) + "]");
  }
}

Interval Interval::closed(const ZRoot2& lo, const ZRoot2& hi, long precision_bits) {
  Interval iv(sigma_plus(lo, precision_bits), sigma_plus(hi, precision_bits));
  iv.lo_exact_ = lo;
  iv.hi_exact_ = hi;
  return iv;
}

bool Interval::empty() const { return lo_ == hi_ && !(lo_closed_ && hi_closed_); }

bool Interval::contains(const ZRoot2& x, GaloisEmbedding e) const {
  std::optional<Real> v;
  auto value = [&]() -> const Real& {
    if (!v) v = embed(x, e, precision() + 32);
    return *v;
  };
  int lo_cmp = lo_exact_ ? compare_exact(x, e, *lo_exact_) : (value() < lo_ ? -1 : (value() == lo_ ? 0 : 1));
  if (lo_cmp < 0 || (lo_cmp == 0 && !lo_closed_)) return false;
  int hi_cmp = hi_exact_ ? compare_exact(x, e, *hi_exact_) : (value() < hi_ ? -1 : (value() == hi_ ? 0 : 1));
  return hi_cmp < 0 || (hi_cmp == 0 && hi_closed_);
}

Interval Interval::with_lo(Real lo, bool closed, std::optional<ZRoot2> exact) const {
  Interval iv(std::move(lo), hi_, closed, hi_closed_);
  iv.lo_exact_ = std::move(exact);
  iv.hi_exact_ = hi_exact_;
  return iv;
}

Interval Interval::with_hi(Real hi, bool closed, std::optional<ZRoot2> exact) const {
  Interval iv(lo_, std::move(hi), lo_closed_, closed);
  iv.lo_exact_ = lo_exact_;
  iv.hi_exact_ = std::move(exact);
  return iv;
}

// ---------------------------------------------------------------- 1D grid

std::vector<ZRoot2> solve_grid_1d(const GridProblem& problem, const GridOptions& options) {
  const Interval& A = problem.a;
  const Interval& B = problem.b;
  if (A.empty() || B.empty()) return {};
  const long prec = std::max({A.precision(), B.precision(), 64L}) + 32;
  const Real sqrt2 = Real::sqrt2(prec);
  const Real wa = A.width().with_precision(prec);
  const Real wb = B.width().with_precision(prec);
  const Real expected = wa * wb / (sqrt2 * Real(2L, prec));
  if (expected > Real(options.max_expected_solutions, prec)) {
    throw std::length_error("grid problem too large: about " + expected.to_string(4) + " solutions expected");
  }

  // Scale by lambda^j so both intervals have comparable widths.
  const Real lambda = Real(1L, prec) + sqrt2;
  long j = 0;
  if (!wa.is_zero() && !wb.is_zero()) {
    j = round_to_integer(log2(wb / wa) / (Real(2L, prec) * log2(lambda))).get_si();
  }
  Real scale_a = Real(1L, prec);
  for (long i = 0; i < std::abs(j); ++i) scale_a = j > 0 ? scale_a * lambda : scale_a / lambda;
  Real scale_b = Real(1L, prec) / scale_a;  // |sigma_-(lambda)|^j = lambda^-j
  auto [a_lo, a_hi] = widened(A.lo() * scale_a, A.hi() * scale_a, prec);
  Real b_lo = B.lo() * scale_b;
  Real b_hi = B.hi() * scale_b;
  if (j % 2 != 0) {
    std::swap(b_lo, b_hi);
    b_lo = -b_lo;
    b_hi = -b_hi;
  }
  std::tie(b_lo, b_hi) = widened(b_lo, b_hi, prec);

  const Real two_sqrt2 = sqrt2 * Real(2L, prec);
  mpz_class b_min = ceil_to_integer((a_lo - b_hi) / two_sqrt2);
  mpz_class b_max = floor_to_integer((a_hi - b_lo) / two_sqrt2);
  if (b_max - b_min > mpz_class(static_cast<long>(options.max_expected_solutions) + 16)) {
    throw std::length_error("grid problem scan range too large");
  }
  const ZRoot2 unscale = lambda_power(-j);
  std::vector<std::pair<Real, ZRoot2>> found;
  for (mpz_class b = b_min; b <= b_max; ++b) {
    Real bs = Real(b, prec) * sqrt2;
    Real lo = max(a_lo - bs, b_lo + bs);
    Real hi = min(a_hi - bs, b_hi + bs);
    if (hi < lo) continue;
    for (mpz_class a = ceil_to_integer(lo); a <= floor_to_integer(hi); ++a) {
      ZRoot2 x = ZRoot2(a, b) * unscale;
      if (A.contains(x, GaloisEmbedding::kPlus) && B.contains(x, GaloisEmbedding::kMinus)) {
        found.emplace_back(sigma_plus(x, prec), std::move(x));
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<ZRoot2> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

std::vector<ZRoot2> enumerate_m_candidates(const Real& alpha_abs_sq, const Real& epsilon, int k,
                                           const GridOptions& options) {
  const long prec = std::max(alpha_abs_sq.precision(), epsilon.precision()) + 32;
  const Real one(1L, prec);
  if (alpha_abs_sq < Real(prec) || alpha_abs_sq > one) {
    throw std::invalid_argument("|alpha|^2 must lie in [0, 1], got " + alpha_abs_sq.to_string(10));
  }
  if (!(epsilon > Real(prec)) || !(epsilon < one.ldexp(-1))) {
    throw std::invalid_argument("epsilon must lie in (0, 1/2), got " + epsilon.to_string(10));
  }
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  mpz_class two_k;
  mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(k));
  const Real scale(two_k, prec);
  const Real center = alpha_abs_sq.with_precision(prec) * scale;
  const Real eps = epsilon.with_precision(prec);
  const Real half = eps * max(sqrt(alpha_abs_sq.with_precision(prec)), eps) * scale;

  Interval box = Interval::closed(ZRoot2(0), ZRoot2(two_k, 0), prec);
  Interval band = box;
  Real lo = center - half;
  Real hi = center + half;
  if (lo > Real(prec)) band = band.with_lo(lo, false);
  if (hi < scale) band = band.with_hi(hi, false);
  if (band.hi() < band.lo()) return {};

  std::vector<ZRoot2> sols = solve_grid_1d({band, box}, options);
  std::vector<std::pair<Real, std::size_t>> keyed;
  keyed.reserve(sols.size());
  for (std::size_t i = 0; i < sols.size(); ++i) {
    keyed.emplace_back(abs(sigma_plus(sols[i], prec) - center), i);
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<ZRoot2> out;
  out.reserve(sols.size());
  for (const auto& [dist, i] : keyed) out.push_back(sols[i]);
  return out;
}

// ---------------------------------------------------------------- 2D grid

Ellipse Ellipse::disk(const Real& radius) {
  long prec = radius.precision();
  return Ellipse{Complex{Real(prec), Real(prec)}, Real(prec), radius, radius};
}

Real Ellipse::normalized_sq(const Complex& z) const {
  Complex w = z - center;
  Real c = cos(angle);
  Real s = sin(angle);
  Real u = (w.re * c + w.im * s) / semi_axis_1;
  Real v = (w.im * c - w.re * s) / semi_axis_2;
  return u * u + v * v;
}

namespace {

constexpr int kDim = 4;
using Vec = std::array<Real, kDim>;
using IntVec = std::array<mpz_class, kDim>;

Real dot(const Vec& x, const Vec& y) {
  Real s = x[0] * y[0];
  for (int i = 1; i < kDim; ++i) s += x[i] * y[i];
  return s;
}

/// Linear part of the normalising map of an ellipse applied to (x, y).
std::pair<Real, Real> normalize_linear(const Ellipse& e, const Real& x, const Real& y) {
  Real c = cos(e.angle);
  Real s = sin(e.angle);
  return {(x * c + y * s) / e.semi_axis_1, (y * c - x * s) / e.semi_axis_2};
}

struct Lattice {
  std::array<Vec, kDim> original;  // columns: images of the coordinate unit vectors
  std::array<IntVec, kDim> u;      // reduced basis in original coordinates
  std::array<Vec, kDim> b;         // reduced basis vectors
  std::array<Vec, kDim> star;      // Gram-Schmidt vectors
  std::array<Vec, kDim> mu;        // mu[i][j] for j < i
  std::array<Real, kDim> norm_sq;  // |star_i|^2
  long prec;

  void rebuild_vector(int i) {
    for (int r = 0; r < kDim; ++r) {
      Real s(prec);
      for (int c = 0; c < kDim; ++c) {
        if (u[i][c] != 0) s += original[c][r] * Real(u[i][c], prec);
      }
      b[i][r] = s;
    }
  }

  void gram_schmidt() {
    for (int i = 0; i < kDim; ++i) {
      star[i] = b[i];
      for (int j = 0; j < i; ++j) {
        mu[i][j] = dot(b[i], star[j]) / norm_sq[j];
        for (int r = 0; r < kDim; ++r) star[i][r] -= mu[i][j] * star[j][r];
      }
      norm_sq[i] = dot(star[i], star[i]);
    }
  }

  void lll() {
    const Real delta = Real(99L, prec) / Real(100L, prec);
    gram_schmidt();
    int k = 1;
    long guard = 0;
    while (k < kDim) {
      if (++guard > 100000) throw std::runtime_error("lattice reduction did not converge");
      bool changed = false;
      for (int j = k - 1; j >= 0; --j) {
        mpz_class q = round_to_integer(mu[k][j]);
        if (q == 0) continue;
        changed = true;
        for (int c = 0; c < kDim; ++c) u[k][c] -= q * u[j][c];
        Real qr(q, prec);
        for (int l = 0; l < j; ++l) mu[k][l] -= qr * mu[j][l];
        mu[k][j] -= qr;
      }
      if (changed) {
        rebuild_vector(k);
        gram_schmidt();
      }
      if (norm_sq[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * norm_sq[k - 1]) {
        ++k;
      } else {
        std::swap(u[k], u[k - 1]);
        std::swap(b[k], b[k - 1]);
        gram_schmidt();
        k = std::max(k - 1, 1);
      }
    }
  }
};

}  // namespace

std::vector<std::pair<ZRoot2, ZRoot2>> solve_grid_2d(const Ellipse& plus, const Ellipse& minus, long precision_bits,
                                                     std::size_t max_points) {
  const long prec = precision_bits + 64;
  const Real sqrt2 = Real::sqrt2(prec);
  const Real one(1L, prec);
  const Real zero(prec);

  // Coordinates (n0, n1, n2, n3) stand for x0 = n0 + n1 sqrt2, x1 = n2 + n3 sqrt2.
  const std::array<std::array<Real, 4>, kDim> images = {{
      {one, zero, one, zero},
      {sqrt2, zero, -sqrt2, zero},
      {zero, one, zero, one},
      {zero, sqrt2, zero, -sqrt2},
  }};
  Lattice lat;
  lat.prec = prec;
  for (int c = 0; c < kDim; ++c) {
    auto [p0, p1] = normalize_linear(plus, images[c][0], images[c][1]);
    auto [m0, m1] = normalize_linear(minus, images[c][2], images[c][3]);
    lat.original[c] = {p0, p1, m0, m1};
    for (int r = 0; r < kDim; ++r) lat.u[c][r] = r == c ? 1 : 0;
    lat.b[c] = lat.original[c];
  }
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) lat.mu[i][j] = zero;
    lat.norm_sq[i] = zero;
    lat.star[i] = lat.b[i];
  }
  lat.lll();

  auto [t0, t1] = normalize_linear(plus, plus.center.re, plus.center.im);
  auto [t2, t3] = normalize_linear(minus, minus.center.re, minus.center.im);
  const Vec target = {t0, t1, t2, t3};
  std::array<Real, kDim> tau;
  for (int i = 0; i < kDim; ++i) tau[i] = dot(target, lat.star[i]) / lat.norm_sq[i];

  const Real radius_sq(2L, prec);
  const Real slack = one + one.ldexp(-(precision_bits / 2));
  std::vector<std::pair<ZRoot2, ZRoot2>> out;
  std::array<mpz_class, kDim> y;
  std::size_t visited = 0;

  std::function<void(int, const Real&)> descend = [&](int i, const Real& remaining) {
    Real c = tau[i];
    for (int j = i + 1; j < kDim; ++j) c -= lat.mu[j][i] * Real(y[j], prec);
    Real half = sqrt(remaining / lat.norm_sq[i]);
    mpz_class lo = ceil_to_integer(c - half);
    mpz_class hi = floor_to_integer(c + half);
    for (mpz_class v = lo; v <= hi; ++v) {
      Real d = Real(v, prec) - c;
      Real rest = remaining - d * d * lat.norm_sq[i];
      if (rest < zero) continue;
      y[i] = v;
      if (i > 0) {
        descend(i - 1, rest);
        continue;
      }
      if (++visited > max_points) throw std::length_error("2D grid problem visits too many points");
      IntVec n;
      for (int r = 0; r < kDim; ++r) {
        n[r] = 0;
        for (int col = 0; col < kDim; ++col) n[r] += lat.u[col][r] * y[col];
      }
      ZRoot2 x0(n[0], n[1]);
      ZRoot2 x1(n[2], n[3]);
      Complex zp{embed(x0, GaloisEmbedding::kPlus, prec), embed(x1, GaloisEmbedding::kPlus, prec)};
      Complex zm{embed(x0, GaloisEmbedding::kMinus, prec), embed(x1, GaloisEmbedding::kMinus, prec)};
      if (plus.normalized_sq(zp) <= slack && minus.normalized_sq(zm) <= slack) out.emplace_back(x0, x1);
    }
  };
  descend(kDim - 1, radius_sq);
  return out;
}

}  // namespace ctsynth
