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

// Grid problems over O = Z[sqrt2]: lattice points whose two real embeddings
// lie in prescribed sets.

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ctsynth/real.hpp"
#include "ctsynth/ring.hpp"

namespace ctsynth {

/// A real interval with per-endpoint open/closed flags. Endpoints that are
/// known exactly (as sigma_+ images of elements of O) are compared exactly.
class Interval {
 public:
  /// Throws std::invalid_argument when lo > hi.
  Interval(Real lo, Real hi, bool lo_closed = true, bool hi_closed = true);
  static Interval closed(const ZRoot2& lo, const ZRoot2& hi, long precision_bits);

  const Real& lo() const { return lo_; }
  const Real& hi() const { return hi_; }
  bool lo_closed() const { return lo_closed_; }
  bool hi_closed() const { return hi_closed_; }
  const std::optional<ZRoot2>& lo_exact() const { return lo_exact_; }
  const std::optional<ZRoot2>& hi_exact() const { return hi_exact_; }
  long precision() const { return std::max(lo_.precision(), hi_.precision()); }

  Real width() const { return hi_ - lo_; }
  bool empty() const;
  /// Whether the image of x under e lies in the interval.
  bool contains(const ZRoot2& x, GaloisEmbedding e) const;

  Interval with_lo(Real lo, bool closed, std::optional<ZRoot2> exact = std::nullopt) const;
  Interval with_hi(Real hi, bool closed, std::optional<ZRoot2> exact = std::nullopt) const;

 private:
  Real lo_;
  Real hi_;
  bool lo_closed_;
  bool hi_closed_;
  std::optional<ZRoot2> lo_exact_;
  std::optional<ZRoot2> hi_exact_;
};

/// { x in O : sigma_+(x) in a, sigma_-(x) in b }.
struct GridProblem {
  Interval a;
  Interval b;
};

struct GridOptions {
  /// Upper bound on the expected solution count |A| |B| / sqrt8.
  double max_expected_solutions = 1e7;
};

/// All solutions of the grid problem, each once, ordered by sigma_+ image.
/// Throws std::length_error when the expected count exceeds the cap.
std::vector<ZRoot2> solve_grid_1d(const GridProblem& problem, const GridOptions& options = {});

/// m in O with |m - a 2^k| < eps sqrt(a) 2^k, 0 <= sigma_+(m) <= 2^k and
/// 0 <= sigma_-(m) <= 2^k, nearest to a 2^k first. For a < eps^2 the band
/// half-width eps^2 2^k is used instead, which still forces
/// | sqrt(m / 2^k) - sqrt(a) | < eps.
std::vector<ZRoot2> enumerate_m_candidates(const Real& alpha_abs_sq, const Real& epsilon, int k,
                                           const GridOptions& options = {});

/// Ellipse { z : |M (z - center)| <= 1 } in the complex plane, given by its
/// center, the direction `angle` of its first semi-axis and the two
/// semi-axis lengths.
struct Ellipse {
  Complex center;
  Real angle;
  Real semi_axis_1;
  Real semi_axis_2;

  static Ellipse disk(const Real& radius);
  /// (z - center) expressed in the ellipse's normalised frame, squared norm.
  Real normalized_sq(const Complex& z) const;
};

/// Pairs (x0, x1) in O^2 with sigma_+(x0 + x1 i) in `plus` and
/// sigma_-(x0 + x1 i) in `minus`, found by LLL reduction of O^2 in R^4 and
/// Fincke-Pohst enumeration. Membership is decided at `precision_bits` with
/// a relative slack of 2^-(precision_bits/2); callers filter exactly.
/// Throws std::length_error when more than `max_points` lattice points are
/// visited.
std::vector<std::pair<ZRoot2, ZRoot2>> solve_grid_2d(const Ellipse& plus, const Ellipse& minus, long precision_bits,
                                                     std::size_t max_points = 1000000);

}  // namespace ctsynth
