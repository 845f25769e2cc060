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

// Approximation of diagonal rotations u(theta) by exact Clifford+T gates.

#pragma once

#include <cstdint>
#include <optional>

#include "ctsynth/numtheory.hpp"
#include "ctsynth/real.hpp"
#include "ctsynth/su2.hpp"
#include "ctsynth/synth.hpp"

namespace ctsynth {

struct DiagonalApproxRequest {
  DiagonalRotation theta;
  /// Must lie in (0, 1/2).
  Real epsilon;
  RandomSeed seed;
  /// Largest denominator exponent tried; at least 1.
  int max_k = 0;
  /// Working precision; 0 selects 4 log2(1/eps) + 64.
  long precision_bits = 0;
  /// Pollard-Brent budget per complement factorization.
  std::uint64_t factor_budget = 20000;
};

struct DiagonalApprox {
  ExactGate gate;
  GateWord word;
  /// Denominator exponent at which the search succeeded.
  int k = 0;
  /// metric_d(u(theta), gate), evaluated at the working precision.
  Real distance;
  /// Number of candidates whose complement was tried.
  std::size_t candidates_tried = 0;
};

/// Default max_k for a diagonal search at eps: ceil(3 log2(1/eps)) + 16.
int default_diagonal_max_k(const Real& epsilon);

/// Default working precision 4 log2(1/eps) + 64.
long default_precision_bits(const Real& epsilon);

/// Searches k = 0, 1, ... for x0 + x1 i with sqrt2^-k sigma_+(x0 + x1 i)
/// in the segment { z : |z| <= 1, Re(e^{-i phi} z) >= 1 - eps^2 / 2 },
/// |sigma_-(x0 + x1 i)|^2 <= 2^k and 2^k - x0^2 - x1^2 a sum of two
/// squares, trying phi = theta and then phi = theta - pi/8 (followed by a
/// T gate) at each k. Candidates are tried best first. The result satisfies
/// metric_d(u(theta), gate) <= eps^2 / 2 < eps. Returns nullopt when max_k
/// is exhausted. Throws std::invalid_argument on an invalid request.
std::optional<DiagonalApprox> approximate_diagonal(const DiagonalApproxRequest& request);

}  // namespace ctsynth
