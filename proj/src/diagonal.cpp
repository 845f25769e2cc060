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

#include "ctsynth/diagonal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "ctsynth/grid.hpp"

namespace ctsynth {
namespace {

struct Candidate {
  ZRoot2 x0;
  ZRoot2 x1;
  Real score;
};

double log2_inverse(const Real& epsilon) { return -std::log2(epsilon.to_double()); }

// Candidates for sqrt2^-k sigma_+(x0 + x1 i) in the segment around e^{i phi},
// best first.
std::vector<Candidate> segment_candidates(const Real& phi, const Real& delta, int k, long prec) {
  const Real one(1L, prec);
  const Real sqrt2 = Real::sqrt2(prec);
  const Real radius = k % 2 == 0 ? one.ldexp(k / 2) : sqrt2.ldexp(k / 2);
  const Real width = sqrt(Real(2L, prec) * delta - delta * delta);

  Ellipse plus{Complex::polar((one - delta.ldexp(-1)) * radius, phi), phi, delta.ldexp(-1) * radius * sqrt2,
               width * radius * sqrt2};
  Ellipse minus = Ellipse::disk(radius);
  auto points = solve_grid_2d(plus, minus, prec);

  const ZRoot2 bound = ZRoot2(2).pow(static_cast<unsigned>(k));
  const Real c = cos(phi);
  const Real s = sin(phi);
  const Real floor_score = (one - delta) * radius;
  std::vector<Candidate> out;
  for (auto& [x0, x1] : points) {
    if (!(bound - x0 * x0 - x1 * x1).is_totally_nonnegative()) continue;
    Real score = embed(x0, GaloisEmbedding::kPlus, prec) * c + embed(x1, GaloisEmbedding::kPlus, prec) * s;
    if (score < floor_score) continue;
    out.push_back({x0, x1, score});
  }
  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.x0.a() != b.x0.a()) return a.x0.a() < b.x0.a();
    if (a.x0.b() != b.x0.b()) return a.x0.b() < b.x0.b();
    if (a.x1.a() != b.x1.a()) return a.x1.a() < b.x1.a();
    return a.x1.b() < b.x1.b();
  });
  return out;
}

}  // namespace

int default_diagonal_max_k(const Real& epsilon) { return static_cast<int>(std::ceil(3 * log2_inverse(epsilon))) + 16; }

long default_precision_bits(const Real& epsilon) {
  return static_cast<long>(std::ceil(4 * log2_inverse(epsilon))) + 64;
}

std::optional<DiagonalApprox> approximate_diagonal(const DiagonalApproxRequest& request) {
  const Real& eps = request.epsilon;
  if (!(eps.sign() > 0) || !(eps < Real(1L, eps.precision()).ldexp(-1))) {
    throw std::invalid_argument("epsilon must lie in (0, 1/2), got " + eps.to_string(6));
  }
  if (request.max_k < 1) throw std::invalid_argument("max_k must be at least 1");
  const long prec = std::max({request.precision_bits > 0 ? request.precision_bits : default_precision_bits(eps),
                              eps.precision(), request.theta.theta.precision(), 64L});

  const Real theta = request.theta.theta.with_precision(prec);
  const Real delta = (eps.with_precision(prec) * eps.with_precision(prec)).ldexp(-1);
  const Real eighth_pi = Real::pi(prec).ldexp(-3);
  const UnitaryTarget target = UnitaryTarget::diagonal(theta);
  const TwoSquaresOptions two_squares{request.factor_budget};

  std::size_t tried = 0;
  for (int k = 0; k <= request.max_k; ++k) {
    const ZRoot2 bound = ZRoot2(2).pow(static_cast<unsigned>(k));
    for (bool odd : {false, true}) {
      const Real phi = odd ? theta - eighth_pi : theta;
      for (const Candidate& cand : segment_candidates(phi, delta, k, prec)) {
        ++tried;
        auto rest = solve_sum_of_two_squares(bound - cand.x0 * cand.x0 - cand.x1 * cand.x1, request.seed, two_squares);
        if (!rest) continue;
        ExactGate gate(make_exact_unitary(cand.x0, cand.x1, rest->first, rest->second, k));
        if (odd) gate = gate * ExactGate::T();
        Real distance = metric_d(target, gate.to_numeric(prec));
        if (!(distance < eps)) continue;
        return DiagonalApprox{gate, exact_synthesize(gate), k, distance, tried};
      }
    }
  }
  return std::nullopt;
}

}  // namespace ctsynth
