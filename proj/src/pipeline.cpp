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

#include "ctsynth/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "ctsynth/grid.hpp"

namespace ctsynth {
namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

DiagonalApprox flank(const Real& theta, const Real& epsilon, RandomSeed seed, long prec,
                     const ApproxOptions& options) {
  DiagonalApproxRequest req{{theta}, epsilon, seed, default_diagonal_max_k(epsilon), prec, options.factor_budget};
  auto r = approximate_diagonal(req);
  if (!r) throw NonHaltingError("diagonal approximation of " + theta.to_string(10) + " exceeded max_k");
  return *std::move(r);
}

void finish(ApproxResult& r, const UnitaryTarget& target, long prec) {
  r.word = r.word_left + r.word_middle + r.word_right;
  r.t_counts = {r.word_left.t_count(), r.word_middle.t_count(), r.word_right.t_count(), r.word.t_count()};
  r.achieved_distance = verify(target, r.word, prec).distance;
}

double median(std::vector<double> xs) {
  if (xs.empty()) return 0;
  std::sort(xs.begin(), xs.end());
  std::size_t n = xs.size();
  return n % 2 ? xs[n / 2] : (xs[n / 2 - 1] + xs[n / 2]) / 2;
}

}  // namespace

std::string to_string(Branch b) { return b == Branch::kMain ? "main" : "bifurcation"; }

int default_max_k(const Real& epsilon) {
  return static_cast<int>(std::ceil(-3 * std::log2(epsilon.to_double()))) + 16;
}

ApproxResult approximate(const UnitaryTarget& target, const Real& epsilon, const LemmaConstants& consts,
                         RandomSeed seed, const ApproxOptions& options) {
  const long prec = std::max({options.precision_bits > 0 ? options.precision_bits : default_precision_bits(epsilon),
                              epsilon.precision(), target.precision_bits});
  const Real eps = epsilon.with_precision(prec);
  ApproxResult r;
  r.bound = lemma_bound(consts, eps);
  const Real alpha_abs = target.alpha.abs().with_precision(prec);

  if (!(alpha_abs < consts.alpha_threshold())) {
    r.branch = Branch::kBifurcation;
    DiagonalApprox d = flank(target.alpha.arg(), eps, seed, prec, options);
    r.k = d.k;
    r.candidates_tried = d.candidates_tried;
    r.word_middle = d.word;
    r.bound = eps + (Real(1L, prec) - alpha_abs);
    finish(r, target, prec);
    return r;
  }

  const int max_k = options.max_k > 0 ? options.max_k : default_max_k(eps);
  const Real alpha_sq = alpha_abs * alpha_abs;
  const TwoSquaresOptions two_squares{options.factor_budget};
  for (int k = 0; k <= max_k; ++k) {
    const ZRoot2 bound = ZRoot2(2).pow(static_cast<unsigned>(k));
    for (const ZRoot2& m : enumerate_m_candidates(alpha_sq, eps, k)) {
      ++r.candidates_tried;
      auto top = solve_sum_of_two_squares(m, seed, two_squares);
      if (!top) continue;
      auto bottom = solve_sum_of_two_squares(bound - m, seed, two_squares);
      if (!bottom) continue;
      auto [x0, x1] = *top;
      if (x0.sign() < 0) {
        x0 = -x0;
        x1 = -x1;
      }
      ExactUnitary gamma = make_exact_unitary(x0, x1, bottom->first, bottom->second, k);
      RotationAngles angles = compute_rotation_angles(target, to_numeric(gamma, prec));
      DiagonalApprox left = flank(angles.theta1.theta, eps, seed, prec, options);
      DiagonalApprox right = flank(angles.theta2.theta, eps, seed, prec, options);
      r.k = k;
      r.gamma = gamma;
      r.angles = angles;
      r.word_left = left.word;
      r.word_middle = exact_synthesize(gamma);
      r.word_right = right.word;
      finish(r, target, prec);
      return r;
    }
  }
  throw NonHaltingError("no middle piece found up to k = " + std::to_string(max_k));
}

Verification verify(const UnitaryTarget& target, const GateWord& word, long precision_bits) {
  return {metric_d(target, evaluate_word(word).to_numeric(precision_bits)), word.t_count()};
}

UnitaryTarget haar_random_target(std::uint64_t seed, std::size_t index, long precision_bits,
                                 std::optional<double> alpha_max) {
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
  std::normal_distribution<double> normal;
  while (true) {
    double x[4];
    for (double& v : x) v = normal(rng);
    double norm = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]);
    if (norm == 0) continue;
    if (alpha_max && std::hypot(x[0], x[1]) / norm > *alpha_max) continue;
    Real n(norm, precision_bits);
    return UnitaryTarget::from_components(Real(x[0], precision_bits) / n, Real(x[1], precision_bits) / n,
                                          Real(x[2], precision_bits) / n, Real(x[3], precision_bits) / n);
  }
}

BenchmarkSummary benchmark(std::size_t n_targets, const Real& epsilon, RandomSeed seed,
                           const BenchmarkOptions& options) {
  if (n_targets == 0) throw std::invalid_argument("benchmark needs at least one target");
  const long prec = options.approx.precision_bits > 0 ? options.approx.precision_bits : default_precision_bits(epsilon);
  const LemmaConstants consts = options.consts ? *options.consts : LemmaConstants::defaults_for(epsilon);
  const auto start = Clock::now();
  BenchmarkSummary s;
  std::vector<double> t_totals;
  std::vector<double> ks;
  for (std::size_t i = 0; i < n_targets; ++i) {
    UnitaryTarget target = haar_random_target(seed.value, i, prec, options.alpha_max);
    BenchmarkRow row;
    row.target_index = i;
    const auto t0 = Clock::now();
    try {
      ApproxResult r = approximate(target, epsilon, consts, RandomSeed{seed.value + i}, options.approx);
      row.completed = true;
      row.success = r.achieved_distance < r.bound;
      row.branch = r.branch;
      row.k = r.k;
      row.t_counts = r.t_counts;
      row.distance = r.achieved_distance;
      row.bound = r.bound;
      if (!row.success) row.error = "distance exceeds bound";
      t_totals.push_back(r.t_counts.total);
      ks.push_back(r.k);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    row.millis = millis_since(t0);
    s.rows.push_back(std::move(row));
  }
  s.wall_millis = millis_since(start);
  std::size_t ok = std::count_if(s.rows.begin(), s.rows.end(), [](const BenchmarkRow& r) { return r.success; });
  s.success_rate = static_cast<double>(ok) / static_cast<double>(n_targets);
  if (!t_totals.empty()) {
    for (std::size_t i = 0; i < t_totals.size(); ++i) {
      s.mean_t_count += t_totals[i] / static_cast<double>(t_totals.size());
      s.mean_k += ks[i] / static_cast<double>(ks.size());
    }
  }
  s.median_t_count = median(t_totals);
  s.median_k = median(ks);
  return s;
}

std::string to_csv(const BenchmarkSummary& summary) {
  std::ostringstream out;
  out << "target_index,k,t_left,t_mid,t_right,t_total,distance,millis\n";
  for (const BenchmarkRow& r : summary.rows) {
    out << r.target_index << ',';
    if (r.completed) {
      out << r.k << ',' << r.t_counts.left << ',' << r.t_counts.middle << ',' << r.t_counts.right << ','
          << r.t_counts.total << ',' << r.distance.to_string(6);
    } else {
      out << ",,,,,";
    }
    out << ',' << static_cast<long>(std::llround(r.millis)) << '\n';
  }
  return out.str();
}

}  // namespace ctsynth
