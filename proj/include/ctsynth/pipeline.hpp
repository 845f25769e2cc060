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

// Approximation of arbitrary PU(2) targets as gamma1 * gamma * gamma2, where
// gamma is an exact middle piece matching |alpha| and the flanks are
// diagonal approximations.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctsynth/diagonal.hpp"
#include "ctsynth/numtheory.hpp"
#include "ctsynth/ring.hpp"
#include "ctsynth/su2.hpp"
#include "ctsynth/synth.hpp"

namespace ctsynth {

/// Raised when the search exceeds its max_k.
class NonHaltingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ApproxOptions {
  /// Largest loop index k; 0 selects ceil(log2(1/eps^3)) + 16.
  int max_k = 0;
  /// Working precision; 0 selects 4 log2(1/eps) + 64.
  long precision_bits = 0;
  /// Pollard-Brent budget per factorization.
  std::uint64_t factor_budget = 20000;
};

enum class Branch { kMain, kBifurcation };

std::string to_string(Branch b);

struct TCounts {
  int left = 0;
  int middle = 0;
  int right = 0;
  int total = 0;
};

struct ApproxResult {
  Branch branch = Branch::kMain;
  GateWord word;
  GateWord word_left;
  GateWord word_middle;
  GateWord word_right;
  /// The middle piece (main branch only).
  std::optional<ExactUnitary> gamma;
  /// Loop index at which the middle-piece search halted (main branch) or
  /// the diagonal search's k (bifurcation branch).
  int k = 0;
  /// Flank angles (main branch only).
  std::optional<RotationAngles> angles;
  TCounts t_counts;
  /// metric_d(target, evaluate_word(word)).
  Real achieved_distance;
  /// (c_tilde + 2) eps on the main branch, eps + 1 - |alpha| on the
  /// bifurcation branch.
  Real bound;
  std::size_t candidates_tried = 0;
};

/// Loop-index cap used when ApproxOptions::max_k is 0.
int default_max_k(const Real& epsilon);

/// Throws std::invalid_argument unless eps < consts.eps_tilde, and
/// NonHaltingError when no middle piece (or flank) is found within max_k.
ApproxResult approximate(const UnitaryTarget& target, const Real& epsilon, const LemmaConstants& consts,
                         RandomSeed seed, const ApproxOptions& options = {});

struct Verification {
  Real distance;
  int t_count = 0;
};

Verification verify(const UnitaryTarget& target, const GateWord& word, long precision_bits);

/// Haar-random element of SU(2), from four independent standard normals.
/// With alpha_max set, draws are repeated until |alpha| <= alpha_max.
UnitaryTarget haar_random_target(std::uint64_t seed, std::size_t index, long precision_bits,
                                 std::optional<double> alpha_max = std::nullopt);

struct BenchmarkOptions {
  std::optional<double> alpha_max;
  /// LemmaConstants::defaults_for(eps) when empty.
  std::optional<LemmaConstants> consts;
  ApproxOptions approx;
};

struct BenchmarkRow {
  std::size_t target_index = 0;
  /// The pipeline returned a result (success also requires distance < bound).
  bool completed = false;
  bool success = false;
  Branch branch = Branch::kMain;
  int k = 0;
  TCounts t_counts;
  Real distance;
  Real bound;
  double millis = 0;
  std::string error;
};

struct BenchmarkSummary {
  std::vector<BenchmarkRow> rows;
  double success_rate = 0;
  double mean_t_count = 0;
  double median_t_count = 0;
  double mean_k = 0;
  double median_k = 0;
  double wall_millis = 0;
};

/// Throws std::invalid_argument for n_targets = 0. Failures of individual
/// targets are recorded in their rows.
BenchmarkSummary benchmark(std::size_t n_targets, const Real& epsilon, RandomSeed seed,
                           const BenchmarkOptions& options = {});

/// CSV with header target_index,k,t_left,t_mid,t_right,t_total,distance,millis.
std::string to_csv(const BenchmarkSummary& summary);

}  // namespace ctsynth
