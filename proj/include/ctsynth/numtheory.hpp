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

// Factorization of rational integers and of elements of Z[sqrt2], and the
// sum-of-two-squares solver over Z[sqrt2].

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ctsynth/ring.hpp"

namespace ctsynth {

struct RandomSeed {
  std::uint64_t value = 0;
};

struct IntegerFactorization {
  int sign = 1;
  /// Distinct primes in increasing order with their multiplicities.
  std::vector<std::pair<mpz_class, int>> factors;

  mpz_class product() const;
};

/// Full factorization by trial division, Miller-Rabin and Pollard-Brent.
/// Throws std::invalid_argument for n = 0.
IntegerFactorization factor_integer(const mpz_class& n, RandomSeed seed);

/// As factor_integer, giving up (nullopt) once Pollard-Brent has spent
/// `budget` polynomial evaluations.
std::optional<IntegerFactorization> try_factor_integer(const mpz_class& n, RandomSeed seed, std::uint64_t budget);

struct PrimeFactorization {
  ZRoot2 unit{1};
  std::vector<std::pair<ZRoot2, int>> factors;

  ZRoot2 product() const;
};

/// Factorization in O. Throws std::invalid_argument for x = 0.
PrimeFactorization factor_in_O(const ZRoot2& x, RandomSeed seed);
std::optional<PrimeFactorization> try_factor_in_O(const ZRoot2& x, RandomSeed seed, std::uint64_t budget);

/// r with r^2 = a (mod p) for an odd prime p, when a is a quadratic residue.
std::optional<mpz_class> sqrt_mod_prime(const mpz_class& a, const mpz_class& p, RandomSeed seed);

/// t with t^2 + 1 = 0 modulo the prime `prime` of O, found by random
/// exponentiation in the residue field. Absent when the residue field size
/// is not 1 mod 4, when `prime` is associate to sqrt2, or after `attempts`
/// unlucky draws.
std::optional<ZRoot2> sqrt_minus_one_mod(const ZRoot2& prime, RandomSeed seed, int attempts = 64);

struct TwoSquaresOptions {
  /// Pollard-Brent budget for factoring m; unlimited when empty.
  std::optional<std::uint64_t> factor_budget;
  int sqrt_attempts = 64;
};

/// (x0, x1) with x0^2 + x1^2 = m, or nullopt when m is not a sum of two
/// squares in O (or the randomized steps gave up).
std::optional<std::pair<ZRoot2, ZRoot2>> solve_sum_of_two_squares(const ZRoot2& m, RandomSeed seed,
                                                                  const TwoSquaresOptions& options = {});

}  // namespace ctsynth
