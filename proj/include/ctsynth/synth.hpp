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

// Clifford+T words, their exact evaluation, and minimal-T-count exact
// synthesis.
//
// Gates are H = (i/sqrt2)[[1, 1], [1, -1]], S = diag(1, i) and
// T = diag(e^{i pi/8}, e^{-i pi/8}), all taken up to scalars. A projective
// gate is stored as a quaternion q = (q0, q1, q2, q3) over O standing for
// [[q0 + q1 i, q2 + q3 i], [-q2 + q3 i, q0 - q1 i]]; quaternion
// multiplication is matrix multiplication.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ctsynth/ring.hpp"
#include "ctsynth/su2.hpp"

namespace ctsynth {

/// A word over {H, S, T}, evaluated left to right as a matrix product.
class GateWord {
 public:
  GateWord() = default;
  /// Throws std::invalid_argument on letters outside {H, S, T}.
  explicit GateWord(std::string letters);

  const std::string& str() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int t_count() const;

  GateWord& operator+=(const GateWord& other) {
    letters_ += other.letters_;
    return *this;
  }
  friend GateWord operator+(GateWord a, const GateWord& b) { return a += b; }
  friend bool operator==(const GateWord&, const GateWord&) = default;

 private:
  std::string letters_;
};

/// Number of T letters.
int t_count(const GateWord& w);

/// Element of the group generated by H and T, modulo scalars. The quaternion
/// is kept primitive (not divisible by sqrt2) and scaled by a power of
/// lambda so that its norm is sqrt2^e * lambda^f with f in {0, 1}; f is the
/// parity of the T-count.
class ExactGate {
 public:
  /// Throws std::invalid_argument for the zero quaternion.
  explicit ExactGate(std::array<ZRoot2, 4> q);
  explicit ExactGate(const ExactUnitary& u);

  static ExactGate identity();
  static ExactGate H();
  static ExactGate S();
  static ExactGate T();

  const std::array<ZRoot2, 4>& quaternion() const { return q_; }
  int sqrt2_exponent() const { return e_; }
  int lambda_parity() const { return f_; }

  ExactGate inverse() const;
  friend ExactGate operator*(const ExactGate& x, const ExactGate& y);
  /// Equality in PU(2).
  friend bool operator==(const ExactGate& x, const ExactGate& y);

  /// Least denominator exponent of the SO(3) (Bloch) representation, which
  /// equals the minimal T-count.
  int bloch_lde() const;

  /// The ExactUnitary representative; present iff the T-count is even.
  std::optional<ExactUnitary> to_exact_unitary() const;

  UnitaryTarget to_numeric(long precision_bits) const;

 private:
  void normalize();

  std::array<ZRoot2, 4> q_;
  int e_ = 0;
  int f_ = 0;
};

struct CliffordElement {
  int index;
  GateWord word;
  ExactGate gate;
};

/// The 24 single-qubit Cliffords modulo scalars, each with a shortest word
/// over {H, S} (breadth-first, H before S).
const std::vector<CliffordElement>& clifford_table();
/// Index into clifford_table(), or nullopt for non-Clifford gates.
std::optional<int> clifford_index(const ExactGate& g);

ExactGate evaluate_word(const GateWord& w);
/// ExactUnitary value of a word with an even number of T letters.
std::optional<ExactUnitary> evaluate_word_unitary(const GateWord& w);

/// A word of minimal T-count evaluating to g, in the normal form
/// (T | empty)(HT | SHT)* followed by a Clifford word.
GateWord exact_synthesize(const ExactGate& g);
/// Validates the determinant identity (std::invalid_argument otherwise).
GateWord exact_synthesize(const ExactUnitary& u);

}  // namespace ctsynth
