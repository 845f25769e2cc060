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

// Data of the worked example: the target, the middle piece and the reference
// gate words.

#pragma once

#include <string>

#include "ctsynth/ring.hpp"
#include "ctsynth/su2.hpp"
#include "ctsynth/synth.hpp"

namespace ctsynth {

inline const char* kReferenceGammaWord =
    "THTHTSHTHTSHTHTHTSHTHTSHTSHTSHTSHTSHTSHT"
    "SHTSHTSHTHTSHTSHTSHTSHTSHTSHTSHTSHTSHTHT"
    "SHTSHTSHSSSHH";

inline const char* kReferenceFlank1Word =
    "SHTHTSHTSHTSHTHTSHTHTHTHTHTSHTHTSHTSHTHT"
    "SHTSHTSHTHTHTSHTSHTHTHTSHTHTHTSHTSHTSHTH"
    "THTHTSHTSHTSHTSHTHTSHTHTSHTSHTHTSHTHTSHT"
    "SHTHTSHTHTSHTHTHTSHTSHTSHTHTSHTSHTSHTSHT"
    "HTHTHTHTHTSHTSHTSHTHTHTSHTHTSHTHTSHTSHTS"
    "HTHTSHTHTHTHTSHTSHTSHTHTHTSHTSHTHTHTHTSH"
    "THTHTHTSHTHTSHTSHTHSSSHHSSS";

inline const char* kReferenceFlank2Word =
    "HTSHTHTSHTSHTSHTSHTHTHTSHTHTHTSHTHTHTSHT"
    "HTHTHTHTHTSHTSHTHTSHTSHTHTHTSHTSHTHTHTSH"
    "TSHTSHTSHTHTSHTHTHTSHTSHTHTSHTSHTSHTHTHT"
    "HTSHTSHTHTHTHTSHTHTHTHTHTHTSHTHTSHTSHTSH"
    "THTSHTSHTHTHTSHTHTSHTHTHTHTSHTHTSHTHTSHT"
    "SHTHTSHTSHTHTHTSHTSHTSHTSHTHTHTSHTSHTHTH"
    "THTHTSHTHTSHTSSSHH";

inline ExactUnitary reference_gamma() {
  return make_exact_unitary({-121, 145}, {123, -192}, {103, 78}, {-211, -157}, 18);
}

/// g = (1/3) [[1, 2 + 2i], [-2 + 2i, 1]].
inline UnitaryTarget reference_target(long prec) {
  Real third = Real(1L, prec) / Real(3L, prec);
  return UnitaryTarget::from_components(third, Real(prec), third * Real(2L, prec), third * Real(2L, prec));
}

inline const std::string kPauliX = "HSSH";
inline const std::string kPauliY = "HSSHSS";

/// The reference words use T = diag(1, omega), which is our T^-1 = TS up to
/// phase, and their Clifford tails omit a final Pauli: X after the first
/// flank and Y after the middle piece and the second flank.
inline GateWord reference_word(const std::string& word, const std::string& pauli) {
  std::string w;
  for (char c : word) w += c == 'T' ? std::string("TS") : std::string(1, c);
  return GateWord(w + pauli);
}

/// The full reference factorization of the worked example in our convention.
inline GateWord reference_factorization() {
  return reference_word(kReferenceFlank1Word, kPauliX) + reference_word(kReferenceGammaWord, kPauliY) +
         reference_word(kReferenceFlank2Word, kPauliY);
}

}  // namespace ctsynth
