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

// Numerical geometry of SU(2)/PU(2).
//
// Elements are written u(alpha, beta) = [[alpha, beta], [-conj(beta), conj(alpha)]]
// with |alpha|^2 + |beta|^2 = 1, and u(theta) = u(e^{i theta}, 0). The distance
// used throughout is d(x, y) = 1 - |tr(x^* y)| / 2, which is blind to global
// phase and therefore well defined on PU(2).

#pragma once

#include "ctsynth/real.hpp"

namespace ctsynth {

struct UnitaryTarget {
  Complex alpha;
  Complex beta;
  long precision_bits = Real::kDefaultPrecision;

  /// Builds u(alpha, beta) from its four real components. The input must be
  /// unit norm within `tolerance`; it is then renormalised at working
  /// precision. Throws std::invalid_argument otherwise.
  static UnitaryTarget from_components(const Real& alpha_re, const Real& alpha_im, const Real& beta_re,
                                       const Real& beta_im, double tolerance = 1e-6);

  /// The diagonal element u(theta).
  static UnitaryTarget diagonal(const Real& theta);

  static UnitaryTarget identity(long precision_bits);

  /// | |alpha|^2 + |beta|^2 - 1 |
  Real unitarity_defect() const;

  UnitaryTarget adjoint() const;
  friend UnitaryTarget operator*(const UnitaryTarget& x, const UnitaryTarget& y);
};

struct DiagonalRotation {
  Real theta;
};

/// Constants of the closeness bounds: c = (2 + eps_tilde)/eps0 and
/// c_tilde = sqrt(1 + c^2).
struct LemmaConstants {
  Real eps_tilde;
  Real eps0;
  Real c;
  Real c_tilde;

  /// Validates eps_tilde in (0, 1/2) and eps0 in (0, 1).
  static LemmaConstants make(const Real& eps_tilde, const Real& eps0);

  /// Constants used when the caller supplies none: eps_tilde = 10 eps and
  /// eps0 = min(5/6, sqrt(eps)), so that near-diagonal targets are handled
  /// by a single diagonal approximation within the same budget.
  static LemmaConstants defaults_for(const Real& epsilon);

  /// The instantiation of the worked example: eps_tilde = 1e-9, eps0 = 5/6.
  static LemmaConstants reference(long precision_bits);

  /// Targets with |alpha| below this threshold go through the three-piece
  /// decomposition; the rest are treated as near-diagonal.
  Real alpha_threshold() const;
};

/// d(x, y) = 1 - |Re(conj(alpha_x) alpha_y + beta_x conj(beta_y))|, in [0, 1].
Real metric_d(const UnitaryTarget& x, const UnitaryTarget& y);

struct RotationAngles {
  DiagonalRotation theta1;
  DiagonalRotation theta2;
  /// Set when an entry of either argument vanishes and only one of
  /// theta1 +- theta2 is determined; the free combination is fixed to 0.
  bool degenerate = false;
};

/// Angles with u(theta1) * middle * u(theta2) matching the entrywise
/// arguments of `target`:
///   theta1 = (arg a1 - arg a2 + arg b1 - arg b2) / 2
///   theta2 = (arg a1 - arg a2 - arg b1 + arg b2) / 2
RotationAngles compute_rotation_angles(const UnitaryTarget& target, const UnitaryTarget& middle);

/// (c_tilde + 2) * eps, the end-to-end guarantee of the three-piece
/// decomposition. Throws std::invalid_argument unless eps < eps_tilde.
Real lemma_bound(const LemmaConstants& consts, const Real& epsilon);

}  // namespace ctsynth
