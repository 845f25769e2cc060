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

#include "ctsynth/su2.hpp"

#include <algorithm>
#include <stdexcept>

namespace ctsynth {

UnitaryTarget UnitaryTarget::from_components(const Real& alpha_re, const Real& alpha_im, const Real& beta_re,
                                             const Real& beta_im, double tolerance) {
  long prec = std::max({alpha_re.precision(), alpha_im.precision(), beta_re.precision(), beta_im.precision()});
  Complex alpha{alpha_re.with_precision(prec), alpha_im.with_precision(prec)};
  Complex beta{beta_re.with_precision(prec), beta_im.with_precision(prec)};
  Real norm_sq = alpha.norm_sq() + beta.norm_sq();
  if (abs(norm_sq - Real(1L, prec)) > Real(tolerance, prec)) {
    throw std::invalid_argument("target is not unitary: |alpha|^2 + |beta|^2 = " + norm_sq.to_string(12));
  }
  Real scale = Real(1L, prec) / sqrt(norm_sq);
  return UnitaryTarget{scale * alpha, scale * beta, prec};
}

UnitaryTarget UnitaryTarget::diagonal(const Real& theta) {
  long prec = theta.precision();
  return UnitaryTarget{Complex{cos(theta), sin(theta)}, Complex{Real(prec), Real(prec)}, prec};
}

UnitaryTarget UnitaryTarget::identity(long precision_bits) {
  return UnitaryTarget{Complex{Real(1L, precision_bits), Real(precision_bits)},
                       Complex{Real(precision_bits), Real(precision_bits)}, precision_bits};
}

Real UnitaryTarget::unitarity_defect() const {
  return abs(alpha.norm_sq() + beta.norm_sq() - Real(1L, precision_bits));
}

UnitaryTarget UnitaryTarget::adjoint() const {
  // u(a, b)^* = u(conj(a), -b)
  return UnitaryTarget{alpha.conj(), Complex{-beta.re, -beta.im}, precision_bits};
}

UnitaryTarget operator*(const UnitaryTarget& x, const UnitaryTarget& y) {
  Complex alpha = x.alpha * y.alpha - x.beta * y.beta.conj();
  Complex beta = x.alpha * y.beta + x.beta * y.alpha.conj();
  return UnitaryTarget{alpha, beta, std::max(x.precision_bits, y.precision_bits)};
}

LemmaConstants LemmaConstants::make(const Real& eps_tilde, const Real& eps0) {
  long prec = std::max(eps_tilde.precision(), eps0.precision());
  Real one(1L, prec);
  if (!(eps_tilde > Real(prec)) || !(eps_tilde < one.ldexp(-1))) {
    throw std::invalid_argument("eps_tilde must lie in (0, 1/2), got " + eps_tilde.to_string(6));
  }
  if (!(eps0 > Real(prec)) || !(eps0 < one)) {
    throw std::invalid_argument("eps0 must lie in (0, 1), got " + eps0.to_string(6));
  }
  Real c = (Real(2L, prec) + eps_tilde) / eps0;
  Real c_tilde = sqrt(one + c * c);
  return LemmaConstants{eps_tilde, eps0, c, c_tilde};
}

LemmaConstants LemmaConstants::defaults_for(const Real& epsilon) {
  long prec = epsilon.precision();
  Real eps_tilde = min(Real(10L, prec) * epsilon, Real(49L, prec) / Real(100L, prec));
  Real eps0 = min(Real(5L, prec) / Real(6L, prec), sqrt(epsilon));
  return make(eps_tilde, eps0);
}

LemmaConstants LemmaConstants::reference(long precision_bits) {
  return make(Real::parse("1e-9", precision_bits), Real(5L, precision_bits) / Real(6L, precision_bits));
}

Real LemmaConstants::alpha_threshold() const { return sqrt(Real(1L, eps0.precision()) - eps0 * eps0); }

Real metric_d(const UnitaryTarget& x, const UnitaryTarget& y) {
  // tr(x^* y) = 2 Re(conj(a_x) a_y + b_x conj(b_y))
  Complex s = x.alpha.conj() * y.alpha + x.beta * y.beta.conj();
  Real d = Real(1L, std::max(x.precision_bits, y.precision_bits)) - abs(s.re);
  // Rounding can push a perfect match a hair below zero.
  if (d.sign() < 0) d = Real(d.precision());
  return d;
}

RotationAngles compute_rotation_angles(const UnitaryTarget& target, const UnitaryTarget& middle) {
  Real sum = target.alpha.arg() - middle.alpha.arg();   // theta1 + theta2
  Real diff = target.beta.arg() - middle.beta.arg();    // theta1 - theta2
  bool degenerate = false;
  if (target.alpha.norm_sq().is_zero() || middle.alpha.norm_sq().is_zero()) {
    sum = Real(sum.precision());
    degenerate = true;
  }
  if (target.beta.norm_sq().is_zero() || middle.beta.norm_sq().is_zero()) {
    diff = Real(diff.precision());
    degenerate = true;
  }
  RotationAngles angles{{(sum + diff).ldexp(-1)}, {(sum - diff).ldexp(-1)}, degenerate};
  return angles;
}

Real lemma_bound(const LemmaConstants& consts, const Real& epsilon) {
  if (!(epsilon < consts.eps_tilde)) {
    throw std::invalid_argument("epsilon " + epsilon.to_string(6) + " must be below eps_tilde " +
                                consts.eps_tilde.to_string(6));
  }
  return (consts.c_tilde + Real(2L, consts.c_tilde.precision())) * epsilon;
}

}  // namespace ctsynth
