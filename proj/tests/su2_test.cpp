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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ctsynth/ring.hpp"
#include "reference_data.hpp"

namespace ctsynth {
namespace {

constexpr long kPrec = 256;

Real tiny() { return Real(1L, kPrec).ldexp(-kPrec + 8); }

UnitaryTarget random_target(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  double x[4];
  for (double& v : x) v = normal(rng);
  double n = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]);
  return UnitaryTarget::from_components(Real(x[0] / n, kPrec), Real(x[1] / n, kPrec), Real(x[2] / n, kPrec),
                                        Real(x[3] / n, kPrec));
}

// u(|a| e^{i p}, |b| e^{i q}) with |a| = modulus.
UnitaryTarget with_modulus(const Real& modulus, const Real& p, const Real& q) {
  Real other = sqrt(Real(1L, kPrec) - modulus * modulus);
  Complex a = Complex::polar(modulus, p);
  Complex b = Complex::polar(other, q);
  return UnitaryTarget::from_components(a.re, a.im, b.re, b.im);
}

TEST(Metric, Examples) {
  UnitaryTarget id = UnitaryTarget::identity(kPrec);
  EXPECT_TRUE(metric_d(id, id).is_zero());
  for (double theta : {0.1, 1.2, 2.9, -0.7}) {
    Real d = metric_d(UnitaryTarget::diagonal(Real(theta, kPrec)), id);
    EXPECT_NEAR(d.to_double(), 1 - std::abs(std::cos(theta)), 1e-15);
  }
  Real d = metric_d(reference_target(kPrec), id);
  EXPECT_LT(abs(d - Real(2L, kPrec) / Real(3L, kPrec)), tiny());
}

TEST(Metric, SymmetryInvarianceAndRange) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    UnitaryTarget x = random_target(rng);
    UnitaryTarget y = random_target(rng);
    UnitaryTarget u = random_target(rng);
    Real d = metric_d(x, y);
    EXPECT_GE(d.sign(), 0);
    EXPECT_LE(d, Real(1L, kPrec));
    EXPECT_LT(abs(d - metric_d(y, x)), tiny());
    EXPECT_LT(abs(d - metric_d(u * x, u * y)), tiny());
    EXPECT_LT(abs(d - metric_d(x * u, y * u)), tiny());
    UnitaryTarget minus_x{Complex{-x.alpha.re, -x.alpha.im}, Complex{-x.beta.re, -x.beta.im}, kPrec};
    EXPECT_LT(abs(d - metric_d(minus_x, y)), tiny());
    EXPECT_LT(metric_d(x, x * x.adjoint() * x), tiny());
  }
}

TEST(Target, RejectsNonUnitaryInput) {
  Real one(1L, kPrec);
  EXPECT_THROW(UnitaryTarget::from_components(one, one, Real(kPrec), Real(kPrec)), std::invalid_argument);
  UnitaryTarget t = UnitaryTarget::from_components(Real(0.6000001, kPrec), Real(kPrec), Real(0.8, kPrec), Real(kPrec));
  EXPECT_LT(t.unitarity_defect(), tiny());
}

TEST(RotationAngles, IdentityWhenMiddleEqualsTarget) {
  std::mt19937_64 rng(2);
  UnitaryTarget g = random_target(rng);
  RotationAngles a = compute_rotation_angles(g, g);
  EXPECT_LT(abs(a.theta1.theta), tiny());
  EXPECT_LT(abs(a.theta2.theta), tiny());
  EXPECT_FALSE(a.degenerate);
}

TEST(RotationAngles, Roundtrip) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> angle(-3, 3);
  for (int i = 0; i < 100; ++i) {
    UnitaryTarget middle = random_target(rng);
    Real t1(angle(rng), kPrec);
    Real t2(angle(rng), kPrec);
    UnitaryTarget target = UnitaryTarget::diagonal(t1) * middle * UnitaryTarget::diagonal(t2);
    RotationAngles a = compute_rotation_angles(target, middle);
    UnitaryTarget rebuilt =
        UnitaryTarget::diagonal(a.theta1.theta) * middle * UnitaryTarget::diagonal(a.theta2.theta);
    EXPECT_LT(metric_d(target, rebuilt), tiny());
  }
}

TEST(RotationAngles, WorkedExample) {
  RotationAngles a = compute_rotation_angles(reference_target(kPrec), to_numeric(reference_gamma(), kPrec));
  EXPECT_NEAR(a.theta1.theta.to_double(), 1.477137, 5e-7);
  EXPECT_NEAR(a.theta2.theta.to_double(), -0.421352, 5e-7);
}

TEST(RotationAngles, DegenerateMiddle) {
  UnitaryTarget target = UnitaryTarget::diagonal(Real(0.4, kPrec));
  RotationAngles a = compute_rotation_angles(target, UnitaryTarget::identity(kPrec));
  EXPECT_TRUE(a.degenerate);
  UnitaryTarget rebuilt = UnitaryTarget::diagonal(a.theta1.theta) * UnitaryTarget::diagonal(a.theta2.theta);
  EXPECT_LT(metric_d(target, rebuilt), tiny());
}

TEST(LemmaConstants, ReferenceValues) {
  LemmaConstants c = LemmaConstants::reference(kPrec);
  EXPECT_NEAR(c.c.to_double(), 2.4 + 1.2e-9, 1e-15);
  EXPECT_NEAR(c.c_tilde.to_double(), std::sqrt(1 + c.c.to_double() * c.c.to_double()), 1e-15);
  Real bound = lemma_bound(c, Real::parse("1e-10", kPrec));
  EXPECT_NEAR(bound.to_double(), 4.6e-10, 1e-12);
  EXPECT_THROW(lemma_bound(c, Real::parse("1e-9", kPrec)), std::invalid_argument);
  EXPECT_LT(lemma_bound(c, Real::parse("1e-40", kPrec)), Real::parse("1e-39", kPrec));
}

TEST(LemmaConstants, LimitingValues) {
  Real tiny_eps = Real::parse("1e-30", kPrec);
  LemmaConstants c = LemmaConstants::make(tiny_eps, Real(1L, kPrec) - tiny_eps);
  EXPECT_NEAR(c.c.to_double(), 2, 1e-15);
  EXPECT_NEAR(c.c_tilde.to_double(), std::sqrt(5.0), 1e-15);
}

TEST(LemmaConstants, Validation) {
  Real half(0.5, kPrec);
  Real small(0.1, kPrec);
  EXPECT_THROW(LemmaConstants::make(half, small), std::invalid_argument);
  EXPECT_THROW(LemmaConstants::make(Real(kPrec), small), std::invalid_argument);
  EXPECT_THROW(LemmaConstants::make(small, Real(1L, kPrec)), std::invalid_argument);
  EXPECT_THROW(LemmaConstants::make(small, Real(kPrec)), std::invalid_argument);
  LemmaConstants d = LemmaConstants::defaults_for(Real::parse("1e-6", kPrec));
  EXPECT_NEAR(d.eps_tilde.to_double(), 1e-5, 1e-20);
  EXPECT_NEAR(d.eps0.to_double(), 1e-3, 1e-18);
  EXPECT_NEAR(LemmaConstants::reference(kPrec).alpha_threshold().to_double(), std::sqrt(11.0) / 6, 1e-15);
}

TEST(Closeness, Norms) {
  std::mt19937_64 rng(4);
  LemmaConstants c = LemmaConstants::make(Real(0.1, kPrec), Real(5L, kPrec) / Real(6L, kPrec));
  double limit = c.alpha_threshold().to_double();
  std::uniform_real_distribution<double> unit(0, 1);
  std::uniform_real_distribution<double> sym(-1, 1);
  for (int i = 0; i < 1000; ++i) {
    double eps = 0.1 * unit(rng);
    double a1 = limit * unit(rng);
    double a2 = std::clamp(a1 + eps * sym(rng), 0.0, 1.0);
    double b1 = std::sqrt(1 - a1 * a1);
    double b2 = std::sqrt(1 - a2 * a2);
    EXPECT_LT(std::abs(b1 - b2), c.c.to_double() * eps);
  }
}

TEST(Closeness, Approx) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0, 1);
  std::uniform_real_distribution<double> sym(-1, 1);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  for (int i = 0; i < 100; ++i) {
    Real eps_tilde(0.4 * unit(rng) + 0.01, kPrec);
    Real eps0(0.2 + 0.75 * unit(rng), kPrec);
    LemmaConstants c = LemmaConstants::make(eps_tilde, eps0);
    Real eps = eps_tilde * Real(unit(rng), kPrec);
    Real a1 = c.alpha_threshold() * Real(unit(rng), kPrec);
    Real a2 = max(Real(kPrec), min(Real(1L, kPrec), a1 + eps * Real(sym(rng), kPrec)));
    UnitaryTarget g1 = with_modulus(a1, Real(angle(rng), kPrec), Real(angle(rng), kPrec));
    UnitaryTarget g2 = with_modulus(a2, Real(angle(rng), kPrec), Real(angle(rng), kPrec));
    RotationAngles t = compute_rotation_angles(g1, g2);
    UnitaryTarget rebuilt = UnitaryTarget::diagonal(t.theta1.theta) * g2 * UnitaryTarget::diagonal(t.theta2.theta);
    EXPECT_LT(metric_d(g1, rebuilt), c.c_tilde * eps) << i;
  }
}

}  // namespace
}  // namespace ctsynth
