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

#include "ctsynth/ring.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace ctsynth {
namespace {

double approx(const ZRoot2& x) { return x.a().get_d() + x.b().get_d() * std::sqrt(2.0); }

std::complex<double> approx(const ZOmega& z) {
  const std::complex<double> w = std::polar(1.0, M_PI / 4);
  return z.a().get_d() + z.b().get_d() * w + z.c().get_d() * w * w + z.d().get_d() * w * w * w;
}

std::vector<ZRoot2> small_box(long r) {
  std::vector<ZRoot2> out;
  for (long a = -r; a <= r; ++a) {
    for (long b = -r; b <= r; ++b) out.emplace_back(a, b);
  }
  return out;
}

ExactUnitary reference_gamma() {
  return make_exact_unitary({-121, 145}, {123, -192}, {103, 78}, {-211, -157}, 18);
}

TEST(ZRoot2, SpecExamples) {
  EXPECT_EQ(ZRoot2(1, 1) * ZRoot2(1, -1), ZRoot2(-1, 0));
  EXPECT_EQ(ZRoot2(3, 2) * ZRoot2(3, -2), ZRoot2(1, 0));
  EXPECT_EQ(ZRoot2(7, -3) * ZRoot2(1), ZRoot2(7, -3));
  EXPECT_EQ(galois(ZRoot2(3, 2)), ZRoot2(3, -2));
  EXPECT_EQ(galois(ZRoot2(5, 0)), ZRoot2(5, 0));
  EXPECT_EQ(field_norm(ZRoot2::lambda()), -1);
  EXPECT_EQ(field_norm(ZRoot2(3, 1)), 7);
  EXPECT_EQ(field_norm(ZRoot2(0)), 0);
  EXPECT_EQ(divide_by_sqrt2(ZRoot2(2, 3)), ZRoot2(3, 1));
  EXPECT_FALSE(divide_by_sqrt2(ZRoot2(1, 0)).has_value());
  EXPECT_EQ(divide_by_sqrt2(ZRoot2(0)), ZRoot2(0));
}

TEST(ZRoot2, RingAxiomsExhaustive) {
  auto box = small_box(5);
  for (const auto& x : box) {
    EXPECT_EQ(galois(galois(x)), x);
    for (const auto& y : box) {
      ASSERT_EQ(x * y, y * x);
      ASSERT_EQ(x + y, y + x);
      ASSERT_EQ((x - y) + y, x);
      ASSERT_EQ(field_norm(x * y), field_norm(x) * field_norm(y));
      ASSERT_EQ(galois(x * y), galois(x) * galois(y));
      for (const auto& z : box) {
        ASSERT_EQ((x * y) * z, x * (y * z));
        ASSERT_EQ(x * (y + z), x * y + x * z);
      }
    }
  }
}

TEST(ZRoot2, NormMultiplicativeRandom) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-1000000, 1000000);
  for (int i = 0; i < 2000; ++i) {
    ZRoot2 x(d(rng), d(rng));
    ZRoot2 y(d(rng), d(rng));
    ASSERT_EQ(field_norm(x * y), field_norm(x) * field_norm(y));
  }
}

TEST(ZRoot2, SignIsExact) {
  for (const auto& x : small_box(30)) {
    double v = approx(x);
    int expected = v > 0 ? 1 : (v < 0 ? -1 : 0);
    ASSERT_EQ(x.sign(), expected) << x;
    double w = x.a().get_d() - x.b().get_d() * std::sqrt(2.0);
    ASSERT_EQ(x.sign(GaloisEmbedding::kMinus), w > 0 ? 1 : (w < 0 ? -1 : 0)) << x;
  }
  // lambda^-60 is positive but tiny: a - b sqrt2 with huge cancelling terms.
  ZRoot2 tiny = ZRoot2::lambda_inverse().pow(60);
  EXPECT_EQ(tiny.sign(), 1);
  EXPECT_EQ(galois(tiny).sign(), 1);
  EXPECT_EQ((-tiny).sign(), -1);
}

TEST(ZRoot2, EmbedHasRelativeAccuracy) {
  long prec = 64;
  Real v = embed(ZRoot2::lambda(), GaloisEmbedding::kPlus, prec);
  EXPECT_LT(abs(v - (Real(1L, 200) + Real::sqrt2(200))), Real(1L, 200).ldexp(-62));
  Real w = embed(ZRoot2::lambda(), GaloisEmbedding::kMinus, prec);
  EXPECT_LT(abs(w - (Real(1L, 200) - Real::sqrt2(200))), Real(1L, 200).ldexp(-62));
  EXPECT_TRUE(embed(ZRoot2(0), GaloisEmbedding::kMinus, prec).is_zero());

  // lambda^-80 = (-1)^80 (1 - sqrt2)^80... its sigma_+ image is lambda^-80 ~ 1e-31.
  ZRoot2 tiny = ZRoot2::lambda_inverse().pow(80);
  Real got = embed(tiny, GaloisEmbedding::kPlus, 64);
  Real want = Real(1L, 400) / embed(ZRoot2::lambda().pow(80), GaloisEmbedding::kPlus, 400);
  EXPECT_LT(abs(got - want) / want, Real(1L, 400).ldexp(-62));

  // Embeddings differ by 2 b sqrt2.
  ZRoot2 x(12345, -678);
  Real diff = embed(x, GaloisEmbedding::kPlus, 128) - embed(x, GaloisEmbedding::kMinus, 128);
  EXPECT_LT(abs(diff - Real(-1356L, 128) * Real::sqrt2(128)), Real(1L, 128).ldexp(-100));
}

TEST(ZRoot2, EuclideanDivisionAndGcd) {
  EXPECT_EQ(ZRoot2(7).divide_exact(ZRoot2(3, 1)), ZRoot2(3, -1));
  EXPECT_FALSE(ZRoot2(3).divide_exact(ZRoot2(3, 1)).has_value());
  ZRoot2 g = gcd(ZRoot2(7) * ZRoot2(5, 2), ZRoot2(3, 1) * ZRoot2(11));
  EXPECT_EQ(std::abs(field_norm(g).get_si()), 7);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-500, 500);
  for (int i = 0; i < 300; ++i) {
    ZRoot2 x(d(rng), d(rng));
    ZRoot2 y(d(rng), d(rng));
    if (y.is_zero()) continue;
    ZRoot2 r = x - x.divide_rounded(y) * y;
    ASSERT_LT(abs(field_norm(r)), abs(field_norm(y)));
  }
  EXPECT_EQ(sqrt2_valuation(ZRoot2(8)), 6);
  EXPECT_EQ(sqrt2_valuation(ZRoot2(2, 3)), 1);
}

TEST(ZOmega, ArithmeticMatchesComplexNumbers) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-20, 20);
  for (int i = 0; i < 500; ++i) {
    ZOmega x(d(rng), d(rng), d(rng), d(rng));
    ZOmega y(d(rng), d(rng), d(rng), d(rng));
    ASSERT_LT(std::abs(approx(x * y) - approx(x) * approx(y)), 1e-6);
    ASSERT_LT(std::abs(approx(x.conj()) - std::conj(approx(x))), 1e-9);
    ASSERT_LT(std::abs(approx(x.times_omega()) - approx(x) * std::polar(1.0, M_PI / 4)), 1e-9);
    ASSERT_NEAR(approx(x.norm_sq()), std::norm(approx(x)), 1e-6);
    ASSERT_EQ(x.norm_sq(), (x * x.conj()).to_complex()->re);
  }
}

TEST(ZOmega, ComplexRoundTripAndGcd) {
  ZRoot2Complex z{ZRoot2(3, -2), ZRoot2(-1, 5)};
  auto back = ZOmega::from_complex(z).to_complex();
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(*back, z);
  EXPECT_FALSE(ZOmega::omega().to_complex().has_value());
  EXPECT_EQ(ZOmega::i().to_complex(), (ZRoot2Complex{ZRoot2(0), ZRoot2(1)}));

  // 17 = |4 + i|^2; gcd(17, 4 + i) recovers a divisor of norm-square 17 (up to units).
  ZOmega g = gcd(ZOmega::from_real(ZRoot2(17)), ZOmega::from_real(ZRoot2(4)) + ZOmega::i());
  EXPECT_EQ(g.absolute_norm(), 17 * 17);
}

TEST(ExactUnitary, SpecExamples) {
  ExactUnitary id = make_exact_unitary(1, 0, 0, 0, 0);
  EXPECT_EQ(id, ExactUnitary::identity());
  ExactUnitary z = make_exact_unitary(0, 1, 0, 0, 0);
  UnitaryTarget zn = to_numeric(z, 64);
  EXPECT_TRUE(zn.alpha.re.is_zero());
  EXPECT_EQ(zn.alpha.im, Real(1L, 64));

  ExactUnitary g = reference_gamma();
  EXPECT_EQ(g.k, 18);
  EXPECT_TRUE(g.is_reduced());
  UnitaryTarget gn = to_numeric(g, 128);
  EXPECT_LT(abs(gn.alpha.abs() - Real(1L, 128) / Real(3L, 128)), Real(1e-9, 128));
  EXPECT_LT(gn.unitarity_defect(), Real(1L, 128).ldexp(-124));

  EXPECT_THROW(make_exact_unitary(1, 1, 0, 0, 0), std::invalid_argument);
  EXPECT_THROW(make_exact_unitary(1, 0, 0, 0, -1), std::invalid_argument);
}

TEST(ExactUnitary, ReductionIsIdempotent) {
  // sqrt2^3 * (1, 1, 0, 0) over sqrt2^(1 + 3).
  ZRoot2 s3 = ZRoot2::sqrt2_power(3);
  ExactUnitary u = make_exact_unitary(s3, s3, 0, 0, 4);
  EXPECT_EQ(u.k, 1);
  EXPECT_EQ(u.x[0], ZRoot2(1));
  EXPECT_TRUE(u.is_reduced());
  ExactUnitary again = make_exact_unitary(u.x[0], u.x[1], u.x[2], u.x[3], u.k);
  EXPECT_EQ(again, u);
  EXPECT_TRUE(u.same_element(make_exact_unitary(-1, -1, 0, 0, 1)));
  EXPECT_FALSE(u.same_element(make_exact_unitary(1, -1, 0, 0, 1)));
}

}  // namespace
}  // namespace ctsynth
