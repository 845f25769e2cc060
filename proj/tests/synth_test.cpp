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

#include "ctsynth/synth.hpp"

#include <gtest/gtest.h>

#include <deque>
#include <map>
#include <random>
#include <regex>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "reference_data.hpp"

namespace ctsynth {
namespace {

GateWord random_word(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> letter(0, 2);
  std::string s;
  int n = len(rng);
  for (int i = 0; i < n; ++i) s += "HST"[letter(rng)];
  return GateWord(s);
}

bool is_normal_form(const GateWord& w) {
  static const std::regex re("^T?(HT|SHT)*[HS]*$");
  return std::regex_match(w.str(), re);
}

TEST(GateWord, LettersAndTCount) {
  EXPECT_EQ(t_count(GateWord("")), 0);
  EXPECT_EQ(t_count(GateWord("THTSHT")), 3);
  EXPECT_EQ(t_count(GateWord(kReferenceFlank1Word)), 102);
  EXPECT_EQ(t_count(GateWord(kReferenceFlank2Word)), 102);
  EXPECT_EQ(t_count(GateWord(kReferenceGammaWord)), 32);
  EXPECT_THROW(GateWord("HX"), std::invalid_argument);
  EXPECT_THROW(GateWord("h"), std::invalid_argument);
}

TEST(EvaluateWord, SpecExamples) {
  EXPECT_EQ(evaluate_word(GateWord("")), ExactGate::identity());
  EXPECT_EQ(evaluate_word(GateWord("HH")), ExactGate::identity());
  ExactGate z(std::array<ZRoot2, 4>{ZRoot2(0), ZRoot2(1), ZRoot2(0), ZRoot2(0)});
  EXPECT_EQ(evaluate_word(GateWord("SS")), z);
  EXPECT_EQ(evaluate_word(GateWord("TT")), evaluate_word(GateWord("SSS")));
  EXPECT_EQ(evaluate_word(GateWord("TTTTTTTT")), ExactGate::identity());
  EXPECT_EQ(evaluate_word_unitary(GateWord("")), ExactUnitary::identity());
  EXPECT_FALSE(evaluate_word_unitary(GateWord("T")).has_value());
}

TEST(EvaluateWord, ReferenceGammaWordGivesReferenceGamma) {
  ExactGate g = evaluate_word(reference_word(kReferenceGammaWord, kPauliY));
  EXPECT_EQ(g, ExactGate(reference_gamma()));
  auto u = g.to_exact_unitary();
  ASSERT_TRUE(u.has_value());
  EXPECT_TRUE(u->same_element(reference_gamma()));
  // Read literally the word is a different element with the same T-count.
  EXPECT_NE(evaluate_word(GateWord(kReferenceGammaWord)), ExactGate(reference_gamma()));
  EXPECT_EQ(evaluate_word(GateWord(kReferenceGammaWord)).bloch_lde(), 32);
}

TEST(EvaluateWord, ReferenceFlanksApproximateTheirRotations) {
  long prec = 256;
  UnitaryTarget g1 = evaluate_word(reference_word(kReferenceFlank1Word, kPauliX)).to_numeric(prec);
  UnitaryTarget g2 = evaluate_word(reference_word(kReferenceFlank2Word, kPauliY)).to_numeric(prec);
  // The reference angles carry six decimals, so d is at most about (5e-7)^2 / 2.
  EXPECT_LT(metric_d(g1, UnitaryTarget::diagonal(Real::parse("1.477137", prec))), Real(1e-12, prec));
  EXPECT_LT(metric_d(g2, UnitaryTarget::diagonal(Real::parse("-0.421352", prec))), Real(1e-12, prec));
}

TEST(EvaluateWord, ReferenceFactorizationApproximatesReferenceTarget) {
  long prec = 256;
  ExactGate full = evaluate_word(reference_factorization());
  EXPECT_EQ(reference_factorization().t_count(), 236);
  UnitaryTarget g = reference_target(prec);
  Real d = metric_d(g, full.to_numeric(prec));
  EXPECT_LT(d, Real(4.4e-10, prec));
}

TEST(Clifford, TableIsTheCliffordGroup) {
  const auto& table = clifford_table();
  ASSERT_EQ(table.size(), 24u);
  EXPECT_TRUE(table[0].word.empty());
  for (const auto& a : table) {
    EXPECT_EQ(a.word.t_count(), 0);
    EXPECT_EQ(evaluate_word(a.word), a.gate);
    EXPECT_EQ(a.gate.bloch_lde(), 0);
    for (const auto& b : table) ASSERT_TRUE(clifford_index(a.gate * b.gate).has_value());
  }
  EXPECT_FALSE(clifford_index(ExactGate::T()).has_value());
}

TEST(ExactSynthesize, SpecExamples) {
  EXPECT_EQ(exact_synthesize(ExactUnitary::identity()), GateWord(""));
  GateWord h = exact_synthesize(*ExactGate::H().to_exact_unitary());
  EXPECT_EQ(h.t_count(), 0);
  EXPECT_EQ(evaluate_word(h), ExactGate::H());
  ExactUnitary bad{{ZRoot2(1), ZRoot2(1), ZRoot2(0), ZRoot2(0)}, 0};
  EXPECT_THROW(exact_synthesize(bad), std::invalid_argument);
}

TEST(ExactSynthesize, ReferenceGammaHasTCount32) {
  GateWord w = exact_synthesize(reference_gamma());
  EXPECT_EQ(w.t_count(), 32);
  EXPECT_TRUE(is_normal_form(w)) << w.str();
  EXPECT_EQ(evaluate_word(w), ExactGate(reference_gamma()));
}

TEST(ExactSynthesize, RoundTripRandomWords) {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 500; ++i) {
    GateWord w = random_word(rng, 60);
    ExactGate g = evaluate_word(w);
    GateWord s = exact_synthesize(g);
    ASSERT_EQ(evaluate_word(s), g) << w.str();
    ASSERT_LE(s.t_count(), w.t_count()) << w.str();
    ASSERT_EQ(s.t_count(), g.bloch_lde());
    ASSERT_EQ(s.t_count() % 2, g.lambda_parity());
    ASSERT_TRUE(is_normal_form(s)) << s.str();
    ASSERT_EQ(s.str().find("TT"), std::string::npos);
  }
}

TEST(ExactSynthesize, NumericUnitarityOfRandomWords) {
  std::mt19937_64 rng(99);
  const long prec = 128;
  for (int i = 0; i < 1000; ++i) {
    UnitaryTarget u = evaluate_word(random_word(rng, 80)).to_numeric(prec);
    ASSERT_LT(u.unitarity_defect(), Real(1L, prec).ldexp(-prec + 4));
  }
  std::mt19937_64 rng2(7);
  for (int i = 0; i < 200; ++i) {
    GateWord w = random_word(rng2, 40);
    if (w.t_count() % 2 != 0) w += GateWord("T");
    UnitaryTarget u = to_numeric(*evaluate_word_unitary(w), prec);
    ASSERT_LT(u.unitarity_defect(), Real(1L, prec).ldexp(-prec + 4));
    ASSERT_LT(metric_d(u, evaluate_word(w).to_numeric(prec)), Real(1L, prec).ldexp(-prec + 8));
  }
}

TEST(ExactSynthesize, MinimalAgainstBreadthFirstSearch) {
  auto targets = all_exact_unitaries(4);
  ASSERT_GT(targets.size(), 100u);

  const int kMaxT = 12;
  const auto dist = minimal_t_counts(kMaxT);

  std::set<std::string> seen;
  for (const auto& u : targets) {
    ExactGate g(u);
    if (!seen.insert(gate_key(g)).second) continue;
    auto it = dist.find(gate_key(g));
    ASSERT_NE(it, dist.end()) << "not reached within T-count " << kMaxT;
    GateWord w = exact_synthesize(u);
    ASSERT_EQ(w.t_count(), it->second) << u.x[0] << " " << u.x[1] << " " << u.x[2] << " " << u.x[3] << " k=" << u.k;
    ASSERT_EQ(evaluate_word(w), g);
  }
  EXPECT_GT(seen.size(), 24u);
}

}  // namespace
}  // namespace ctsynth
