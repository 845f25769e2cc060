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

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <utility>

namespace ctsynth {
namespace {

bool all_divisible_by_sqrt2(const std::array<ZRoot2, 4>& q) {
  return std::all_of(q.begin(), q.end(), [](const ZRoot2& x) { return divide_by_sqrt2(x).has_value(); });
}

ZRoot2 norm(const std::array<ZRoot2, 4>& q) { return q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]; }

/// Inverse of a unit of O.
ZRoot2 unit_inverse(const ZRoot2& u) { return galois(u) * ZRoot2(field_norm(u), 0); }

/// f with u = +-lambda^f for a unit u.
int lambda_exponent(ZRoot2 u) {
  if (u.sign() < 0) u = -u;
  int f = 0;
  while (compare(u, ZRoot2(1)) > 0) {
    u *= ZRoot2::lambda_inverse();
    ++f;
  }
  while (compare(u, ZRoot2(1)) < 0) {
    u *= ZRoot2::lambda();
    --f;
  }
  if (!(u == ZRoot2(1))) throw std::logic_error("not a unit of Z[sqrt2]");
  return f;
}

ZRoot2 divide_by_sqrt2_power(const ZRoot2& x, int e) {
  ZRoot2 y = x;
  for (int i = 0; i < e; ++i) y = *divide_by_sqrt2(y);
  return y;
}

}  // namespace

// ---------------------------------------------------------------- GateWord

GateWord::GateWord(std::string letters) : letters_(std::move(letters)) {
  for (char c : letters_) {
    if (c != 'H' && c != 'S' && c != 'T') {
      throw std::invalid_argument(std::string("gate word contains '") + c + "', expected only H, S, T");
    }
  }
}

int GateWord::t_count() const { return static_cast<int>(std::count(letters_.begin(), letters_.end(), 'T')); }

int t_count(const GateWord& w) { return w.t_count(); }

// ---------------------------------------------------------------- ExactGate

ExactGate::ExactGate(std::array<ZRoot2, 4> q) : q_(std::move(q)) { normalize(); }

ExactGate::ExactGate(const ExactUnitary& u) : q_(u.x) { normalize(); }

ExactGate ExactGate::identity() { return ExactGate(std::array<ZRoot2, 4>{ZRoot2(1), ZRoot2(0), ZRoot2(0), ZRoot2(0)}); }
ExactGate ExactGate::H() { return ExactGate(std::array<ZRoot2, 4>{ZRoot2(0), ZRoot2(1), ZRoot2(0), ZRoot2(1)}); }
ExactGate ExactGate::S() { return ExactGate(std::array<ZRoot2, 4>{ZRoot2(1), ZRoot2(-1), ZRoot2(0), ZRoot2(0)}); }
ExactGate ExactGate::T() { return ExactGate(std::array<ZRoot2, 4>{ZRoot2::lambda(), ZRoot2(1), ZRoot2(0), ZRoot2(0)}); }

void ExactGate::normalize() {
  if (std::all_of(q_.begin(), q_.end(), [](const ZRoot2& x) { return x.is_zero(); })) {
    throw std::invalid_argument("zero quaternion is not a gate");
  }
  while (all_divisible_by_sqrt2(q_)) {
    for (auto& x : q_) x = *divide_by_sqrt2(x);
  }
  ZRoot2 n = norm(q_);
  e_ = sqrt2_valuation(n);
  int f = lambda_exponent(divide_by_sqrt2_power(n, e_));
  int half = f >= 0 ? f / 2 : -((-f + 1) / 2);
  if (half != 0) {
    ZRoot2 s = half > 0 ? ZRoot2::lambda_inverse().pow(static_cast<unsigned>(half))
                        : ZRoot2::lambda().pow(static_cast<unsigned>(-half));
    for (auto& x : q_) x *= s;
  }
  f_ = f - 2 * half;
}

ExactGate ExactGate::inverse() const { return ExactGate(std::array<ZRoot2, 4>{q_[0], -q_[1], -q_[2], -q_[3]}); }

ExactGate operator*(const ExactGate& x, const ExactGate& y) {
  const auto& a = x.q_;
  const auto& b = y.q_;
  return ExactGate(std::array<ZRoot2, 4>{a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
                    a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
                    a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
                    a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]});
}

bool operator==(const ExactGate& x, const ExactGate& y) {
  if (x.e_ != y.e_ || x.f_ != y.f_) return false;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (!(x.q_[i] * y.q_[j] == x.q_[j] * y.q_[i])) return false;
    }
  }
  // Proportional quaternions; rule out a zero/non-zero mismatch.
  for (int i = 0; i < 4; ++i) {
    if (x.q_[i].is_zero() != y.q_[i].is_zero()) return false;
  }
  return true;
}

int ExactGate::bloch_lde() const {
  const ZRoot2& w = q_[0];
  const ZRoot2& x = q_[1];
  const ZRoot2& y = q_[2];
  const ZRoot2& z = q_[3];
  const ZRoot2 ww = w * w, xx = x * x, yy = y * y, zz = z * z;
  const ZRoot2 two(2);
  const std::array<ZRoot2, 9> p = {
      ww + xx - yy - zz,         two * (x * y - w * z),     two * (x * z + w * y),
      two * (x * y + w * z),     ww - xx + yy - zz,         two * (y * z - w * x),
      two * (x * z - w * y),     two * (y * z + w * x),     ww - xx - yy + zz,
  };
  ZRoot2 uinv = unit_inverse(divide_by_sqrt2_power(norm(q_), e_));
  int min_val = e_;
  for (const auto& entry : p) {
    if (entry.is_zero()) continue;
    min_val = std::min(min_val, sqrt2_valuation(entry * uinv));
  }
  return std::max(0, e_ - min_val);
}

std::optional<ExactUnitary> ExactGate::to_exact_unitary() const {
  if (f_ != 0) return std::nullopt;
  ZRoot2 n = norm(q_);
  if (e_ % 2 != 0 || !(n == ZRoot2::sqrt2_power(e_))) {
    throw std::logic_error("even-parity gate without an ExactUnitary representative");
  }
  return make_exact_unitary(q_[0], q_[1], q_[2], q_[3], e_ / 2);
}

UnitaryTarget ExactGate::to_numeric(long precision_bits) const {
  long work = precision_bits + 16;
  auto e = [&](int i) { return embed(q_[i], GaloisEmbedding::kPlus, work); };
  Real scale = Real(1L, work) / sqrt(embed(norm(q_), GaloisEmbedding::kPlus, work));
  auto c = [&](int i) { return (e(i) * scale).with_precision(precision_bits); };
  return UnitaryTarget{Complex{c(0), c(1)}, Complex{c(2), c(3)}, precision_bits};
}

// ---------------------------------------------------------------- Cliffords

const std::vector<CliffordElement>& clifford_table() {
  static const std::vector<CliffordElement> table = [] {
    std::vector<CliffordElement> out;
    std::deque<std::pair<GateWord, ExactGate>> queue;
    queue.emplace_back(GateWord(), ExactGate::identity());
    const std::array<std::pair<char, ExactGate>, 2> gens = {{{'H', ExactGate::H()}, {'S', ExactGate::S()}}};
    while (!queue.empty()) {
      auto [word, gate] = queue.front();
      queue.pop_front();
      bool seen = std::any_of(out.begin(), out.end(), [&](const CliffordElement& c) { return c.gate == gate; });
      if (seen) continue;
      out.push_back({static_cast<int>(out.size()), word, gate});
      for (const auto& [letter, g] : gens) queue.emplace_back(word + GateWord(std::string(1, letter)), gate * g);
    }
    return out;
  }();
  return table;
}

std::optional<int> clifford_index(const ExactGate& g) {
  if (g.bloch_lde() != 0) return std::nullopt;
  for (const auto& c : clifford_table()) {
    if (c.gate == g) return c.index;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- words

ExactGate evaluate_word(const GateWord& w) {
  static const ExactGate h = ExactGate::H();
  static const ExactGate s = ExactGate::S();
  static const ExactGate t = ExactGate::T();
  ExactGate g = ExactGate::identity();
  for (char c : w.str()) g = g * (c == 'H' ? h : (c == 'S' ? s : t));
  return g;
}

std::optional<ExactUnitary> evaluate_word_unitary(const GateWord& w) { return evaluate_word(w).to_exact_unitary(); }

GateWord exact_synthesize(const ExactGate& target) {
  static const std::array<std::pair<GateWord, ExactGate>, 3> syllables = {{
      {GateWord("T"), ExactGate::T().inverse()},
      {GateWord("HT"), (ExactGate::H() * ExactGate::T()).inverse()},
      {GateWord("SHT"), (ExactGate::S() * ExactGate::H() * ExactGate::T()).inverse()},
  }};
  GateWord word;
  ExactGate g = target;
  int k = g.bloch_lde();
  while (k > 0) {
    bool reduced = false;
    for (const auto& [name, inv] : syllables) {
      ExactGate h = inv * g;
      int kh = h.bloch_lde();
      if (kh < k) {
        word += name;
        g = h;
        k = kh;
        reduced = true;
        break;
      }
    }
    if (!reduced) throw std::logic_error("no syllable lowers the denominator exponent");
  }
  auto idx = clifford_index(g);
  if (!idx) throw std::logic_error("residual gate is not a Clifford");
  return word + clifford_table()[static_cast<std::size_t>(*idx)].word;
}

GateWord exact_synthesize(const ExactUnitary& u) {
  ExactUnitary checked = make_exact_unitary(u.x[0], u.x[1], u.x[2], u.x[3], u.k);
  return exact_synthesize(ExactGate(checked));
}

}  // namespace ctsynth
