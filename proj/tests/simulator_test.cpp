// Copyright 2026 The uccc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "uccc/estimation.hpp"
#include "uccc/simulator.hpp"

using namespace uccc;

namespace {

oracle::Mat embed_1q(const oracle::Mat& u, int q, int n) {
  oracle::Mat out = oracle::Mat::Identity(1, 1);
  for (int k = n - 1; k >= 0; --k) out = oracle::kron(out, k == q ? u : oracle::letter('I'));
  return out;
}

}  // namespace

TEST(Simulator, RotationsMatchMatrixExponentials) {
  const int n = 3;
  const double theta = 0.913;
  const std::pair<GateKind, char> cases[] = {{GateKind::Rx, 'X'}, {GateKind::Ry, 'Y'}, {GateKind::Rz, 'Z'}};
  for (const auto& [kind, axis] : cases) {
    for (int q = 0; q < n; ++q) {
      StateVector psi(n, 5);
      psi.apply(Gate{kind, q, -1, -1, Angle::literal(theta)});
      const oracle::Mat u = (oracle::cplx(0, -theta / 2) * oracle::letter(axis)).exp();
      const oracle::Vec want = embed_1q(u, q, n).col(5);
      const oracle::Vec got = Eigen::Map<const oracle::Vec>(psi.amplitudes().data(), 8);
      EXPECT_LT((got - want).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(Simulator, ExpectationMatchesDense) {
  StateVector psi(3);
  psi.apply(Gate::h(0));
  psi.apply(Gate::cx(0, 2));
  psi.apply(Gate::ry(1, Angle::literal(0.4)));
  const QubitOperator op = oracle::qop({{"ZIZ", 0.3}, {"XIX", 0.7}, {"IYI", -0.2}, {"IZI", 0.5}});
  const oracle::Vec v = Eigen::Map<const oracle::Vec>(psi.amplitudes().data(), 8);
  EXPECT_NEAR(psi.expectation(op), (v.adjoint() * to_dense(op, 3) * v)(0, 0).real(), 1e-12);
}

TEST(Simulator, NoiselessSamplingFollowsBornRule) {
  Circuit c(2);
  c.add(Gate::ry(0, Angle::literal(2 * std::acos(std::sqrt(0.8)))));
  c.add(Gate::cx(0, 1));
  c.add(Gate::measure(0, c.add_bit()));
  c.add(Gate::measure(1, c.add_bit()));
  NoiseSpec noise;
  noise.seed = 9;
  const ShotTable t = sample(c, 200000, noise);
  const auto exact = exact_distribution(c);
  EXPECT_NEAR(exact.at("00"), 0.8, 1e-12);
  EXPECT_NEAR(exact.at("11"), 0.2, 1e-12);
  EXPECT_LT(jsd(normalized(t), exact), 1e-4);
  EXPECT_EQ(t.counts.count("01"), 0u);
}

TEST(Simulator, SamplingIsSeedReproducible) {
  Circuit c(2);
  c.add(Gate::h(0));
  c.add(Gate::h(1));
  c.add(Gate::measure(0, c.add_bit()));
  c.add(Gate::measure(1, c.add_bit()));
  NoiseSpec noise;
  noise.seed = 3;
  noise.two_qubit_depolarizing_p = 0.05;
  EXPECT_EQ(sample(c, 1000, noise).counts, sample(c, 1000, noise).counts);
}

TEST(Simulator, MeasurementFlipNoiseDegradesOutcomes) {
  Circuit c(1);
  c.add(Gate::measure(0, c.add_bit()));
  NoiseSpec noise;
  noise.seed = 4;
  noise.measurement_flip_p = 0.1;
  const ShotTable t = sample(c, 100000, noise);
  EXPECT_NEAR(static_cast<double>(t.counts.at("1")) / t.shots, 0.1, 0.005);
}

TEST(Simulator, BranchFollowsRequestedOutcome) {
  Circuit c(1);
  c.add(Gate::h(0));
  c.add(Gate::measure(0, c.add_bit()));
  const Branch b = run_branch(c, StateVector(1), {1});
  EXPECT_NEAR(b.probability, 0.5, 1e-12);
  EXPECT_NEAR(std::abs(b.state.amplitudes()[1]), 1.0, 1e-12);
}

TEST(Simulator, MidCircuitResetAndConditional) {
  Circuit c(2);
  c.add(Gate::x(0));
  const int b0 = c.add_bit();
  c.add(Gate::measure(0, b0));
  c.add(Gate::reset(0));
  c.add(Gate::conditional_x(b0, 1));
  c.add(Gate::measure(0, c.add_bit()));
  c.add(Gate::measure(1, c.add_bit()));
  const ShotTable t = run_with_midcircuit(c, 50, {});
  ASSERT_EQ(t.counts.size(), 1u);
  EXPECT_EQ(t.counts.begin()->first, "101");
}

TEST(ShotTable, CsvAndJsonRoundTrip) {
  ShotTable t;
  t.n_bits = 3;
  t.add("010", 7);
  t.add("111", 2);
  EXPECT_EQ(ShotTable::from_csv(t.to_csv()).counts, t.counts);
  const ShotTable j = ShotTable::from_json_text(t.to_json_text());
  EXPECT_EQ(j.counts, t.counts);
  EXPECT_EQ(j.shots, 9u);
}

TEST(ShotTable, RejectsWrongWidth) {
  ShotTable t;
  t.n_bits = 3;
  EXPECT_ANY_THROW(t.add("01"));
}

TEST(ShotTable, BitStringsAreLittleEndian) {
  EXPECT_EQ(bits_to_string(0b011, 3), "011");
  EXPECT_EQ(string_to_bits("100"), 4u);
}

TEST(Simulator, GatesPreserveNorm) {
  std::mt19937_64 rng(8);
  StateVector psi(4);
  for (int k = 0; k < 200; ++k) {
    const int q = static_cast<int>(rng() % 4);
    const int t = static_cast<int>((q + 1 + rng() % 3) % 4);
    const double a = std::uniform_real_distribution<double>(-3, 3)(rng);
    const Gate gates[] = {Gate::h(q), Gate::x(q), Gate::rx(q, Angle::literal(a)), Gate::ry(q, Angle::literal(a)),
                          Gate::rz(q, Angle::literal(a)), Gate::cx(q, t)};
    psi.apply(gates[rng() % 6]);
    ASSERT_NEAR(psi.norm(), 1.0, 1e-12);
  }
}

TEST(Simulator, ZeroNoiseEqualsNoiseless) {
  Circuit c(3);
  c.add(Gate::h(0));
  c.add(Gate::cx(0, 1));
  c.add(Gate::ry(2, Angle::literal(0.8)));
  c.add(Gate::cx(1, 2));
  for (int q = 0; q < 3; ++q) c.add(Gate::measure(q, c.add_bit()));
  NoiseSpec quiet;
  quiet.seed = 12;
  NoiseSpec zero = quiet;
  zero.two_qubit_depolarizing_p = 0.0;
  zero.measurement_flip_p = 0.0;
  EXPECT_EQ(sample(c, 5000, quiet).counts, sample(c, 5000, zero).counts);
}

TEST(Simulator, DeferredMeasurementMatchesTerminalSampling) {
  // Mid-circuit measurement of qubit 0 whose result is never consumed.
  Circuit mid(2);
  mid.add(Gate::ry(0, Angle::literal(1.1)));
  mid.add(Gate::cx(0, 1));
  mid.add(Gate::measure(0, mid.add_bit()));
  mid.add(Gate::h(1));
  mid.add(Gate::measure(1, mid.add_bit()));
  const ShotTable t = run_with_midcircuit(mid, 100000, NoiseSpec{0.0, 0.0, 21});
  // Terminal-measurement reference: the measurement commutes past H on qubit 1.
  Circuit term(2);
  term.add(Gate::ry(0, Angle::literal(1.1)));
  term.add(Gate::cx(0, 1));
  term.add(Gate::h(1));
  term.add(Gate::measure(0, term.add_bit()));
  term.add(Gate::measure(1, term.add_bit()));
  const auto p = exact_distribution(term);
  double chi2 = 0.0;
  for (const auto& [bits, prob] : p) {
    const double expected = prob * static_cast<double>(t.shots);
    const auto it = t.counts.find(bits);
    const double seen = it == t.counts.end() ? 0.0 : static_cast<double>(it->second);
    chi2 += (seen - expected) * (seen - expected) / expected;
  }
  // 3 degrees of freedom; 16.27 is the 0.999 quantile.
  EXPECT_LT(chi2, 16.27);
}
