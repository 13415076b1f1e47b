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
#include "uccc/qse.hpp"
#include "uccc/synthesis.hpp"
#include "uccc/vqe.hpp"

using namespace uccc;

namespace {

StateVector ground(const MolecularModel& m, const QubitOperator& h) {
  const Circuit c = synthesize(Strategy::ChemicallyAware, m, generate_uccsd_pool(m));
  return run_statevector(bind_parameters(c, vqe_optimize(h, c).parameters));
}

}  // namespace

TEST(Qse, IdentityOnlyReturnsGroundEnergy) {
  const MolecularModel m = load_model_json(oracle::fixture("h2.json"));
  const QubitOperator h = hamiltonian_from_model(m);
  const std::vector<ExpansionOperator> ops{{"I", FermionOperator::identity()}};
  const auto ev = exact_expectations(ground(m, h), required_strings(qse_operators(h, ops)));
  const QseResult r = qse_solve(h, ops, ev);
  ASSERT_EQ(r.eigenvalues.size(), 1);
  EXPECT_NEAR(r.eigenvalues(0), oracle::sector_spectrum(m)(0), 1e-8);
}

TEST(Qse, CompleteExpansionReproducesSpinSector) {
  const MolecularModel m = load_model_json(oracle::fixture("h2.json"));
  const QubitOperator h = hamiltonian_from_model(m);
  const auto ops = complete_expansion(m);
  const auto ev = exact_expectations(ground(m, h), required_strings(qse_operators(h, ops)));
  const QseResult r = qse_solve(h, ops, ev);
  const Eigen::VectorXd want = oracle::sector_spectrum(m, false);
  ASSERT_EQ(r.eigenvalues.size(), want.size());
  EXPECT_LT((r.eigenvalues - want).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(Qse, ExpansionFileParses) {
  const auto ops = parse_expansion("# comment\nI\nS: (0.5) a+2 a0 + (0.5) a+3 a1\na+3 a1 a+2 a0\n");
  ASSERT_EQ(ops.size(), 3u);
  EXPECT_EQ(ops[1].label, "S");
  EXPECT_EQ(ops[1].op.terms().size(), 2u);
  EXPECT_ANY_THROW(parse_expansion("X: a+q a0\n"));
}

TEST(Qse, OscillatorStrengthsAndMerging) {
  const auto pts = oscillator_strengths({{{0.0, 1.0, 0.0}}, {{1.0, 0.0, 0.0}}, {{0.0, 0.0, 0.0}}}, {0.5, 0.5 + 1e-9, 0.9});
  ASSERT_EQ(pts.size(), 3u);
  EXPECT_NEAR(pts[0].oscillator_strength, 2.0 * 0.5 / 3.0, 1e-12);
  const auto merged = merge_degenerate(pts, 1e-6);
  ASSERT_EQ(merged.size(), 2u);
  EXPECT_EQ(merged[0].multiplicity, 2);
  EXPECT_NEAR(merged[0].oscillator_strength, 4.0 * 0.5 / 3.0, 1e-8);
}

TEST(Qse, LorentzianIntegratesToStrength) {
  const std::vector<SpectrumPoint> pts{{1.0, 0.4, 1}};
  const double step = 1e-4;
  double area = 0.0;
  for (const CurvePoint& c : broaden(pts, 0.02, -50.0, 50.0, step)) area += c.intensity * step;
  EXPECT_NEAR(area, 0.4, 0.4 * 1e-3);
  EXPECT_ANY_THROW(broaden(pts, 0.0, 0.0, 1.0, 0.01));
}

TEST(Qse, SpectrumCsvHeader) {
  const std::string csv = spectrum_csv({{0.1, 2.0}});
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "energy_hartree,intensity");
}

TEST(Qse, EigenvaluesInvariantUnderOperatorMixing) {
  const MolecularModel m = load_model_json(oracle::fixture("ch4.json"));
  const QubitOperator h = hamiltonian_from_model(m);
  const auto ops = default_expansion(m);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-0.3, 0.3);
  std::vector<ExpansionOperator> mixed;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    FermionOperator f = ops[i].op;
    for (std::size_t j = 0; j < ops.size(); ++j) {
      if (j != i) f += ops[j].op * cplx(u(rng));
    }
    mixed.push_back({ops[i].label, f});
  }
  const StateVector psi = ground(m, h);
  const QseResult a = qse_solve(h, ops, exact_expectations(psi, required_strings(qse_operators(h, ops))));
  const QseResult b = qse_solve(h, mixed, exact_expectations(psi, required_strings(qse_operators(h, mixed))));
  ASSERT_EQ(a.eigenvalues.size(), b.eigenvalues.size());
  EXPECT_LT((a.eigenvalues - b.eigenvalues).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(Qse, DegenerateStrengthInvariantUnderBlockRotation) {
  const std::array<double, 3> d1{0.3, -0.2, 0.1}, d2{-0.4, 0.05, 0.2};
  const double f = merge_degenerate(oscillator_strengths({d1, d2}, {0.7, 0.7}), 1e-6)[0].oscillator_strength;
  for (double phi : {0.1, 0.9, 2.5}) {
    std::array<double, 3> r1{}, r2{};
    for (int a = 0; a < 3; ++a) {
      r1[a] = std::cos(phi) * d1[a] + std::sin(phi) * d2[a];
      r2[a] = -std::sin(phi) * d1[a] + std::cos(phi) * d2[a];
    }
    const auto pts = oscillator_strengths({r1, r2}, {0.7, 0.7});
    for (const SpectrumPoint& p : pts) EXPECT_GE(p.oscillator_strength, 0.0);
    EXPECT_NEAR(merge_degenerate(pts, 1e-6)[0].oscillator_strength, f, 1e-8);
  }
}

TEST(Qse, UnitDipoleStrength) {
  const auto pts = oscillator_strengths({{{0.0, 0.0, 1.0}}}, {1.5});
  EXPECT_NEAR(pts[0].oscillator_strength, 1.0, 1e-15);
}
