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

#include <random>

#include "oracle.hpp"
#include "uccc/clifford.hpp"
#include "uccc/estimation.hpp"
#include "uccc/simulator.hpp"

using namespace uccc;

namespace {

oracle::Mat circuit_unitary(const Circuit& c) {
  const int n = c.n_qubits();
  oracle::Mat u(1 << n, 1 << n);
  for (int b = 0; b < (1 << n); ++b) {
    const StateVector psi = run_statevector(c, static_cast<std::uint64_t>(b));
    u.col(b) = Eigen::Map<const oracle::Vec>(psi.amplitudes().data(), 1 << n);
  }
  return u;
}

}  // namespace

TEST(Clifford, ConjugationMatchesDense) {
  Circuit c(3);
  c.add(Gate::h(0));
  c.add(Gate::cx(0, 2));
  c.add(Gate::rx(1, Angle::literal(M_PI / 2)));
  c.add(Gate::cx(1, 0));
  const oracle::Mat u = circuit_unitary(c);
  for (const char* s : {"XII", "IYZ", "ZZX", "YXY"}) {
    const PauliTerm img = conjugate(oracle::term(s), c);
    const oracle::Mat want = u * oracle::pauli(s) * u.adjoint();
    EXPECT_LT((to_dense(img, 3) - want).cwiseAbs().maxCoeff(), 1e-12) << s;
  }
}

TEST(Clifford, DiagonalizationYieldsZStrings) {
  const std::vector<PauliString> terms = {oracle::term("XXYY").string, oracle::term("YYXX").string,
                                          oracle::term("XYYX").string, oracle::term("ZZZZ").string};
  const Diagonalization d = diagonalize(terms, 4);
  ASSERT_EQ(d.images.size(), terms.size());
  const oracle::Mat u = circuit_unitary(d.clifford);
  for (std::size_t k = 0; k < terms.size(); ++k) {
    EXPECT_TRUE(d.images[k].string.is_diagonal());
    const oracle::Mat want = u * to_dense(PauliTerm(terms[k], 1.0), 4) * u.adjoint();
    EXPECT_LT((to_dense(d.images[k], 4) - want).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Clifford, PhasePolynomialImplementsRotations) {
  std::vector<PhaseRotation> rots = {{0b011, Angle::literal(0.3)}, {0b111, Angle::literal(-0.4)}, {0b110, Angle::literal(1.2)}};
  Circuit c(3);
  emit_phase_polynomial(c, rots);
  const oracle::Mat u = circuit_unitary(c);
  for (int b = 0; b < 8; ++b) {
    double phase = 0.0;
    for (const PhaseRotation& r : rots) {
      const int parity = __builtin_popcountll(r.parity & static_cast<std::uint64_t>(b)) & 1;
      phase += (parity ? 0.5 : -0.5) * r.angle.offset;
    }
    EXPECT_NEAR(std::abs(u(b, b) - std::polar(1.0, phase)), 0.0, 1e-12) << b;
  }
}

TEST(Partition, SetsAreMutuallyCommutingAndCoverOperator) {
  const QubitOperator op = oracle::qop({{"ZZII", 1.0}, {"XXYY", 0.5}, {"YYXX", 0.5}, {"XYYX", -0.5}, {"IZIZ", 0.3}, {"IIII", 2.0}, {"XIII", 0.1}});
  const auto sets = partition_terms(op, 4);
  std::size_t covered = 0;
  for (const MeasurementSet& s : sets) {
    for (const PauliTerm& a : s.terms) {
      for (const PauliTerm& b : s.terms) EXPECT_TRUE(commutes(a.string, b.string));
    }
    covered += s.terms.size();
  }
  EXPECT_EQ(covered, op.size() - 1);
}
