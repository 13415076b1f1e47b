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

#include "oracle.hpp"
#include "uccc/fermion.hpp"
#include "uccc/model.hpp"

using namespace uccc;

TEST(Fermion, JordanWignerMatchesKroneckerLadders) {
  const int n = 4;
  const oracle::Fock f(n);
  for (int j = 0; j < n; ++j) {
    EXPECT_LT((to_dense(jordan_wigner(ann(j)), n) - f.a[static_cast<std::size_t>(j)]).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((to_dense(jordan_wigner(cre(j)), n) - f.ad[static_cast<std::size_t>(j)]).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Fermion, AnticommutationRelations) {
  const int n = 4;
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      const QubitOperator ap = jordan_wigner(ann(p)), aqd = jordan_wigner(cre(q));
      const QubitOperator anti = ap * aqd + aqd * ap;
      const QubitOperator want = p == q ? QubitOperator::identity() : QubitOperator();
      EXPECT_LT(QubitOperator::distance(anti, want), 1e-12);
    }
  }
}

TEST(Fermion, GeneratorsAreAntiHermitian) {
  for (const Excitation& e : {make_single(2, 0), make_double(2, 0, 3, 1), make_paired_double(0, 2)}) {
    EXPECT_TRUE(jordan_wigner(e.generator()).is_anti_hermitian()) << e.label();
  }
}

TEST(Fermion, PairedDoubleIsRecognized) {
  EXPECT_EQ(make_paired_double(0, 1).kind, ExcitationKind::PairedDouble);
  EXPECT_EQ(make_double(2, 0, 3, 1).kind, ExcitationKind::PairedDouble);
  EXPECT_EQ(make_double(2, 0, 1, 3).kind, ExcitationKind::GenericDouble);
  EXPECT_EQ(make_single(2, 0).kind, ExcitationKind::Single);
}

TEST(Fermion, HardcoreBosonImageTracksPairAmplitude) {
  const Excitation e = make_paired_double(0, 1);
  const oracle::Mat full = to_dense(jordan_wigner(e.generator()), 4);
  const oracle::Mat hcb = to_dense(hardcore_boson_image(e), 4);
  const oracle::Mat want = oracle::cplx(0, 0.5) * (oracle::pauli("YIXI") - oracle::pauli("XIYI"));
  EXPECT_LT((hcb - want).cwiseAbs().maxCoeff(), 1e-12);
  // Pair 0 -> 1 on the full register against alpha 0 -> alpha 1 in the image.
  EXPECT_NEAR(std::abs(full(0b1100, 0b0011) - hcb(0b0100, 0b0001)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(full(0b0011, 0b1100) - hcb(0b0001, 0b0100)), 0.0, 1e-12);
}

TEST(Fermion, PoolRespectsSpin) {
  const MolecularModel m = load_model_json(oracle::fixture("h2.json"));
  const auto pool = generate_uccsd_pool(m);
  for (const Excitation& e : pool) {
    int dsz = 0;
    for (int p : e.created()) dsz += p % 2 == 0 ? 1 : -1;
    for (int p : e.annihilated()) dsz -= p % 2 == 0 ? 1 : -1;
    EXPECT_EQ(dsz, 0) << e.label();
  }
  EXPECT_EQ(pool.size(), 3u);
}

TEST(Fermion, PairHopRotationMatchesFullRotationOnPairedStates) {
  const Excitation e = make_paired_double(0, 1);
  const oracle::Mat g_full = to_dense(jordan_wigner(e.generator()), 4);
  const oracle::Mat g_hcb = to_dense(hardcore_boson_image(e), 4);
  // Paired states: orbital 0 doubly occupied (0b0011) or orbital 1 doubly occupied (0b1100).
  // Their hard-core-boson images keep only the alpha qubits 0 and 2.
  const int full_states[2] = {0b0011, 0b1100};
  const int hcb_states[2] = {0b0001, 0b0100};
  for (double theta : {-1.0, -0.1, 0.3, 1.0}) {
    const oracle::Mat uf = (theta * g_full).exp();
    const oracle::Mat uh = (theta * g_hcb).exp();
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        EXPECT_NEAR(std::abs(uf(full_states[i], full_states[j]) - uh(hcb_states[i], hcb_states[j])), 0.0, 1e-10) << theta;
      }
    }
  }
}

TEST(Fermion, PoolIsDeterministic) {
  const MolecularModel m = load_model_json(oracle::fixture("ts.json"));
  const auto a = generate_uccsd_pool(m), b = generate_uccsd_pool(m);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].label(), b[k].label());
    EXPECT_EQ(a[k].parameter, "t" + std::to_string(k));
  }
}

TEST(Fermion, MethanePoolHasTwoPairedDoubles) {
  const MolecularModel m = load_model_json(oracle::fixture("ch4.json"));
  int paired = 0;
  for (const Excitation& e : generate_uccsd_pool(m)) paired += e.kind == ExcitationKind::PairedDouble;
  EXPECT_EQ(paired, 2);
}
