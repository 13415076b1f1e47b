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
#include "uccc/model.hpp"
#include "uccc/symmetry.hpp"

using namespace uccc;

TEST(Symmetry, AllSymmetriesCommuteWithHamiltonian) {
  for (const char* name : {"h2.json", "ch4.json", "ch3.json", "oh.json", "h2o.json", "ts.json"}) {
    const MolecularModel m = load_model_json(oracle::fixture(name));
    const auto syms = all_symmetries(m);
    EXPECT_FALSE(syms.empty());
    EXPECT_TRUE(commutes_with_all(hamiltonian_from_model(m), syms)) << name;
  }
}

TEST(Symmetry, SectorsMatchReference) {
  for (const char* name : {"h2.json", "ch4.json", "ch3.json"}) {
    const MolecularModel m = load_model_json(oracle::fixture(name));
    for (const SymmetryOperator& s : all_symmetries(m)) {
      EXPECT_EQ(z_parity(s.pauli, m.hf_bits()), s.sector) << name << " " << to_string(s);
    }
  }
}

TEST(Symmetry, PmsvTwoExtendsPmsvOne) {
  const MolecularModel m = load_model_json(oracle::fixture("ch4.json"));
  EXPECT_GT(pmsv2_symmetries(m).size(), pmsv1_symmetries(m).size());
}

TEST(Symmetry, FilterRemovesForbiddenExcitations) {
  const MolecularModel m = load_model_json(oracle::fixture("h2.json"));
  // Single 0 -> 2 connects Ag and B1u.
  EXPECT_FALSE(irrep_allowed(make_single(2, 0), m));
  EXPECT_TRUE(irrep_allowed(make_paired_double(0, 1), m));
  const std::vector<Excitation> pool{make_single(2, 0), make_paired_double(0, 1)};
  EXPECT_EQ(filter_excitations(pool, all_symmetries(m), m).size(), 1u);
}

TEST(Symmetry, EmptySymmetryListKeepsPool) {
  const MolecularModel m = load_model_json(oracle::fixture("h2.json"));
  const std::vector<Excitation> pool{make_single(2, 0), make_paired_double(0, 1)};
  EXPECT_EQ(filter_excitations(pool, {}, m).size(), 2u);
}

TEST(Symmetry, FilterIsIdempotentAndRetainsCommutingExcitations) {
  for (const char* name : {"ch4.json", "ch3.json", "ts.json"}) {
    const MolecularModel m = load_model_json(oracle::fixture(name));
    const auto syms = all_symmetries(m);
    const auto once = filter_excitations(generate_uccsd_pool(m), syms, m);
    const auto twice = filter_excitations(once, syms, m);
    ASSERT_EQ(once.size(), twice.size()) << name;
    for (std::size_t k = 0; k < once.size(); ++k) EXPECT_EQ(once[k].label(), twice[k].label());
    for (const Excitation& e : once) {
      for (const auto& [p, c] : jordan_wigner(e.generator()).terms()) {
        for (const SymmetryOperator& s : syms) EXPECT_TRUE(commutes(p, s.pauli)) << e.label();
      }
    }
  }
}

TEST(Symmetry, MethaneFilterKeepsOnlyPairedDoubles) {
  const MolecularModel m = load_model_json(oracle::fixture("ch4.json"));
  const auto kept = filter_excitations(generate_uccsd_pool(m), all_symmetries(m), m);
  ASSERT_EQ(kept.size(), 2u);
  for (const Excitation& e : kept) EXPECT_EQ(e.kind, ExcitationKind::PairedDouble);
}

TEST(Symmetry, DenseGroundStateLiesInDeclaredSectors) {
  for (const char* name : {"h2.json", "ch4.json", "ch3.json", "h2o.json"}) {
    const MolecularModel m = load_model_json(oracle::fixture(name));
    const std::vector<int> basis = oracle::sector(m);
    Eigen::SelfAdjointEigenSolver<oracle::Mat> es(oracle::restrict(oracle::hamiltonian(m), basis));
    oracle::Vec psi = oracle::Vec::Zero(1 << m.n_spin_orbitals);
    for (std::size_t k = 0; k < basis.size(); ++k) psi(basis[k]) = es.eigenvectors()(static_cast<Eigen::Index>(k), 0);
    for (const SymmetryOperator& s : all_symmetries(m)) {
      const oracle::Mat sz = to_dense(PauliTerm(s.pauli, 1.0), static_cast<unsigned>(m.n_spin_orbitals));
      EXPECT_NEAR((psi.adjoint() * sz * psi)(0, 0).real(), s.sector, 1e-10) << name << " " << to_string(s);
    }
  }
}
