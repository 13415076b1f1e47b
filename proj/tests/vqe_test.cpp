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
#include "uccc/synthesis.hpp"
#include "uccc/vqe.hpp"

using namespace uccc;

TEST(Vqe, ReachesSectorGroundState) {
  for (const char* name : {"h2.json", "ch4.json", "oh.json"}) {
    const MolecularModel m = load_model_json(oracle::fixture(name));
    const Circuit c = synthesize(Strategy::ChemicallyAware, m, generate_uccsd_pool(m));
    const VqeResult r = vqe_optimize(hamiltonian_from_model(m), c);
    EXPECT_NEAR(r.energy, oracle::sector_spectrum(m)(0), 1e-6) << name;
    EXPECT_LT(r.gradient_norm, 1e-5);
  }
}

TEST(Vqe, EnergyIsVariational) {
  const MolecularModel m = load_model_json(oracle::fixture("h2.json"));
  const QubitOperator h = hamiltonian_from_model(m);
  const Circuit c = synthesize(Strategy::Individual, m, generate_uccsd_pool(m));
  ParameterMap zero;
  for (const auto& p : c.parameters()) zero[p] = 0.0;
  EXPECT_NEAR(circuit_energy(h, c, zero), hf_energy(m), 1e-10);
  EXPECT_LE(vqe_optimize(h, c).energy, hf_energy(m));
}

TEST(Vqe, IterationLimitRaisesWithPartialResult) {
  const MolecularModel m = load_model_json(oracle::fixture("ch3.json"));
  const Circuit c = synthesize(Strategy::ChemicallyAware, m, generate_uccsd_pool(m));
  VqeOptions o;
  o.max_iterations = 1;
  try {
    vqe_optimize(hamiltonian_from_model(m), c, o);
    FAIL() << "expected VqeError";
  } catch (const VqeError& e) {
    EXPECT_EQ(e.partial().iterations, 1);
  }
}

TEST(Vqe, VariationalBoundOnEveryFixture) {
  for (const char* name : {"h2.json", "ch4.json", "ch3.json", "oh.json", "h2o.json", "ts.json"}) {
    const MolecularModel m = load_model_json(oracle::fixture(name));
    const Circuit c = synthesize(Strategy::CommutingSets, m, generate_uccsd_pool(m));
    const double e = vqe_optimize(hamiltonian_from_model(m), c).energy;
    const double ground = Eigen::SelfAdjointEigenSolver<oracle::Mat>(oracle::hamiltonian(m)).eigenvalues()(0);
    EXPECT_GE(e, ground - 1e-9) << name;
  }
}

TEST(Vqe, ChemicallyAwareMatchesCommutingSetsEnergy) {
  for (const char* name : {"ch4.json", "ch3.json", "h2o.json"}) {
    const MolecularModel m = load_model_json(oracle::fixture(name));
    const QubitOperator h = hamiltonian_from_model(m);
    const auto pool = generate_uccsd_pool(m);
    const double chem = vqe_optimize(h, synthesize(Strategy::ChemicallyAware, m, pool)).energy;
    const double com = vqe_optimize(h, synthesize(Strategy::CommutingSets, m, pool)).energy;
    EXPECT_NEAR(chem, com, 1.6e-3) << name;
  }
}
