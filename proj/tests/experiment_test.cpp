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
#include "uccc/experiment.hpp"

using namespace uccc;

TEST(Experiment, ReactionEnergySumsStoichiometry) {
  EXPECT_NEAR(reaction_energy({{"A", -1.0, 1}, {"B", -0.4, -1}, {"C", -0.5, -1}}), -0.1, 1e-15);
  EXPECT_ANY_THROW(reaction_energy({{"A", -1.0, 1}}));
}

TEST(Experiment, ReactionEntryAcceptsNumbers) {
  const ReactionEntry e = resolve_reaction_entry("X:-2:-1.5");
  EXPECT_EQ(e.label, "X");
  EXPECT_EQ(e.stoichiometry, -2.0);
  EXPECT_EQ(e.energy, -1.5);
  EXPECT_ANY_THROW(resolve_reaction_entry("missing-fields"));
}

TEST(Experiment, CompareStrategiesReportsDominance) {
  const nlohmann::json j = compare_strategies(load_model(oracle::fixture("ch4.json")));
  EXPECT_EQ(j["two_qubit_gates"]["chemaware"], 7);
  EXPECT_EQ(j["two_qubit_gates"]["commuting"], 84);
  EXPECT_EQ(j["two_qubit_gates"]["individual"], 272);
  EXPECT_TRUE(j["dominance"].get<bool>());
}

TEST(Experiment, VqeReportCarriesEnergy) {
  ExperimentConfig c;
  c.model = oracle::fixture("h2.json");
  const nlohmann::json j = run_experiment(c);
  EXPECT_EQ(j["format"], "uccc-report");
  EXPECT_NEAR(j["vqe"]["energy_hartree"].get<double>(), -1.137270174, 1e-8);
}

TEST(Experiment, FcidumpModelLoads) {
  const MolecularModel m = load_model(oracle::fixture("h2.fcidump"), "D2h");
  EXPECT_EQ(m.n_spin_orbitals, 4);
  EXPECT_EQ(m.point_group, "D2h");
}

TEST(Experiment, UnknownTaskFails) {
  ExperimentConfig c;
  c.model = oracle::fixture("h2.json");
  c.task = "dance";
  EXPECT_ANY_THROW(run_experiment(c));
}
