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


#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "uccc/circuit.hpp"
#include "uccc/fermion.hpp"
#include "uccc/model.hpp"
#include "uccc/symmetry.hpp"

namespace uccc {

enum class Strategy { Individual, CommutingSets, ChemicallyAware };

std::string_view to_string(Strategy s);
/// Accepts individual, commuting (or commuting-sets) and chemaware.
Strategy parse_strategy(std::string_view name);

/**
 * JW image of the anti-Hermitian generator T - T^dagger as (P, c) pairs with
 * generator = sum_k i c_k P_k, in canonical string order.
 */
std::vector<std::pair<PauliString, double>> excitation_rotations(const Excitation& e);

/// X gates on the set bits of `hf_bits`.
void append_reference(Circuit& c, std::uint64_t hf_bits);

/// exp(-i angle P / 2) through basis changes and one CX ladder.
void append_pauli_exponential(Circuit& c, const PauliString& p, const Angle& angle);

/**
 * exp(theta/2 * i (Y_a X_b - X_a Y_b)) on qubits a and b with two CX gates;
 * the hard-core-boson form of a paired double from a to b.
 */
void append_pair_hop(Circuit& c, int a, int b, const std::string& symbol);

Circuit synth_individual(const std::vector<Excitation>& pool, unsigned n_qubits,
                         std::uint64_t hf_bits = 0);
/**
 * One gadget per excitation: diagonalizing Clifford, phase polynomial, and
 * the inverse Clifford. A single uses a CZ-conjugated hop instead when that
 * needs fewer CX gates.
 */
Circuit synth_commuting_sets(const std::vector<Excitation>& pool, unsigned n_qubits,
                             std::uint64_t hf_bits = 0);

/// Excitations kept by the symmetry filter, split by category.
struct ChemAwarePlan {
  std::vector<SymmetryOperator> symmetries;
  std::vector<Excitation> paired;
  std::vector<Excitation> rest;
};

ChemAwarePlan plan_chemically_aware(const MolecularModel& model, const std::vector<Excitation>& pool);

/**
 * Filters the pool with every available symmetry, emits the paired doubles
 * first as two-CX pair hops on the alpha qubits, copies alpha occupations of
 * the hopping orbitals onto their beta partners, prepares the remaining
 * occupied qubits, and appends the other survivors through commuting sets,
 * doubles before singles, each group in pool order.
 */
Circuit synth_chemically_aware(const MolecularModel& model, const std::vector<Excitation>& pool);

/// Order in which a strategy applies excitations.
std::vector<Excitation> strategy_order(Strategy s, const MolecularModel& model,
                                       const std::vector<Excitation>& pool);

Circuit synthesize(Strategy s, const MolecularModel& model, const std::vector<Excitation>& pool);

/// The model with every orbital relabelled to the trivial irrep of C1.
MolecularModel without_point_group(const MolecularModel& model);

}  // namespace uccc
