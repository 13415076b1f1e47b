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

#include <string>
#include <vector>

#include "uccc/fermion.hpp"
#include "uccc/model.hpp"
#include "uccc/pauli.hpp"

namespace uccc {

/**
 * @brief A Pauli symmetry together with the eigenvalue of the reference
 * determinant.
 */
struct SymmetryOperator {
  PauliString pauli;
  int sector = 1;
  std::string label;
};

std::string to_string(const SymmetryOperator& s);

/// Eigenvalue of a Z-string on a computational basis state.
int z_parity(const PauliString& s, std::uint64_t bits);

/// Alpha parity (even qubits), beta parity (odd qubits), total parity.
std::vector<SymmetryOperator> number_parity_symmetries(const MolecularModel& model);

/**
 * Z-strings over the spin orbitals whose irrep has character -1 under each
 * non-identity group element. Strings that are products of earlier ones are
 * dropped, so the result is an independent generating set.
 */
std::vector<SymmetryOperator> point_group_z2_symmetries(const MolecularModel& model);

/// Total parity only.
std::vector<SymmetryOperator> pmsv1_symmetries(const MolecularModel& model);
/// Alpha and beta parities followed by the point-group strings.
std::vector<SymmetryOperator> pmsv2_symmetries(const MolecularModel& model);

/// Every parity and point-group symmetry available for the model.
std::vector<SymmetryOperator> all_symmetries(const MolecularModel& model);

bool commutes_with_all(const QubitOperator& op, const std::vector<SymmetryOperator>& syms);

/// True when the created and annihilated orbitals carry the same irrep product.
bool irrep_allowed(const Excitation& e, const MolecularModel& model);

/// Keeps excitations whose generator commutes with every symmetry and whose
/// irreps match. An empty symmetry list returns the pool unchanged.
std::vector<Excitation> filter_excitations(const std::vector<Excitation>& pool,
                                           const std::vector<SymmetryOperator>& syms,
                                           const MolecularModel& model);

}  // namespace uccc
