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
#include <vector>

#include "uccc/circuit.hpp"
#include "uccc/pauli.hpp"

namespace uccc {

/// True for X, H, CX and literal rotations by a multiple of pi/2.
bool is_clifford(const Gate& g);

/// Returns g P g^dagger. Throws std::invalid_argument for a non-Clifford gate.
PauliTerm conjugate(const PauliTerm& p, const Gate& g);
PauliTerm conjugate(const PauliTerm& p, const Circuit& c);

/**
 * @brief Clifford circuit C with C P_k C^dagger = s_k Z_{S_k} for every input.
 *
 * `images[k]` carries the Z-string and the sign s_k as a real coefficient.
 */
struct Diagonalization {
  Circuit clifford;
  std::vector<PauliTerm> images;
};

/**
 * Simultaneously diagonalizes mutually commuting Pauli strings by
 * stabilizer elimination: single-qubit basis changes where a qubit carries
 * only one non-Z letter, then CX gates from a pivot of largest column
 * weight (lowest index on ties) clearing the X block, then CZ gates between
 * pivots. Throws std::invalid_argument if two inputs anticommute.
 */
Diagonalization diagonalize(const std::vector<PauliString>& terms, unsigned n_qubits);

/// exp(-i angle Z_parity / 2) for one parity mask.
struct PhaseRotation {
  std::uint64_t parity = 0;
  Angle angle;
};

/**
 * Appends the product of commuting Z-parity rotations. Each round picks the
 * qubit present in most parities, visits its parities in the order that
 * minimizes CX toggles (exact for up to 12 parities), and restores the
 * qubit before handling the remaining parities.
 */
void emit_phase_polynomial(Circuit& c, std::vector<PhaseRotation> rotations);

}  // namespace uccc
