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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "uccc/circuit.hpp"
#include "uccc/pauli.hpp"
#include "uccc/simulator.hpp"
#include "uccc/symmetry.hpp"

namespace uccc {

/**
 * @brief Mutually commuting Hamiltonian terms measured by one circuit.
 *
 * After `diagonalizer`, term k reads as `term_images[k]` (a signed Z-string)
 * and verifier v as `verifier_images[v]`. Qubit q is recorded on bit
 * `n_bits - n_qubits + q` of the measurement circuit.
 */
struct MeasurementSet {
  std::vector<PauliTerm> terms;
  std::vector<SymmetryOperator> verifiers;
  Circuit diagonalizer;
  std::vector<PauliTerm> term_images;
  std::vector<PauliTerm> verifier_images;
};

/// Greedy coloring by descending |coefficient|, then canonical order. Skips the identity.
std::vector<MeasurementSet> partition_terms(const QubitOperator& op, unsigned n_qubits);

/// Attaches each symmetry to every set it commutes with term-wise and rebuilds the diagonalizers.
std::vector<MeasurementSet> attach_verifiers(std::vector<MeasurementSet> sets,
                                             const std::vector<SymmetryOperator>& syms);

/// `prep` followed by the diagonalizer and one Measure per qubit onto fresh bits.
Circuit measurement_circuit(const Circuit& prep, const MeasurementSet& set);

/// Keeps shots whose verifier parities match the reference sectors.
ShotTable pmsv_postselect(const ShotTable& table, const MeasurementSet& set, int n_qubits);

/**
 * Appends a CX cascade from the symmetry support onto its highest qubit,
 * measures that qubit into a new bit, resets it, restores it from the bit,
 * and undoes the cascade. Symmetries must be Z-strings.
 */
Circuit mmsv_instrument(const Circuit& c, const SymmetryOperator& sym);

/// Keeps shots whose bit `bit` equals x for sector (-1)^x.
ShotTable mmsv_postselect(const ShotTable& table, int bit, int sector);

struct EnergyEstimate {
  double energy = 0.0;
  double standard_error = 0.0;
};

/**
 * Hamiltonian averaging. Tables align with `sets`; the identity coefficient
 * of `op` is added exactly. Throws when a table is empty.
 */
EnergyEstimate estimate_energy(const std::vector<MeasurementSet>& sets,
                               const std::vector<ShotTable>& tables, const QubitOperator& op,
                               int n_qubits);

/// Infinite-shot limit of `estimate_energy` from exact bit distributions.
double estimate_energy_exact(const std::vector<MeasurementSet>& sets,
                             const std::vector<std::map<std::string, double>>& dists,
                             const QubitOperator& op, int n_qubits);

std::map<std::string, double> normalized(const ShotTable& t);

/// Jensen-Shannon divergence with base-2 logarithms.
double jsd(const std::map<std::string, double>& p, const std::map<std::string, double>& q);
double jsd(const ShotTable& p, const ShotTable& q);

enum class Mitigation { None, Pmsv1, Pmsv2, Mmsv };

std::string_view to_string(Mitigation m);
Mitigation parse_mitigation(std::string_view s);

struct EstimationOptions {
  std::uint64_t shots = 10000;
  Mitigation mitigation = Mitigation::None;
  NoiseSpec noise;
};

struct SetReport {
  std::size_t n_terms = 0;
  std::size_t n_verifiers = 0;
  int two_qubit_gates = 0;
  std::uint64_t shots = 0;
  std::uint64_t kept = 0;
  double jsd_to_exact = 0.0;
};

struct EstimationReport {
  EnergyEstimate estimate;
  double exact_energy = 0.0;
  std::vector<SetReport> sets;
  std::uint64_t shots_total = 0;
  std::uint64_t shots_kept = 0;
};

/// Seed of the k-th measurement circuit derived from a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/**
 * Builds, samples and post-selects every measurement circuit for `op` on a
 * bound state-preparation circuit.
 */
EstimationReport run_estimation(const Circuit& prep, const QubitOperator& op,
                                const std::vector<SymmetryOperator>& pmsv1,
                                const std::vector<SymmetryOperator>& pmsv2,
                                const EstimationOptions& options);

}  // namespace uccc
