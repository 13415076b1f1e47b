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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uccc/circuit.hpp"
#include "uccc/kernels.hpp"
#include "uccc/pauli.hpp"

namespace uccc {

inline constexpr unsigned kMaxSimulatorQubits = 20;

/// Dense state. Qubit 0 is the least significant bit of the amplitude index.
class StateVector {
 public:
  explicit StateVector(unsigned n_qubits, std::uint64_t basis_state = 0);

  unsigned n_qubits() const { return n_; }
  std::size_t dim() const { return amp_.size(); }
  const std::vector<cplx>& amplitudes() const { return amp_; }
  std::vector<cplx>& amplitudes() { return amp_; }

  /// Applies a bound unitary gate.
  void apply(const Gate& g);
  void apply_pauli(const PauliString& p);
  void apply_x(unsigned q);
  double norm() const;
  void normalize();
  std::vector<double> probabilities() const;
  double expectation(const PauliString& p) const;
  double expectation(const QubitOperator& op) const;
  /// Probability of reading 1 on qubit q.
  double probability_one(unsigned q) const;
  /// Projects qubit q onto `outcome` and renormalizes.
  void collapse(unsigned q, int outcome);
  /// Overlap <this|other>.
  cplx inner(const StateVector& other) const;

 private:
  unsigned n_;
  std::vector<cplx> amp_;
  const kernels::KernelTable* k_;
};

/**
 * Applies every unitary gate of a bound circuit. Measure gates at the end
 * are skipped; Reset, ConditionalX or gates after a measurement raise
 * std::invalid_argument.
 */
void apply_circuit(StateVector& psi, const Circuit& c);
StateVector run_statevector(const Circuit& c, std::uint64_t basis_state = 0);

/// Trajectory for one fixed sequence of mid-circuit outcomes.
struct Branch {
  StateVector state;
  double probability = 0.0;
  std::vector<int> bits;
};

/**
 * Follows the branch in which the k-th Measure returns outcomes[k]. The
 * probability of the branch is reported alongside the normalized state.
 */
Branch run_branch(const Circuit& c, const StateVector& initial, const std::vector<int>& outcomes);

struct NoiseSpec {
  double two_qubit_depolarizing_p = 0.0;
  double measurement_flip_p = 0.0;
  std::uint64_t seed = 0;

  bool noiseless() const { return two_qubit_depolarizing_p == 0.0 && measurement_flip_p == 0.0; }
  void validate() const;
};

/// Bitstring counts with bit 0 as the rightmost character.
struct ShotTable {
  int n_bits = 0;
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t shots = 0;

  void add(const std::string& bits, std::uint64_t n = 1);
  std::string to_csv() const;
  std::string to_json_text() const;
  static ShotTable from_csv(std::string_view text);
  static ShotTable from_json_text(std::string_view text);
};

std::string bits_to_string(std::uint64_t bits, int n_bits);
std::uint64_t string_to_bits(std::string_view s);

/**
 * Seeded shot sampling. Shot k draws from Philox with key `noise.seed` and
 * stream k, so results do not depend on evaluation order. Each CX is
 * followed, with probability p, by a uniformly chosen non-identity
 * two-qubit Pauli; each recorded bit flips with the measurement probability.
 */
ShotTable sample(const Circuit& c, std::uint64_t shots, const NoiseSpec& noise = {});

/// Per-shot trajectory simulation supporting Measure, Reset and ConditionalX anywhere.
ShotTable run_with_midcircuit(const Circuit& c, std::uint64_t shots, const NoiseSpec& noise = {});

/// Exact bit distribution of a circuit whose measurements are all terminal.
std::map<std::string, double> exact_distribution(const Circuit& c);

}  // namespace uccc
