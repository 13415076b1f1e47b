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

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace uccc {

using ParameterMap = std::map<std::string, double>;

/**
 * @brief Rotation angle `offset + scale * symbol` in radians.
 *
 * A literal angle has an empty symbol and uses only `offset`.
 */
struct Angle {
  double offset = 0.0;
  double scale = 0.0;
  std::string symbol;

  static Angle literal(double v) { return {v, 0.0, {}}; }
  static Angle symbolic(std::string s, double scale = 1.0) { return {0.0, scale, std::move(s)}; }

  bool is_symbolic() const { return !symbol.empty(); }
  /// Throws std::out_of_range when the symbol is missing from `values`.
  double value(const ParameterMap& values) const;
  Angle negated() const { return {-offset, -scale, symbol}; }

  friend bool operator==(const Angle&, const Angle&) = default;
};

enum class GateKind { X, H, Rx, Ry, Rz, CX, Measure, Reset, ConditionalX };

std::string_view gate_name(GateKind k);
bool is_rotation(GateKind k);

/**
 * @brief One operation. Rz(a) = exp(-i a Z / 2), likewise for Rx and Ry.
 *
 * `q0` is the only qubit of single-qubit gates and the control of CX; `q1`
 * is the CX target. Measure writes `bit`; ConditionalX reads it.
 */
struct Gate {
  GateKind kind = GateKind::X;
  int q0 = 0;
  int q1 = -1;
  int bit = -1;
  Angle angle;

  static Gate x(int q) { return {GateKind::X, q, -1, -1, {}}; }
  static Gate h(int q) { return {GateKind::H, q, -1, -1, {}}; }
  static Gate rx(int q, Angle a) { return {GateKind::Rx, q, -1, -1, std::move(a)}; }
  static Gate ry(int q, Angle a) { return {GateKind::Ry, q, -1, -1, std::move(a)}; }
  static Gate rz(int q, Angle a) { return {GateKind::Rz, q, -1, -1, std::move(a)}; }
  static Gate cx(int control, int target) { return {GateKind::CX, control, target, -1, {}}; }
  static Gate measure(int q, int bit) { return {GateKind::Measure, q, -1, bit, {}}; }
  static Gate reset(int q) { return {GateKind::Reset, q, -1, -1, {}}; }
  static Gate conditional_x(int bit, int q) { return {GateKind::ConditionalX, q, -1, bit, {}}; }

  bool acts_on(int q) const { return q0 == q || q1 == q; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int n_qubits, int n_bits = 0) : n_qubits_(n_qubits), n_bits_(n_bits) {}

  int n_qubits() const { return n_qubits_; }
  int n_bits() const { return n_bits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<std::string>& parameters() const { return parameters_; }

  /// Validates operands and registers any new symbol.
  void add(Gate g);
  void append(const Circuit& other);
  void add_parameter(const std::string& name);
  /// Allocates a fresh classical bit and returns its index.
  int add_bit() { return n_bits_++; }
  void set_n_qubits(int n) { n_qubits_ = n; }

  bool is_bound() const;
  bool has_midcircuit_operations() const;
  /// Reverse order with negated angles; unitary gates only.
  Circuit inverse() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int n_qubits_ = 0;
  int n_bits_ = 0;
  std::vector<Gate> gates_;
  std::vector<std::string> parameters_;
};

int two_qubit_gate_count(const Circuit& c);

/// Substitutes every symbol; throws std::invalid_argument naming a missing one.
Circuit bind_parameters(const Circuit& c, const ParameterMap& values);

/**
 * Drops parameters whose value magnitude is below `tol` (with every gate that
 * references them) and literal rotations below `tol`, then runs `peephole`.
 * With nothing removed the circuit is returned unchanged.
 */
std::pair<Circuit, ParameterMap> prune(const Circuit& c, const ParameterMap& values, double tol);

/// Fixed-point cancellation of adjacent inverse pairs and merging of rotations.
Circuit peephole(const Circuit& c);

std::string to_text(const Circuit& c);
Circuit parse_circuit_text(std::string_view text);
std::string to_json_text(const Circuit& c);
Circuit parse_circuit_json(std::string_view text);
/// Chooses JSON when the first non-blank character is '{'.
Circuit load_circuit(const std::string& path);

}  // namespace uccc
