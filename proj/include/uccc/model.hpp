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

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uccc/pauli.hpp"

namespace uccc {

/// Spatial two-electron integrals (pq|rs) in chemist ordering.
class TwoElectronIntegrals {
 public:
  TwoElectronIntegrals() = default;
  explicit TwoElectronIntegrals(int n_orbitals)
      : n_(n_orbitals), data_(static_cast<std::size_t>(n_orbitals) * n_orbitals * n_orbitals *
                                  n_orbitals, 0.0) {}

  int n_orbitals() const { return n_; }
  double operator()(int p, int q, int r, int s) const { return data_[index(p, q, r, s)]; }
  double& operator()(int p, int q, int r, int s) { return data_[index(p, q, r, s)]; }
  /// Writes v into all eight positions related by real-orbital symmetry.
  void set_symmetric(int p, int q, int r, int s, double v);
  const std::vector<double>& data() const { return data_; }

 private:
  std::size_t index(int p, int q, int r, int s) const {
    return ((static_cast<std::size_t>(p) * n_ + q) * n_ + r) * n_ + s;
  }
  int n_ = 0;
  std::vector<double> data_;
};

enum class Axis { X = 0, Y = 1, Z = 2 };

/**
 * @brief Active-space molecular Hamiltonian data.
 *
 * Spin orbitals are interleaved: spin orbital 2p is the alpha partner of
 * spatial orbital p and 2p+1 its beta partner. All energies are in hartree,
 * dipole integrals in atomic units.
 */
struct MolecularModel {
  std::string name;
  int n_spin_orbitals = 0;
  std::vector<std::uint8_t> hf_occupation;
  std::string point_group = "C1";
  std::vector<std::string> irreps;
  double core_energy = 0.0;
  Eigen::MatrixXd h;
  TwoElectronIntegrals g;
  std::optional<std::array<Eigen::MatrixXd, 3>> dipoles;

  int n_orbitals() const { return n_spin_orbitals / 2; }
  int n_electrons() const;
  int n_alpha() const;
  int n_beta() const;
  /// Computational-basis index of the reference determinant.
  std::uint64_t hf_bits() const;

  /// Throws std::invalid_argument on any shape, symmetry or label problem.
  void validate() const;
};

MolecularModel load_model_json(const std::string& path);
MolecularModel model_from_json_text(const std::string& text);
std::string model_to_json_text(const MolecularModel& m);

/// Closed-form reference-determinant energy from the integrals.
double hf_energy(const MolecularModel& m);

QubitOperator hamiltonian_from_model(const MolecularModel& m);

/// Electronic dipole component as a one-body operator; throws if the model
/// carries no dipole integrals.
QubitOperator dipole_operator(const MolecularModel& m, Axis axis);

}  // namespace uccc
