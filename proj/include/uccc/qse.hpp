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
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "uccc/circuit.hpp"
#include "uccc/estimation.hpp"
#include "uccc/fermion.hpp"
#include "uccc/model.hpp"
#include "uccc/pauli.hpp"
#include "uccc/simulator.hpp"

namespace uccc {

/// Expectation values <psi0|P|psi0> for the Pauli strings a calculation needs.
using PauliExpectations = std::map<PauliString, double, CanonicalLess>;

/// Every non-identity string appearing in `ops`.
std::vector<PauliString> required_strings(const std::vector<QubitOperator>& ops);

PauliExpectations exact_expectations(const StateVector& psi, const std::vector<PauliString>& strings);

struct SampledExpectations {
  PauliExpectations values;
  std::size_t n_circuits = 0;
  std::uint64_t shots_kept = 0;
  std::uint64_t shots_total = 0;
};

/**
 * Shot-based estimates: the strings are partitioned into commuting sets,
 * optionally verified with `verifiers`, and each set circuit is sampled.
 */
SampledExpectations sampled_expectations(const Circuit& prep, const std::vector<PauliString>& strings,
                                         const std::vector<SymmetryOperator>& verifiers,
                                         std::uint64_t shots, const NoiseSpec& noise);

/// <psi0|O|psi0> for a possibly non-Hermitian operator, real part.
double expectation_of(const QubitOperator& op, const PauliExpectations& ev);

struct QseOptions {
  double overlap_threshold = 1e-8;
  double degeneracy_tol = 1e-6;
};

struct QseResult {
  Eigen::MatrixXd subspace_h;
  Eigen::MatrixXd subspace_s;
  Eigen::VectorXd eigenvalues;
  /// Column v holds w^v over the expansion operators.
  Eigen::MatrixXd vectors;
  std::vector<FermionOperator> expansion_ops;
  std::vector<std::string> labels;
  std::size_t retained_rank = 0;
};

struct ExpansionOperator {
  std::string label;
  FermionOperator op;
};

/**
 * Identity, spin-adapted singlet singles a+_{2a} a_{2i} + a+_{2a+1} a_{2i+1}
 * from occupied to virtual spatial orbitals, and pair hops
 * a+_{2p} a_{2q} a+_{2p+1} a_{2q+1}.
 */
std::vector<ExpansionOperator> default_expansion(const MolecularModel& model);

/// Identity with every spin-conserving single and double replacement.
std::vector<ExpansionOperator> complete_expansion(const MolecularModel& model);

/// Parses one operator per line: `label: (coef) a+2 a0 + ...` or bare ladder strings.
std::vector<ExpansionOperator> parse_expansion(const std::string& text);

/// Operators whose expectation values the QSE matrices need.
std::vector<QubitOperator> qse_operators(const QubitOperator& h, const std::vector<ExpansionOperator>& ops);

/**
 * Builds and solves H c = e S c in the span of F_k|psi0>. Both matrices are
 * symmetrized; eigenvectors of S below the threshold are discarded.
 */
QseResult qse_solve(const QubitOperator& h, const std::vector<ExpansionOperator>& ops,
                    const PauliExpectations& ev, const QseOptions& options = {});

/// sum_k w_k^v <psi0| mu_alpha F_k |psi0> per state and axis.
std::vector<std::array<double, 3>> transition_dipoles(const QseResult& r,
                                                      const std::array<QubitOperator, 3>& dipole,
                                                      const PauliExpectations& ev);

std::vector<QubitOperator> dipole_operators_needed(const std::array<QubitOperator, 3>& dipole,
                                                   const std::vector<ExpansionOperator>& ops);

struct SpectrumPoint {
  double energy = 0.0;
  double oscillator_strength = 0.0;
  int multiplicity = 1;
};

/// f = 2 eps / 3 * sum |d|^2 for each excitation energy, sorted by energy.
std::vector<SpectrumPoint> oscillator_strengths(const std::vector<std::array<double, 3>>& dipoles,
                                                const std::vector<double>& energies);

/// Sums the strengths of points closer than `tol` and keeps their mean energy.
std::vector<SpectrumPoint> merge_degenerate(const std::vector<SpectrumPoint>& points, double tol);

struct CurvePoint {
  double energy = 0.0;
  double intensity = 0.0;
};

/// Lorentzian line shape f (gamma/pi) / ((E - eps)^2 + gamma^2) on [e_min, e_max].
std::vector<CurvePoint> broaden(const std::vector<SpectrumPoint>& points, double gamma, double e_min,
                                double e_max, double step);

std::string spectrum_csv(const std::vector<CurvePoint>& curve);
std::string stick_csv(const std::vector<SpectrumPoint>& points);

}  // namespace uccc
