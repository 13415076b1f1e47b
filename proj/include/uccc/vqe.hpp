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

#include <stdexcept>
#include <vector>

#include "uccc/circuit.hpp"
#include "uccc/pauli.hpp"
#include "uccc/simulator.hpp"

namespace uccc {

struct VqeOptions {
  int max_iterations = 500;
  double gradient_tol = 1e-7;
};

struct VqeResult {
  ParameterMap parameters;
  double energy = 0.0;
  double gradient_norm = 0.0;
  int iterations = 0;
  int evaluations = 0;
};

class VqeError : public std::runtime_error {
 public:
  VqeError(const std::string& what, VqeResult partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const VqeResult& partial() const { return partial_; }

 private:
  VqeResult partial_;
};

/// <psi(theta)|H|psi(theta)> for a symbolic circuit.
double circuit_energy(const QubitOperator& h, const Circuit& c, const ParameterMap& values);

/**
 * Exact parameter-shift gradient: every rotation occurrence of a symbol
 * contributes scale * (E(+pi/2) - E(-pi/2)) / 2, ordered as c.parameters().
 */
std::vector<double> parameter_shift_gradient(const QubitOperator& h, const Circuit& c,
                                             const ParameterMap& values);

/**
 * BFGS with Armijo backtracking from the all-zero point. Stops when the
 * gradient infinity norm drops below `gradient_tol`; throws VqeError after
 * `max_iterations`.
 */
VqeResult vqe_optimize(const QubitOperator& h, const Circuit& c, const VqeOptions& options = {});

}  // namespace uccc
