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


#include "uccc/vqe.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>

namespace uccc {

namespace {

ParameterMap to_map(const Circuit& c, const Eigen::VectorXd& x) {
  ParameterMap m;
  for (std::size_t k = 0; k < c.parameters().size(); ++k) m[c.parameters()[k]] = x(static_cast<Eigen::Index>(k));
  return m;
}

double energy_of_bound(const QubitOperator& h, const Circuit& bound) {
  return run_statevector(bound).expectation(h);
}

}  // namespace

double circuit_energy(const QubitOperator& h, const Circuit& c, const ParameterMap& values) {
  return energy_of_bound(h, bind_parameters(c, values));
}

std::vector<double> parameter_shift_gradient(const QubitOperator& h, const Circuit& c,
                                             const ParameterMap& values) {
  std::vector<double> grad(c.parameters().size(), 0.0);
  std::map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < c.parameters().size(); ++k) index[c.parameters()[k]] = k;
  const Circuit bound = bind_parameters(c, values);
  const double shift = std::numbers::pi / 2;
  for (std::size_t g = 0; g < c.gates().size(); ++g) {
    const Gate& gate = c.gates()[g];
    if (!gate.angle.is_symbolic()) continue;
    double diff = 0.0;
    for (double s : {shift, -shift}) {
      Circuit shifted(bound.n_qubits(), bound.n_bits());
      for (std::size_t j = 0; j < bound.gates().size(); ++j) {
        Gate copy = bound.gates()[j];
        if (j == g) copy.angle.offset += s;
        shifted.add(copy);
      }
      diff += (s > 0 ? 0.5 : -0.5) * energy_of_bound(h, shifted);
    }
    grad[index.at(gate.angle.symbol)] += gate.angle.scale * diff;
  }
  return grad;
}

VqeResult vqe_optimize(const QubitOperator& h_full, const Circuit& c, const VqeOptions& options) {
  const Eigen::Index n = static_cast<Eigen::Index>(c.parameters().size());
  VqeResult r;
  // The constant term is added back at the end so that line-search
  // comparisons are not swamped by the core energy.
  const double constant = h_full.coefficient(PauliString{}).real();
  QubitOperator h = h_full;
  h.add_term(PauliString{}, -constant);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  auto f = [&](const Eigen::VectorXd& v) {
    ++r.evaluations;
    return circuit_energy(h, c, to_map(c, v));
  };
  auto grad = [&](const Eigen::VectorXd& v) {
    const auto g = parameter_shift_gradient(h, c, to_map(c, v));
    r.evaluations += 2 * static_cast<int>(g.size());
    return Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(g.data(), n));
  };
  double fx = f(x);
  Eigen::VectorXd g = grad(x);
  Eigen::MatrixXd inv_hess = Eigen::MatrixXd::Identity(n, n);
  auto finish = [&] {
    r.parameters = to_map(c, x);
    r.energy = fx + constant;
    r.gradient_norm = n ? g.cwiseAbs().maxCoeff() : 0.0;
  };
  while (true) {
    finish();
    if (r.gradient_norm < options.gradient_tol) return r;
    if (r.iterations >= options.max_iterations) {
      throw VqeError("VQE did not converge in " + std::to_string(options.max_iterations) +
                         " iterations (gradient norm " + std::to_string(r.gradient_norm) + ")",
                     r);
    }
    ++r.iterations;
    Eigen::VectorXd p = -inv_hess * g;
    double slope = g.dot(p);
    if (slope >= 0) {
      inv_hess.setIdentity();
      p = -g;
      slope = g.dot(p);
    }
    double alpha = 1.0, f_new = fx;
    Eigen::VectorXd x_new = x;
    for (int k = 0; k < 60; ++k) {
      x_new = x + alpha * p;
      f_new = f(x_new);
      if (f_new <= fx + 1e-4 * alpha * slope) break;
      alpha *= 0.5;
    }
    const Eigen::VectorXd g_new = grad(x_new);
    if (f_new > fx) {
      // Near the optimum the energy change drops below rounding; a step that
      // still shrinks the gradient is kept.
      if (g_new.cwiseAbs().maxCoeff() >= g.cwiseAbs().maxCoeff()) {
        inv_hess.setIdentity();
        continue;
      }
    }
    const Eigen::VectorXd s = x_new - x, y = g_new - g;
    const double sy = s.dot(y);
    if (sy > 1e-16) {
      const double rho = 1.0 / sy;
      const Eigen::MatrixXd i = Eigen::MatrixXd::Identity(n, n);
      inv_hess = (i - rho * s * y.transpose()) * inv_hess * (i - rho * y * s.transpose()) +
                 rho * s * s.transpose();
    }
    x = x_new;
    fx = f_new;
    g = g_new;
  }
}

}  // namespace uccc
