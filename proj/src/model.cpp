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

#include "uccc/model.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "uccc/fermion.hpp"
#include "uccc/point_group.hpp"

namespace uccc {

using nlohmann::json;

namespace {

constexpr double kSymmetryTol = 1e-10;

Eigen::MatrixXd matrix_from_json(const json& j, int n, const char* field) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    throw std::invalid_argument(std::string(field) + " must be a " + std::to_string(n) + "x" +
                                std::to_string(n) + " array");
  }
  Eigen::MatrixXd m(n, n);
  for (int p = 0; p < n; ++p) {
    const json& row = j[static_cast<std::size_t>(p)];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw std::invalid_argument(std::string(field) + " row " + std::to_string(p) +
                                  " has the wrong length");
    }
    for (int q = 0; q < n; ++q) m(p, q) = row[static_cast<std::size_t>(q)].get<double>();
  }
  return m;
}

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index p = 0; p < m.rows(); ++p) {
    json row = json::array();
    for (Eigen::Index q = 0; q < m.cols(); ++q) row.push_back(m(p, q));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

void TwoElectronIntegrals::set_symmetric(int p, int q, int r, int s, double v) {
  for (auto [a, b] : {std::pair{p, q}, std::pair{q, p}}) {
    for (auto [c, d] : {std::pair{r, s}, std::pair{s, r}}) {
      (*this)(a, b, c, d) = v;
      (*this)(c, d, a, b) = v;
    }
  }
}

int MolecularModel::n_electrons() const { return n_alpha() + n_beta(); }

int MolecularModel::n_alpha() const {
  int n = 0;
  for (std::size_t p = 0; p < hf_occupation.size(); p += 2) n += hf_occupation[p] ? 1 : 0;
  return n;
}

int MolecularModel::n_beta() const {
  int n = 0;
  for (std::size_t p = 1; p < hf_occupation.size(); p += 2) n += hf_occupation[p] ? 1 : 0;
  return n;
}

std::uint64_t MolecularModel::hf_bits() const {
  std::uint64_t b = 0;
  for (std::size_t p = 0; p < hf_occupation.size(); ++p) {
    if (hf_occupation[p]) b |= std::uint64_t{1} << p;
  }
  return b;
}

void MolecularModel::validate() const {
  if (n_spin_orbitals <= 0 || n_spin_orbitals % 2 != 0) {
    throw std::invalid_argument("n_spin_orbitals must be a positive even number");
  }
  if (n_spin_orbitals > 64) throw std::invalid_argument("at most 64 spin orbitals are supported");
  const int n = n_orbitals();
  if (static_cast<int>(hf_occupation.size()) != n_spin_orbitals) {
    throw std::invalid_argument("hf_occupation length " + std::to_string(hf_occupation.size()) +
                                " does not match n_spin_orbitals " +
                                std::to_string(n_spin_orbitals));
  }
  for (auto o : hf_occupation) {
    if (o > 1) throw std::invalid_argument("hf_occupation entries must be 0 or 1");
  }
  if (h.rows() != n || h.cols() != n) {
    throw std::invalid_argument("h_pq must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  if (g.n_orbitals() != n) {
    throw std::invalid_argument("g_pqrs dimension does not match the orbital count");
  }
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (std::abs(h(p, q) - h(q, p)) > kSymmetryTol) {
        throw std::invalid_argument("h_pq is not symmetric at (" + std::to_string(p) + "," +
                                    std::to_string(q) + ")");
      }
    }
  }
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      for (int r = 0; r < n; ++r) {
        for (int s = 0; s < n; ++s) {
          const double v = g(p, q, r, s);
          if (std::abs(v - g(q, p, r, s)) > kSymmetryTol ||
              std::abs(v - g(p, q, s, r)) > kSymmetryTol ||
              std::abs(v - g(r, s, p, q)) > kSymmetryTol) {
            throw std::invalid_argument("g_pqrs violates 8-fold symmetry at (" +
                                        std::to_string(p) + "," + std::to_string(q) + "," +
                                        std::to_string(r) + "," + std::to_string(s) + ")");
          }
        }
      }
    }
  }
  const PointGroup& pg = uccc::point_group(this->point_group);
  if (static_cast<int>(irreps.size()) != n) {
    throw std::invalid_argument("irreps must list one label per spatial orbital");
  }
  for (const auto& label : irreps) pg.irrep_index(label);
  if (dipoles) {
    for (const auto& d : *dipoles) {
      if (d.rows() != n || d.cols() != n) {
        throw std::invalid_argument("dipole integral matrices must be " + std::to_string(n) + "x" +
                                    std::to_string(n));
      }
      if ((d - d.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol) {
        throw std::invalid_argument("dipole integral matrix is not symmetric");
      }
    }
  }
}

MolecularModel model_from_json_text(const std::string& text) {
  const json j = json::parse(text);
  MolecularModel m;
  m.name = j.value("name", std::string{});
  m.n_spin_orbitals = j.at("n_spin_orbitals").get<int>();
  if (m.n_spin_orbitals <= 0 || m.n_spin_orbitals % 2 != 0) {
    throw std::invalid_argument("n_spin_orbitals must be a positive even number");
  }
  for (const auto& o : j.at("hf_occupation")) m.hf_occupation.push_back(o.get<std::uint8_t>());
  m.point_group = j.value("point_group", std::string("C1"));
  m.irreps = j.at("irreps").get<std::vector<std::string>>();
  m.core_energy = j.value("core_energy", 0.0);
  const int n = m.n_orbitals();
  m.h = matrix_from_json(j.at("h_pq"), n, "h_pq");

  const std::string convention = j.value("integral_convention", std::string("chemist"));
  if (convention != "chemist" && convention != "physicist") {
    throw std::invalid_argument("integral_convention must be 'chemist' or 'physicist'");
  }
  const json& gj = j.at("g_pqrs");
  if (!gj.is_array() || static_cast<int>(gj.size()) != n) {
    throw std::invalid_argument("g_pqrs must be a dense " + std::to_string(n) + "^4 array");
  }
  m.g = TwoElectronIntegrals(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        const json& row = gj.at(static_cast<std::size_t>(a)).at(static_cast<std::size_t>(b))
                              .at(static_cast<std::size_t>(c));
        if (static_cast<int>(row.size()) != n) {
          throw std::invalid_argument("g_pqrs must be a dense " + std::to_string(n) + "^4 array");
        }
        for (int d = 0; d < n; ++d) {
          const double v = row[static_cast<std::size_t>(d)].get<double>();
          // Physicist <ab|cd> equals chemist (ac|bd).
          if (convention == "chemist") {
            m.g(a, b, c, d) = v;
          } else {
            m.g(a, c, b, d) = v;
          }
        }
      }
    }
  }
  if (j.contains("dipole_x") || j.contains("dipole_y") || j.contains("dipole_z")) {
    m.dipoles = std::array<Eigen::MatrixXd, 3>{matrix_from_json(j.at("dipole_x"), n, "dipole_x"),
                                               matrix_from_json(j.at("dipole_y"), n, "dipole_y"),
                                               matrix_from_json(j.at("dipole_z"), n, "dipole_z")};
  }
  m.validate();
  return m;
}

MolecularModel load_model_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open model file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return model_from_json_text(ss.str());
  } catch (const json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

std::string model_to_json_text(const MolecularModel& m) {
  json j;
  j["name"] = m.name;
  j["n_spin_orbitals"] = m.n_spin_orbitals;
  j["hf_occupation"] = m.hf_occupation;
  j["point_group"] = m.point_group;
  j["irreps"] = m.irreps;
  j["core_energy"] = m.core_energy;
  j["integral_convention"] = "chemist";
  j["h_pq"] = matrix_to_json(m.h);
  const int n = m.n_orbitals();
  json g = json::array();
  for (int a = 0; a < n; ++a) {
    json ga = json::array();
    for (int b = 0; b < n; ++b) {
      json gb = json::array();
      for (int c = 0; c < n; ++c) {
        json gc = json::array();
        for (int d = 0; d < n; ++d) gc.push_back(m.g(a, b, c, d));
        gb.push_back(std::move(gc));
      }
      ga.push_back(std::move(gb));
    }
    g.push_back(std::move(ga));
  }
  j["g_pqrs"] = std::move(g);
  if (m.dipoles) {
    j["dipole_x"] = matrix_to_json((*m.dipoles)[0]);
    j["dipole_y"] = matrix_to_json((*m.dipoles)[1]);
    j["dipole_z"] = matrix_to_json((*m.dipoles)[2]);
  }
  return j.dump(1);
}

double hf_energy(const MolecularModel& m) {
  std::vector<int> occ;
  for (int p = 0; p < m.n_spin_orbitals; ++p) {
    if (m.hf_occupation[static_cast<std::size_t>(p)]) occ.push_back(p);
  }
  double e = m.core_energy;
  for (int p : occ) e += m.h(p / 2, p / 2);
  for (int p : occ) {
    for (int q : occ) {
      if (p == q) continue;
      const int a = p / 2, b = q / 2;
      e += 0.5 * m.g(a, a, b, b);
      if (p % 2 == q % 2) e -= 0.5 * m.g(a, b, b, a);
    }
  }
  return e;
}

QubitOperator hamiltonian_from_model(const MolecularModel& m) {
  m.validate();
  const int n = m.n_orbitals();
  QubitOperator ham = QubitOperator::identity(m.core_energy);
  std::vector<QubitOperator> up(static_cast<std::size_t>(m.n_spin_orbitals));
  std::vector<QubitOperator> down(static_cast<std::size_t>(m.n_spin_orbitals));
  for (int p = 0; p < m.n_spin_orbitals; ++p) {
    up[static_cast<std::size_t>(p)] = jordan_wigner(cre(p));
    down[static_cast<std::size_t>(p)] = jordan_wigner(ann(p));
  }
  auto A = [&](int p) -> const QubitOperator& { return up[static_cast<std::size_t>(p)]; };
  auto a = [&](int p) -> const QubitOperator& { return down[static_cast<std::size_t>(p)]; };

  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (m.h(p, q) == 0.0) continue;
      for (int s = 0; s < 2; ++s) ham += (A(2 * p + s) * a(2 * q + s)) * m.h(p, q);
    }
  }
  // 1/2 sum (pq|rs) a+_{p s} a+_{r t} a_{s t} a_{q s}
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      for (int r = 0; r < n; ++r) {
        for (int s = 0; s < n; ++s) {
          const double v = m.g(p, q, r, s);
          if (v == 0.0) continue;
          for (int sig = 0; sig < 2; ++sig) {
            for (int tau = 0; tau < 2; ++tau) {
              const int P = 2 * p + sig, Q = 2 * q + sig, R = 2 * r + tau, S = 2 * s + tau;
              if (P == R || Q == S) continue;
              ham += (A(P) * A(R) * a(S) * a(Q)) * (0.5 * v);
            }
          }
        }
      }
    }
  }
  // Drop imaginary round-off; the operator is Hermitian by construction.
  QubitOperator out;
  for (const auto& [str, c] : ham.terms()) out.add_term(str, c.real());
  return out;
}

QubitOperator dipole_operator(const MolecularModel& m, Axis axis) {
  if (!m.dipoles) throw std::invalid_argument("model " + m.name + " has no dipole integrals");
  const Eigen::MatrixXd& d = (*m.dipoles)[static_cast<std::size_t>(axis)];
  FermionOperator op;
  for (int p = 0; p < m.n_orbitals(); ++p) {
    for (int q = 0; q < m.n_orbitals(); ++q) {
      if (d(p, q) == 0.0) continue;
      for (int s = 0; s < 2; ++s) op += FermionOperator({cre(2 * p + s), ann(2 * q + s)}, d(p, q));
    }
  }
  QubitOperator out;
  const QubitOperator q = jordan_wigner(op);
  for (const auto& [str, c] : q.terms()) out.add_term(str, c.real());
  return out;
}

}  // namespace uccc
