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


#include "uccc/qse.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

namespace uccc {

std::vector<PauliString> required_strings(const std::vector<QubitOperator>& ops) {
  std::set<PauliString, CanonicalLess> seen;
  for (const QubitOperator& op : ops) {
    for (const auto& [s, c] : op.terms()) {
      if (!s.is_identity()) seen.insert(s);
    }
  }
  return {seen.begin(), seen.end()};
}

PauliExpectations exact_expectations(const StateVector& psi, const std::vector<PauliString>& strings) {
  PauliExpectations ev;
  for (const PauliString& s : strings) ev[s] = psi.expectation(s);
  return ev;
}

SampledExpectations sampled_expectations(const Circuit& prep, const std::vector<PauliString>& strings,
                                         const std::vector<SymmetryOperator>& verifiers,
                                         std::uint64_t shots, const NoiseSpec& noise) {
  QubitOperator op;
  for (const PauliString& s : strings) op.add_term(s, 1.0);
  const int n = prep.n_qubits();
  std::vector<MeasurementSet> sets = partition_terms(op, static_cast<unsigned>(n));
  if (!verifiers.empty()) sets = attach_verifiers(std::move(sets), verifiers);
  SampledExpectations out;
  out.n_circuits = sets.size();
  for (std::size_t k = 0; k < sets.size(); ++k) {
    NoiseSpec nk = noise;
    nk.seed = derive_seed(noise.seed, k);
    const ShotTable raw = sample(measurement_circuit(prep, sets[k]), shots, nk);
    const ShotTable kept = pmsv_postselect(raw, sets[k], n);
    out.shots_total += raw.shots;
    out.shots_kept += kept.shots;
    if (kept.shots == 0) throw std::runtime_error("every shot of measurement set " + std::to_string(k) + " was discarded");
    // The set estimator weights each term by 1, so read terms one at a time.
    for (std::size_t j = 0; j < sets[k].terms.size(); ++j) {
      MeasurementSet single = sets[k];
      single.terms = {PauliTerm(sets[k].terms[j].string, 1.0)};
      single.term_images = {sets[k].term_images[j]};
      out.values[sets[k].terms[j].string] =
          estimate_energy({single}, {kept}, QubitOperator{}, n).energy;
    }
  }
  return out;
}

double expectation_of(const QubitOperator& op, const PauliExpectations& ev) {
  cplx acc = 0.0;
  for (const auto& [s, c] : op.terms()) {
    if (s.is_identity()) {
      acc += c;
      continue;
    }
    auto it = ev.find(s);
    if (it == ev.end()) throw std::out_of_range("missing expectation for " + to_string(PauliTerm(s, 1.0)));
    acc += c * it->second;
  }
  return acc.real();
}

std::vector<ExpansionOperator> default_expansion(const MolecularModel& model) {
  const std::uint64_t hf = model.hf_bits();
  std::vector<int> occ, virt;
  for (int p = 0; p < model.n_orbitals(); ++p) {
    const bool a = (hf >> (2 * p)) & 1u, b = (hf >> (2 * p + 1)) & 1u;
    if (a && b) occ.push_back(p);
    if (!a && !b) virt.push_back(p);
  }
  std::vector<ExpansionOperator> out{{"I", FermionOperator::identity()}};
  for (int i : occ) {
    for (int a : virt) {
      out.push_back({"S(" + std::to_string(i) + "->" + std::to_string(a) + ")",
                     FermionOperator({cre(2 * a), ann(2 * i)}) + FermionOperator({cre(2 * a + 1), ann(2 * i + 1)})});
    }
  }
  for (int q : occ) {
    for (int p : virt) {
      out.push_back({"P(" + std::to_string(q) + "->" + std::to_string(p) + ")",
                     FermionOperator({cre(2 * p), ann(2 * q), cre(2 * p + 1), ann(2 * q + 1)})});
    }
  }
  return out;
}

std::vector<ExpansionOperator> complete_expansion(const MolecularModel& model) {
  const int n = model.n_spin_orbitals;
  std::vector<ExpansionOperator> out{{"I", FermionOperator::identity()}};
  for (int q = 0; q < n; ++q) {
    for (int p = 0; p < n; ++p) {
      if (p != q && p % 2 == q % 2) {
        out.push_back({"a+" + std::to_string(p) + " a" + std::to_string(q), FermionOperator({cre(p), ann(q)})});
      }
    }
  }
  for (int p = 0; p < n; ++p) {
    for (int r = p + 1; r < n; ++r) {
      for (int q = 0; q < n; ++q) {
        for (int s = q + 1; s < n; ++s) {
          if (p == q || p == s || r == q || r == s) continue;
          if ((p % 2) + (r % 2) != (q % 2) + (s % 2)) continue;
          out.push_back({"a+" + std::to_string(p) + " a+" + std::to_string(r) + " a" + std::to_string(s) +
                             " a" + std::to_string(q),
                         FermionOperator({cre(p), cre(r), ann(s), ann(q)})});
        }
      }
    }
  }
  return out;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

FermionOperator parse_fermion_terms(const std::string& text, int line) {
  FermionOperator op;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto plus = text.find(" + ", start);
    const std::string term = trim(text.substr(start, plus == std::string::npos ? std::string::npos : plus - start));
    start = plus == std::string::npos ? text.size() + 1 : plus + 3;
    if (term.empty()) throw std::invalid_argument("expansion line " + std::to_string(line) + ": empty term");
    std::istringstream in(term);
    std::string tok;
    cplx coef = 1.0;
    std::vector<Ladder> ladders;
    bool first = true;
    while (in >> tok) {
      if (first && tok.front() == '(') {
        coef = parse_coefficient(tok);
      } else if (tok == "I") {
      } else if (tok.rfind("a+", 0) == 0) {
        ladders.push_back(cre(std::stoi(tok.substr(2))));
      } else if (tok.size() > 1 && tok[0] == 'a') {
        ladders.push_back(ann(std::stoi(tok.substr(1))));
      } else {
        throw std::invalid_argument("expansion line " + std::to_string(line) + ": bad token '" + tok + "'");
      }
      first = false;
    }
    op += FermionOperator(ladders, coef);
  }
  return op;
}

}  // namespace

std::vector<ExpansionOperator> parse_expansion(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::vector<ExpansionOperator> out;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw.substr(0, raw.find('#')));
    if (s.empty()) continue;
    std::string label = "F" + std::to_string(out.size());
    if (const auto colon = s.find(':'); colon != std::string::npos) {
      label = trim(s.substr(0, colon));
      s = trim(s.substr(colon + 1));
    }
    out.push_back({label, parse_fermion_terms(s, line)});
  }
  if (out.empty()) throw std::invalid_argument("expansion file lists no operators");
  return out;
}

std::vector<QubitOperator> qse_operators(const QubitOperator& h, const std::vector<ExpansionOperator>& ops) {
  std::vector<QubitOperator> q;
  for (const auto& e : ops) q.push_back(jordan_wigner(e.op));
  std::vector<QubitOperator> out;
  for (std::size_t k = 0; k < q.size(); ++k) {
    const QubitOperator left = q[k].adjoint();
    for (std::size_t l = 0; l < q.size(); ++l) {
      out.push_back(left * q[l]);
      out.push_back(left * h * q[l]);
    }
  }
  return out;
}

QseResult qse_solve(const QubitOperator& h, const std::vector<ExpansionOperator>& ops,
                    const PauliExpectations& ev, const QseOptions& options) {
  const Eigen::Index m = static_cast<Eigen::Index>(ops.size());
  if (m == 0) throw std::invalid_argument("QSE needs at least one expansion operator");
  std::vector<QubitOperator> q;
  QseResult r;
  for (const auto& e : ops) {
    q.push_back(jordan_wigner(e.op));
    r.expansion_ops.push_back(e.op);
    r.labels.push_back(e.label);
  }
  r.subspace_h = Eigen::MatrixXd::Zero(m, m);
  r.subspace_s = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index k = 0; k < m; ++k) {
    const QubitOperator left = q[static_cast<std::size_t>(k)].adjoint();
    const QubitOperator left_h = left * h;
    for (Eigen::Index l = 0; l < m; ++l) {
      r.subspace_s(k, l) = expectation_of(left * q[static_cast<std::size_t>(l)], ev);
      r.subspace_h(k, l) = expectation_of(left_h * q[static_cast<std::size_t>(l)], ev);
    }
  }
  r.subspace_s = 0.5 * (r.subspace_s + r.subspace_s.transpose()).eval();
  r.subspace_h = 0.5 * (r.subspace_h + r.subspace_h.transpose()).eval();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> se(r.subspace_s);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (se.eigenvalues()(i) > options.overlap_threshold) keep.push_back(i);
  }
  if (keep.empty()) throw std::runtime_error("QSE overlap matrix is singular below the projection threshold");
  Eigen::MatrixXd x(m, static_cast<Eigen::Index>(keep.size()));
  for (std::size_t j = 0; j < keep.size(); ++j) {
    x.col(static_cast<Eigen::Index>(j)) = se.eigenvectors().col(keep[j]) / std::sqrt(se.eigenvalues()(keep[j]));
  }
  Eigen::MatrixXd hp = x.transpose() * r.subspace_h * x;
  hp = 0.5 * (hp + hp.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> he(hp);
  r.eigenvalues = he.eigenvalues();
  r.vectors = x * he.eigenvectors();
  r.retained_rank = keep.size();
  return r;
}

std::vector<QubitOperator> dipole_operators_needed(const std::array<QubitOperator, 3>& dipole,
                                                   const std::vector<ExpansionOperator>& ops) {
  std::vector<QubitOperator> out;
  for (const auto& e : ops) {
    const QubitOperator q = jordan_wigner(e.op);
    for (const QubitOperator& mu : dipole) out.push_back(mu * q);
  }
  return out;
}

std::vector<std::array<double, 3>> transition_dipoles(const QseResult& r,
                                                      const std::array<QubitOperator, 3>& dipole,
                                                      const PauliExpectations& ev) {
  const Eigen::Index m = r.vectors.rows();
  Eigen::MatrixXd moments(m, 3);
  for (Eigen::Index k = 0; k < m; ++k) {
    const QubitOperator q = jordan_wigner(r.expansion_ops[static_cast<std::size_t>(k)]);
    for (int a = 0; a < 3; ++a) moments(k, a) = expectation_of(dipole[static_cast<std::size_t>(a)] * q, ev);
  }
  std::vector<std::array<double, 3>> out;
  for (Eigen::Index v = 0; v < r.vectors.cols(); ++v) {
    std::array<double, 3> d{};
    for (int a = 0; a < 3; ++a) d[static_cast<std::size_t>(a)] = r.vectors.col(v).dot(moments.col(a));
    out.push_back(d);
  }
  return out;
}

std::vector<SpectrumPoint> oscillator_strengths(const std::vector<std::array<double, 3>>& dipoles,
                                                const std::vector<double>& energies) {
  if (dipoles.size() != energies.size()) throw std::invalid_argument("one dipole vector per energy is required");
  std::vector<SpectrumPoint> out;
  for (std::size_t v = 0; v < energies.size(); ++v) {
    const auto& d = dipoles[v];
    out.push_back({energies[v], 2.0 * energies[v] / 3.0 * (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]), 1});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const SpectrumPoint& a, const SpectrumPoint& b) { return a.energy < b.energy; });
  return out;
}

std::vector<SpectrumPoint> merge_degenerate(const std::vector<SpectrumPoint>& points, double tol) {
  std::vector<SpectrumPoint> sorted = points;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const SpectrumPoint& a, const SpectrumPoint& b) { return a.energy < b.energy; });
  std::vector<SpectrumPoint> out;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    double e_sum = 0.0, f_sum = 0.0;
    int mult = 0;
    while (j < sorted.size() && sorted[j].energy - sorted[i].energy < tol) {
      e_sum += sorted[j].energy * sorted[j].multiplicity;
      f_sum += sorted[j].oscillator_strength;
      mult += sorted[j].multiplicity;
      ++j;
    }
    out.push_back({e_sum / mult, f_sum, mult});
    i = j;
  }
  return out;
}

std::vector<CurvePoint> broaden(const std::vector<SpectrumPoint>& points, double gamma, double e_min,
                                double e_max, double step) {
  if (gamma <= 0.0) throw std::invalid_argument("Lorentzian width must be positive");
  if (step <= 0.0 || e_max < e_min) throw std::invalid_argument("invalid spectrum grid");
  std::vector<CurvePoint> out;
  const auto n = static_cast<std::size_t>(std::floor((e_max - e_min) / step + 1e-9)) + 1;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = e_min + static_cast<double>(i) * step;
    double s = 0.0;
    for (const SpectrumPoint& p : points) {
      const double d = e - p.energy;
      s += p.oscillator_strength * (gamma / std::numbers::pi) / (d * d + gamma * gamma);
    }
    out.push_back({e, s});
  }
  return out;
}

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::string spectrum_csv(const std::vector<CurvePoint>& curve) {
  std::string out = "energy_hartree,intensity\n";
  for (const CurvePoint& p : curve) out += fmt(p.energy) + "," + fmt(p.intensity) + "\n";
  return out;
}

std::string stick_csv(const std::vector<SpectrumPoint>& points) {
  std::string out = "energy_hartree,oscillator_strength\n";
  for (const SpectrumPoint& p : points) out += fmt(p.energy) + "," + fmt(p.oscillator_strength) + "\n";
  return out;
}

}  // namespace uccc
