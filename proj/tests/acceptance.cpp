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


// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "uccc/circuit.hpp"
#include "uccc/estimation.hpp"
#include "uccc/experiment.hpp"
#include "uccc/qse.hpp"
#include "uccc/simulator.hpp"
#include "uccc/symmetry.hpp"
#include "uccc/synthesis.hpp"
#include "uccc/vqe.hpp"

using namespace uccc;

namespace {

const std::vector<std::string> kFixtures = {"h2", "ch4", "ch3", "oh", "h2o", "ts"};

MolecularModel fixture(const std::string& name) { return load_model_json(oracle::fixture(name + ".json")); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::function<Outcome()>& body, double budget_s) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0 && s > budget_s) {
    o.pass = false;
    o.detail += " runtime over budget";
  }
  if (!o.pass) ++failures;
  std::printf("criterion %2d %s  %s [%.2f s]\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str(), s);
  std::fflush(stdout);
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

Circuit measured(const Circuit& prep) {
  Circuit c = prep;
  for (int q = 0; q < c.n_qubits(); ++q) c.add(Gate::measure(q, c.add_bit()));
  return c;
}

double chemaware_energy(const MolecularModel& m) {
  const Circuit c = synthesize(Strategy::ChemicallyAware, m, generate_uccsd_pool(m));
  return vqe_optimize(hamiltonian_from_model(m), c).energy;
}

Outcome gate_counts() {
  const MolecularModel ch4 = fixture("ch4");
  const int chem = two_qubit_gate_count(synthesize(Strategy::ChemicallyAware, ch4, generate_uccsd_pool(ch4)));
  Circuit hop(4);
  append_pair_hop(hop, 0, 2, "t");
  const int pair = two_qubit_gate_count(hop);
  const Excitation generic = make_double(2, 0, 1, 3, "t");
  const int dbl = two_qubit_gate_count(synth_commuting_sets({generic}, 4));
  const bool ok = chem <= 8 && pair == 2 && dbl <= 14 && generic.kind == ExcitationKind::GenericDouble;
  return {ok, "CH4 chemaware=" + std::to_string(chem) + " (target 7, limit 8), pair hop=" + std::to_string(pair) +
                  " (exact 2), zero-JW generic double commuting=" + std::to_string(dbl) + " (limit 14)"};
}

Outcome dominance() {
  Outcome o;
  for (const std::string& name : kFixtures) {
    const MolecularModel m = fixture(name);
    const auto pool = generate_uccsd_pool(m);
    const int ind = two_qubit_gate_count(synthesize(Strategy::Individual, m, pool));
    const int com = two_qubit_gate_count(synthesize(Strategy::CommutingSets, m, pool));
    const int chem = two_qubit_gate_count(synthesize(Strategy::ChemicallyAware, m, pool));
    o.pass = o.pass && chem <= com && com <= ind;
    o.detail += name + " " + std::to_string(chem) + "<=" + std::to_string(com) + "<=" + std::to_string(ind) + "; ";
    if (name == "ch4") {
      const double red = 1.0 - double(chem) / com;
      o.pass = o.pass && red >= 0.70;
      o.detail += "CH4 reduction vs commuting " + fmt("%.1f%%", 100 * red) + " (limit 70%); ";
    }
  }
  return o;
}

Outcome energies() {
  Outcome o;
  double worst = 0.0;
  for (const std::string& name : kFixtures) {
    const MolecularModel m = fixture(name);
    const double e = chemaware_energy(m);
    const double exact = oracle::sector_spectrum(m)(0);
    worst = std::max(worst, std::abs(e - exact));
    if (name == "ch4") {
      const bool shown = std::abs(std::round(e * 100) / 100 - (-39.73)) < 1e-9;
      o.pass = o.pass && shown;
      o.detail += "CH4 " + fmt("%.2f", e) + " hartree (expected -39.73); ";
    }
  }
  o.pass = o.pass && worst < 1e-6;
  o.detail += "max |VQE - dense| " + fmt("%.1e", worst) + " (limit 1e-6)";
  return o;
}

Outcome exactness() {
  std::mt19937_64 rng(20240607);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0.0;
  int cases = 0;
  for (const std::string& name : kFixtures) {
    const MolecularModel m = fixture(name);
    const auto pool = generate_uccsd_pool(m);
    for (Strategy s : {Strategy::Individual, Strategy::CommutingSets, Strategy::ChemicallyAware}) {
      const Circuit c = synthesize(s, m, pool);
      const auto order = strategy_order(s, m, pool);
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> theta;
        ParameterMap values;
        for (const Excitation& e : order) {
          theta.push_back(u(rng));
          values[e.parameter] = theta.back();
        }
        const StateVector psi = run_statevector(bind_parameters(c, values));
        const oracle::Vec want = oracle::ordered_exponentials(order, theta, m.n_spin_orbitals, m.hf_bits());
        const oracle::Vec got = Eigen::Map<const oracle::Vec>(psi.amplitudes().data(), want.size());
        worst = std::max(worst, (got - want).cwiseAbs().maxCoeff());
        ++cases;
      }
    }
  }
  return {worst < 1e-10, std::to_string(cases) + " bound circuits (3 strategies x 6 fixtures x 20 draws), max amplitude error " +
                             fmt("%.1e", worst) + " (limit 1e-10)"};
}

QseResult noiseless_qse(const MolecularModel& m, const std::vector<ExpansionOperator>& ops, PauliExpectations* ev_out,
                        StateVector* ground) {
  const QubitOperator h = hamiltonian_from_model(m);
  const Circuit c = synthesize(Strategy::ChemicallyAware, m, generate_uccsd_pool(m));
  const StateVector psi = run_statevector(bind_parameters(c, vqe_optimize(h, c).parameters));
  std::vector<QubitOperator> need = qse_operators(h, ops);
  if (m.dipoles) {
    std::array<QubitOperator, 3> d{dipole_operator(m, Axis::X), dipole_operator(m, Axis::Y), dipole_operator(m, Axis::Z)};
    for (QubitOperator& q : dipole_operators_needed(d, ops)) need.push_back(std::move(q));
  }
  const PauliExpectations ev = exact_expectations(psi, required_strings(need));
  if (ev_out) *ev_out = ev;
  if (ground) *ground = psi;
  return qse_solve(h, ops, ev);
}

Outcome qse_oracle() {
  Outcome o;
  const MolecularModel h2 = fixture("h2");
  const QseResult full = noiseless_qse(h2, complete_expansion(h2), nullptr, nullptr);
  const Eigen::VectorXd dense = oracle::sector_spectrum(h2, false);
  double worst = full.eigenvalues.size() == dense.size() ? 0.0 : 1.0;
  for (Eigen::Index i = 0; i < std::min(full.eigenvalues.size(), dense.size()); ++i) {
    worst = std::max(worst, std::abs(full.eigenvalues(i) - dense(i)));
  }
  o.pass = worst < 1e-6;
  o.detail = "H2 complete basis: " + std::to_string(full.eigenvalues.size()) + " states, max error " + fmt("%.1e", worst) +
             " (limit 1e-6); ";
  const MolecularModel ch4 = fixture("ch4");
  const QseResult red = noiseless_qse(ch4, default_expansion(ch4), nullptr, nullptr);
  const double s1 = red.eigenvalues(1) - red.eigenvalues(0);
  const double gap = red.eigenvalues(2) - red.eigenvalues(1);
  o.pass = o.pass && gap < 1e-6;
  o.detail += "CH4 reduced basis: first excitation " + fmt("%.3f", s1) + " hartree, degenerate pair gap " + fmt("%.1e", gap) +
              " (limit 1e-6)";
  return o;
}

Outcome spectra() {
  const MolecularModel m = fixture("ch4");
  PauliExpectations ev;
  StateVector psi(1);
  const QseResult r = noiseless_qse(m, default_expansion(m), &ev, &psi);
  std::array<QubitOperator, 3> d{dipole_operator(m, Axis::X), dipole_operator(m, Axis::Y), dipole_operator(m, Axis::Z)};
  const auto dipoles = transition_dipoles(r, d, ev);
  std::vector<double> eps;
  std::vector<std::array<double, 3>> dd;
  for (Eigen::Index v = 1; v < r.eigenvalues.size(); ++v) {
    eps.push_back(r.eigenvalues(v) - r.eigenvalues(0));
    dd.push_back(dipoles[static_cast<std::size_t>(v)]);
  }
  const auto peaks = merge_degenerate(oscillator_strengths(dd, eps), 1e-6);

  // Dense oracle: full diagonalization and transition moments of exact eigenvectors.
  const oracle::Mat h = oracle::hamiltonian(m);
  Eigen::SelfAdjointEigenSolver<oracle::Mat> es(h);
  const oracle::Vec g = Eigen::Map<const oracle::Vec>(psi.amplitudes().data(), h.rows());
  const double e0 = es.eigenvalues()(0);
  std::array<oracle::Vec, 3> mu_g;
  for (int a = 0; a < 3; ++a) mu_g[static_cast<std::size_t>(a)] = oracle::dipole(m, a) * g;
  double worst_e = 0.0, worst_f = 0.0;
  for (const SpectrumPoint& p : peaks) {
    double f = 0.0;
    for (Eigen::Index k = 0; k < h.rows(); ++k) {
      if (std::abs(es.eigenvalues()(k) - e0 - p.energy) > 1e-6) continue;
      for (int a = 0; a < 3; ++a) f += std::norm(es.eigenvectors().col(k).dot(mu_g[static_cast<std::size_t>(a)]));
    }
    f *= 2.0 * p.energy / 3.0;
    worst_f = std::max(worst_f, std::abs(f - p.oscillator_strength));
    double nearest = 1e9;
    for (Eigen::Index k = 1; k < h.rows(); ++k) nearest = std::min(nearest, std::abs(es.eigenvalues()(k) - e0 - p.energy));
    worst_e = std::max(worst_e, nearest);
  }
  const auto bright = std::max_element(peaks.begin(), peaks.end(), [](const SpectrumPoint& a, const SpectrumPoint& b) {
    return a.oscillator_strength < b.oscillator_strength;
  });
  int significant = 0;
  double total = 0.0;
  for (const SpectrumPoint& p : peaks) {
    total += p.oscillator_strength;
    if (p.oscillator_strength > 1e-6) ++significant;
  }
  const double step = 5e-4;
  const auto curve = broaden(peaks, 0.01, -100.0, 100.0, step);
  double area = 0.0;
  for (const CurvePoint& c : curve) area += c.intensity * step;
  const double area_err = std::abs(area - total) / total;
  const bool ok = significant == 1 && bright->multiplicity == 2 && worst_e < 1e-6 && worst_f < 1e-6 && area_err < 0.01;
  return {ok, "single merged peak at " + fmt("%.3f", bright->energy) + " hartree, f=" + fmt("%.2f", bright->oscillator_strength) +
                  ", multiplicity " + std::to_string(bright->multiplicity) + "; vs dense oracle |dE| " + fmt("%.1e", worst_e) +
                  ", |df| " + fmt("%.1e", worst_f) + " (limit 1e-6); Lorentzian area error " + fmt("%.2e", area_err) +
                  " (limit 1e-2)"};
}

Outcome pmsv() {
  const MolecularModel m = fixture("ch4");
  const QubitOperator h = hamiltonian_from_model(m);
  const Circuit c = synthesize(Strategy::ChemicallyAware, m, generate_uccsd_pool(m));
  const Circuit prep = bind_parameters(c, vqe_optimize(h, c).parameters);
  std::vector<double> err[3];
  const Mitigation mits[3] = {Mitigation::None, Mitigation::Pmsv1, Mitigation::Pmsv2};
  for (int k = 0; k < 3; ++k) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      EstimationOptions o;
      o.shots = 20000;
      o.mitigation = mits[k];
      o.noise.two_qubit_depolarizing_p = 0.01;
      o.noise.seed = seed;
      const EstimationReport r = run_estimation(prep, h, pmsv1_symmetries(m), pmsv2_symmetries(m), o);
      err[k].push_back(std::abs((r.estimate.energy - r.exact_energy) / r.exact_energy));
    }
  }
  EstimationOptions clean;
  clean.shots = 20000;
  clean.mitigation = Mitigation::Pmsv2;
  clean.noise.seed = 11;
  const EstimationReport n = run_estimation(prep, h, pmsv1_symmetries(m), pmsv2_symmetries(m), clean);
  const double raw = median(err[0]), p1 = median(err[1]), p2 = median(err[2]);
  const bool ok = raw > p1 && p1 > p2 && n.shots_kept == n.shots_total;
  return {ok, "median relative error over 5 seeds at p=0.01: raw " + fmt("%.3f%%", 100 * raw) + " > PMSV1 " +
                  fmt("%.3f%%", 100 * p1) + " > PMSV2 " + fmt("%.3f%%", 100 * p2) + "; noiseless PMSV2 discarded " +
                  std::to_string(n.shots_total - n.shots_kept) + " shots"};
}

Outcome mmsv() {
  std::mt19937_64 rng(77);
  std::normal_distribution<double> nd;
  double worst = 0.0;
  int checks = 0;
  for (const std::string& name : kFixtures) {
    const MolecularModel m = fixture(name);
    const int n = m.n_spin_orbitals;
    for (const SymmetryOperator& s : all_symmetries(m)) {
      const Circuit c = mmsv_instrument(Circuit(n), s);
      std::string letters(static_cast<std::size_t>(n), 'I');
      for (int q = 0; q < n; ++q) {
        if ((s.pauli.z >> q) & 1u) letters[static_cast<std::size_t>(q)] = 'Z';
      }
      const oracle::Mat sz = oracle::pauli(letters);
      for (int trial = 0; trial < 100; ++trial) {
        StateVector psi(static_cast<unsigned>(n));
        for (auto& a : psi.amplitudes()) a = {nd(rng), nd(rng)};
        psi.normalize();
        const oracle::Vec v = Eigen::Map<const oracle::Vec>(psi.amplitudes().data(), psi.dim());
        for (int x : {0, 1}) {
          oracle::Vec want = 0.5 * (v + (x ? -1.0 : 1.0) * (sz * v));
          if (want.norm() < 1e-12) continue;
          want /= want.norm();
          const Branch b = run_branch(c, psi, {x});
          const oracle::Vec got = Eigen::Map<const oracle::Vec>(b.state.amplitudes().data(), want.size());
          worst = std::max(worst, (got - want).cwiseAbs().maxCoeff());
          ++checks;
        }
      }
    }
  }
  return {worst < 1e-10, std::to_string(checks) + " accepted branches over all fixture symmetries and 100 random states each, max error " +
                             fmt("%.1e", worst) + " (limit 1e-10)"};
}

Outcome jsd_checks() {
  const MolecularModel m = fixture("ch4");
  const QubitOperator h = hamiltonian_from_model(m);
  const Circuit c = synthesize(Strategy::ChemicallyAware, m, generate_uccsd_pool(m));
  const Circuit meas = measured(bind_parameters(c, vqe_optimize(h, c).parameters));
  NoiseSpec noise;
  noise.seed = 5;
  const ShotTable t = sample(meas, 100000, noise);
  const auto exact = exact_distribution(meas);
  const double d = jsd(normalized(t), exact);
  const double self = jsd(exact, exact);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 1);
  double top = jsd(std::map<std::string, double>{{"00", 1.0}}, std::map<std::string, double>{{"11", 1.0}});
  for (int k = 0; k < 200; ++k) {
    std::map<std::string, double> p, q;
    for (const char* s : {"00", "01", "10", "11"}) {
      if (u(rng) < 0.7) p[s] = u(rng);
      if (u(rng) < 0.7) q[s] = u(rng);
    }
    if (p.empty() || q.empty()) continue;
    top = std::max(top, jsd(p, q));
  }
  const bool ok = d < 5e-3 && self == 0.0 && top <= 1.0 + 1e-12;
  return {ok, "JSD(sampled 1e5, exact) " + fmt("%.1e", d) + " (limit 5e-3); JSD(p,p) " + fmt("%.1g", self) +
                  "; max over disjoint and random pairs " + fmt("%.6f", top) + " (bound 1)"};
}

Outcome reaction() {
  const double ch4 = chemaware_energy(fixture("ch4"));
  const double oh = chemaware_energy(fixture("oh"));
  const double ts = chemaware_energy(fixture("ts"));
  const double ch3 = chemaware_energy(fixture("ch3"));
  const double h2o = chemaware_energy(fixture("h2o"));
  const double ae = reaction_energy({{"TS", ts, 1}, {"CH4", ch4, -1}, {"OH", oh, -1}});
  const double rae = reaction_energy({{"TS", ts, 1}, {"CH3", ch3, -1}, {"H2O", h2o, -1}});
  const auto shown = [](double v) { return std::round(v * 100) / 100; };
  const bool ok = std::abs(shown(ae) - 0.12) < 1e-9 && std::abs(shown(rae) - 0.12) < 1e-9;
  return {ok, "AE " + fmt("%+.4f", ae) + " -> " + fmt("%+.2f", shown(ae)) + ", R-AE " + fmt("%+.4f", rae) + " -> " +
                  fmt("%+.2f", shown(rae)) + " hartree (expected +0.12 each)"};
}

}  // namespace

int main() {
  report(1, gate_counts, 1.0);
  report(2, dominance, 5.0);
  report(3, energies, 60.0);
  report(4, exactness, 0.0);
  report(5, qse_oracle, 0.0);
  report(6, spectra, 0.0);
  report(7, pmsv, 300.0);
  report(8, mmsv, 0.0);
  report(9, jsd_checks, 0.0);
  report(10, reaction, 0.0);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
