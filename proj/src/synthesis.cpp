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


#include "uccc/synthesis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "uccc/clifford.hpp"

namespace uccc {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::Individual: return "individual";
    case Strategy::CommutingSets: return "commuting";
    case Strategy::ChemicallyAware: return "chemaware";
  }
  return "?";
}

Strategy parse_strategy(std::string_view name) {
  if (name == "individual") return Strategy::Individual;
  if (name == "commuting" || name == "commuting-sets") return Strategy::CommutingSets;
  if (name == "chemaware" || name == "chemically-aware") return Strategy::ChemicallyAware;
  throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
}

std::vector<std::pair<PauliString, double>> excitation_rotations(const Excitation& e) {
  std::vector<std::pair<PauliString, double>> out;
  const QubitOperator g = jordan_wigner(e.generator());
  for (const auto& [s, a] : g.terms()) {
    if (std::abs(a.real()) > 1e-12) {
      throw std::logic_error("generator of " + e.label() + " is not anti-Hermitian");
    }
    out.emplace_back(s, a.imag());
  }
  return out;
}

void append_reference(Circuit& c, std::uint64_t hf_bits) {
  for (int q = 0; q < c.n_qubits(); ++q) {
    if ((hf_bits >> q) & 1u) c.add(Gate::x(q));
  }
}

void append_pauli_exponential(Circuit& c, const PauliString& p, const Angle& angle) {
  std::vector<int> support;
  for (int q = 0; q < c.n_qubits(); ++q) {
    if ((p.support() >> q) & 1u) support.push_back(q);
  }
  if (support.empty()) return;
  const double half_pi = std::numbers::pi / 2;
  for (int q : support) {
    const Letter l = p.at(static_cast<unsigned>(q));
    if (l == Letter::X) c.add(Gate::h(q));
    if (l == Letter::Y) c.add(Gate::rx(q, Angle::literal(half_pi)));
  }
  for (std::size_t k = 0; k + 1 < support.size(); ++k) c.add(Gate::cx(support[k], support[k + 1]));
  c.add(Gate::rz(support.back(), angle));
  for (std::size_t k = support.size() - 1; k > 0; --k) c.add(Gate::cx(support[k - 1], support[k]));
  for (int q : support) {
    const Letter l = p.at(static_cast<unsigned>(q));
    if (l == Letter::X) c.add(Gate::h(q));
    if (l == Letter::Y) c.add(Gate::rx(q, Angle::literal(-half_pi)));
  }
}

namespace {

// exp(i t/2 (Y_a X_b - X_a Y_b)) where `minus_t` evaluates to -t.
void append_hop(Circuit& c, int a, int b, const Angle& minus_t) {
  const double half_pi = std::numbers::pi / 2;
  c.add(Gate::ry(a, Angle::literal(half_pi)));
  c.add(Gate::cx(a, b));
  c.add(Gate::ry(a, minus_t));
  c.add(Gate::ry(b, minus_t));
  c.add(Gate::cx(a, b));
  c.add(Gate::ry(a, Angle::literal(-half_pi)));
}

}  // namespace

void append_pair_hop(Circuit& c, int a, int b, const std::string& symbol) {
  append_hop(c, a, b, Angle::symbolic(symbol, -1.0));
}

namespace {

const std::string& symbol_of(const Excitation& e) {
  if (e.parameter.empty()) throw std::invalid_argument("excitation " + e.label() + " has no parameter");
  return e.parameter;
}

Circuit diagonal_gadget(const Excitation& e, int n_qubits) {
  const auto rot = excitation_rotations(e);
  std::vector<PauliString> strings;
  for (const auto& [s, coef] : rot) strings.push_back(s);
  const Diagonalization d = diagonalize(strings, static_cast<unsigned>(n_qubits));
  std::vector<PhaseRotation> phases;
  for (std::size_t k = 0; k < rot.size(); ++k) {
    const double sign = d.images[k].coefficient.real();
    phases.push_back({d.images[k].string.z, Angle::symbolic(symbol_of(e), -2.0 * rot[k].second * sign)});
  }
  Circuit out(n_qubits);
  out.append(d.clifford);
  emit_phase_polynomial(out, std::move(phases));
  out.append(d.clifford.inverse());
  return out;
}

// A single as a hop between its end qubits, conjugated by CZ gates from the
// Jordan-Wigner chain onto the lower end: 2 + 2 * (chain length) CX.
Circuit chain_hop(const Excitation& e, int n_qubits) {
  const auto rot = excitation_rotations(e);
  const PauliString& first = rot.front().first;
  const int lo = std::countr_zero(first.x);
  const int hi = 63 - std::countl_zero(first.x);
  double y_lo = 0.0;
  for (const auto& [s, coef] : rot) {
    if (s.at(static_cast<unsigned>(lo)) == Letter::Y) y_lo = coef;
  }
  std::vector<int> chain;
  for (int q = lo + 1; q < hi; ++q) {
    if (first.at(static_cast<unsigned>(q)) == Letter::Z) chain.push_back(q);
  }
  Circuit out(n_qubits);
  const auto conjugate_chain = [&] {
    if (chain.empty()) return;
    out.add(Gate::h(lo));
    for (int q : chain) out.add(Gate::cx(q, lo));
    out.add(Gate::h(lo));
  };
  conjugate_chain();
  append_hop(out, lo, hi, Angle::symbolic(symbol_of(e), -2.0 * y_lo));
  conjugate_chain();
  return out;
}

void append_commuting_set(Circuit& c, const Excitation& e) {
  Circuit gadget = diagonal_gadget(e, c.n_qubits());
  if (e.kind == ExcitationKind::Single) {
    Circuit hop = chain_hop(e, c.n_qubits());
    if (two_qubit_gate_count(hop) < two_qubit_gate_count(gadget)) gadget = std::move(hop);
  }
  c.append(gadget);
}

}  // namespace

Circuit synth_individual(const std::vector<Excitation>& pool, unsigned n_qubits, std::uint64_t hf_bits) {
  Circuit c(static_cast<int>(n_qubits));
  append_reference(c, hf_bits);
  for (const Excitation& e : pool) {
    for (const auto& [s, coef] : excitation_rotations(e)) {
      append_pauli_exponential(c, s, Angle::symbolic(symbol_of(e), -2.0 * coef));
    }
  }
  return c;
}

Circuit synth_commuting_sets(const std::vector<Excitation>& pool, unsigned n_qubits, std::uint64_t hf_bits) {
  Circuit c(static_cast<int>(n_qubits));
  append_reference(c, hf_bits);
  for (const Excitation& e : pool) append_commuting_set(c, e);
  return c;
}

ChemAwarePlan plan_chemically_aware(const MolecularModel& model, const std::vector<Excitation>& pool) {
  ChemAwarePlan plan;
  plan.symmetries = all_symmetries(model);
  for (Excitation& e : filter_excitations(pool, plan.symmetries, model)) {
    (e.kind == ExcitationKind::PairedDouble ? plan.paired : plan.rest).push_back(std::move(e));
  }
  std::stable_partition(plan.rest.begin(), plan.rest.end(),
                        [](const Excitation& e) { return e.kind != ExcitationKind::Single; });
  return plan;
}

Circuit synth_chemically_aware(const MolecularModel& model, const std::vector<Excitation>& pool) {
  const ChemAwarePlan plan = plan_chemically_aware(model, pool);
  const std::uint64_t hf = model.hf_bits();
  Circuit c(model.n_spin_orbitals);
  std::set<int> hopping;
  for (const Excitation& e : plan.paired) {
    hopping.insert(e.spatial_pair->first);
    hopping.insert(e.spatial_pair->second);
  }
  for (int p : hopping) {
    const bool alpha = (hf >> (2 * p)) & 1u, beta = (hf >> (2 * p + 1)) & 1u;
    if (alpha != beta) throw std::logic_error("paired double touches a singly occupied orbital");
    if (alpha) c.add(Gate::x(2 * p));
  }
  for (const Excitation& e : plan.paired) {
    const auto [q, p] = *e.spatial_pair;
    append_pair_hop(c, 2 * q, 2 * p, symbol_of(e));
  }
  for (int p : hopping) c.add(Gate::cx(2 * p, 2 * p + 1));
  for (int q = 0; q < model.n_spin_orbitals; ++q) {
    if (((hf >> q) & 1u) && !hopping.count(q / 2)) c.add(Gate::x(q));
  }
  for (const Excitation& e : plan.rest) append_commuting_set(c, e);
  return c;
}

std::vector<Excitation> strategy_order(Strategy s, const MolecularModel& model,
                                       const std::vector<Excitation>& pool) {
  if (s != Strategy::ChemicallyAware) return pool;
  ChemAwarePlan plan = plan_chemically_aware(model, pool);
  std::vector<Excitation> out = std::move(plan.paired);
  for (Excitation& e : plan.rest) out.push_back(std::move(e));
  return out;
}

Circuit synthesize(Strategy s, const MolecularModel& model, const std::vector<Excitation>& pool) {
  const unsigned n = static_cast<unsigned>(model.n_spin_orbitals);
  switch (s) {
    case Strategy::Individual: return synth_individual(pool, n, model.hf_bits());
    case Strategy::CommutingSets: return synth_commuting_sets(pool, n, model.hf_bits());
    case Strategy::ChemicallyAware: return synth_chemically_aware(model, pool);
  }
  throw std::logic_error("unreachable strategy");
}

MolecularModel without_point_group(const MolecularModel& model) {
  MolecularModel m = model;
  m.point_group = "C1";
  m.irreps.assign(static_cast<std::size_t>(m.n_orbitals()), "A");
  return m;
}

}  // namespace uccc
