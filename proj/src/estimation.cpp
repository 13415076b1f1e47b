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


#include "uccc/estimation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "uccc/clifford.hpp"

namespace uccc {

namespace {

void rebuild(MeasurementSet& s, unsigned n_qubits) {
  std::vector<PauliString> strings;
  for (const PauliTerm& t : s.terms) strings.push_back(t.string);
  for (const SymmetryOperator& v : s.verifiers) strings.push_back(v.pauli);
  Diagonalization d = diagonalize(strings, n_qubits);
  s.diagonalizer = std::move(d.clifford);
  s.term_images.assign(d.images.begin(), d.images.begin() + static_cast<std::ptrdiff_t>(s.terms.size()));
  s.verifier_images.assign(d.images.begin() + static_cast<std::ptrdiff_t>(s.terms.size()), d.images.end());
}

int parity(std::string_view bits, std::uint64_t mask, int offset) {
  const int n = static_cast<int>(bits.size());
  int p = 0;
  while (mask) {
    const int q = std::countr_zero(mask);
    mask &= mask - 1;
    p ^= bits[static_cast<std::size_t>(n - 1 - (offset + q))] == '1';
  }
  return p;
}

// Eigenvalue read for a signed Z-string image.
double eigenvalue(std::string_view bits, const PauliTerm& image, int offset) {
  const double sign = image.coefficient.real();
  return parity(bits, image.string.z, offset) ? -sign : sign;
}

}  // namespace

std::vector<MeasurementSet> partition_terms(const QubitOperator& op, unsigned n_qubits) {
  std::vector<PauliTerm> terms;
  for (const PauliTerm& t : op.term_list()) {
    if (!t.string.is_identity()) terms.push_back(t);
  }
  std::stable_sort(terms.begin(), terms.end(), [](const PauliTerm& a, const PauliTerm& b) {
    return std::abs(a.coefficient) > std::abs(b.coefficient);
  });
  std::vector<MeasurementSet> sets;
  for (const PauliTerm& t : terms) {
    auto fits = [&](const MeasurementSet& s) {
      return std::all_of(s.terms.begin(), s.terms.end(),
                         [&](const PauliTerm& u) { return commutes(u, t); });
    };
    auto it = std::find_if(sets.begin(), sets.end(), fits);
    if (it == sets.end()) {
      sets.emplace_back();
      it = std::prev(sets.end());
    }
    it->terms.push_back(t);
  }
  for (MeasurementSet& s : sets) rebuild(s, n_qubits);
  return sets;
}

std::vector<MeasurementSet> attach_verifiers(std::vector<MeasurementSet> sets,
                                             const std::vector<SymmetryOperator>& syms) {
  for (MeasurementSet& s : sets) {
    for (const SymmetryOperator& sym : syms) {
      const bool ok = std::all_of(s.terms.begin(), s.terms.end(),
                                  [&](const PauliTerm& t) { return commutes(t.string, sym.pauli); });
      if (ok) s.verifiers.push_back(sym);
    }
    rebuild(s, static_cast<unsigned>(s.diagonalizer.n_qubits()));
  }
  return sets;
}

Circuit measurement_circuit(const Circuit& prep, const MeasurementSet& set) {
  Circuit c = prep;
  c.append(set.diagonalizer);
  const int base = c.n_bits();
  for (int q = 0; q < c.n_qubits(); ++q) {
    c.add_bit();
    c.add(Gate::measure(q, base + q));
  }
  return c;
}

ShotTable pmsv_postselect(const ShotTable& table, const MeasurementSet& set, int n_qubits) {
  const int offset = table.n_bits - n_qubits;
  if (offset < 0) throw std::invalid_argument("shot table has fewer bits than measured qubits");
  ShotTable out;
  out.n_bits = table.n_bits;
  for (const auto& [bits, n] : table.counts) {
    bool keep = true;
    for (std::size_t v = 0; v < set.verifiers.size() && keep; ++v) {
      keep = eigenvalue(bits, set.verifier_images[v], offset) == static_cast<double>(set.verifiers[v].sector);
    }
    if (keep) out.add(bits, n);
  }
  return out;
}

Circuit mmsv_instrument(const Circuit& c, const SymmetryOperator& sym) {
  if (!sym.pauli.is_diagonal()) {
    throw std::invalid_argument("MMSV needs a Z-string symmetry; diagonalize it first");
  }
  std::vector<int> support;
  for (int q = 0; q < c.n_qubits(); ++q) {
    if ((sym.pauli.z >> q) & 1u) support.push_back(q);
  }
  if (support.empty()) throw std::invalid_argument("MMSV symmetry is the identity");
  if (static_cast<int>(sym.pauli.span()) > c.n_qubits()) {
    throw std::invalid_argument("MMSV symmetry acts outside the circuit");
  }
  Circuit out = c;
  const int target = support.back();
  for (std::size_t k = 0; k + 1 < support.size(); ++k) out.add(Gate::cx(support[k], target));
  const int bit = out.add_bit();
  out.add(Gate::measure(target, bit));
  out.add(Gate::reset(target));
  out.add(Gate::conditional_x(bit, target));
  for (std::size_t k = support.size() - 1; k > 0; --k) out.add(Gate::cx(support[k - 1], target));
  return out;
}

ShotTable mmsv_postselect(const ShotTable& table, int bit, int sector) {
  if (bit < 0 || bit >= table.n_bits) throw std::out_of_range("MMSV bit outside the shot table");
  const char want = sector < 0 ? '1' : '0';
  ShotTable out;
  out.n_bits = table.n_bits;
  for (const auto& [bits, n] : table.counts) {
    if (bits[static_cast<std::size_t>(table.n_bits - 1 - bit)] == want) out.add(bits, n);
  }
  return out;
}

EnergyEstimate estimate_energy(const std::vector<MeasurementSet>& sets,
                               const std::vector<ShotTable>& tables, const QubitOperator& op,
                               int n_qubits) {
  if (sets.size() != tables.size()) throw std::invalid_argument("one shot table per measurement set is required");
  EnergyEstimate e;
  e.energy = op.coefficient(PauliString{}).real();
  double variance = 0.0;
  for (std::size_t k = 0; k < sets.size(); ++k) {
    const ShotTable& t = tables[k];
    if (t.shots == 0) throw std::runtime_error("measurement set " + std::to_string(k) + " has no shots after post-selection");
    const int offset = t.n_bits - n_qubits;
    double sum = 0.0, sum_sq = 0.0;
    for (const auto& [bits, n] : t.counts) {
      double x = 0.0;
      for (std::size_t j = 0; j < sets[k].terms.size(); ++j) {
        x += sets[k].terms[j].coefficient.real() * eigenvalue(bits, sets[k].term_images[j], offset);
      }
      sum += x * static_cast<double>(n);
      sum_sq += x * x * static_cast<double>(n);
    }
    const double n = static_cast<double>(t.shots);
    const double mean = sum / n;
    e.energy += mean;
    if (t.shots > 1) variance += std::max(0.0, (sum_sq - n * mean * mean) / (n - 1)) / n;
  }
  e.standard_error = std::sqrt(variance);
  return e;
}

double estimate_energy_exact(const std::vector<MeasurementSet>& sets,
                             const std::vector<std::map<std::string, double>>& dists,
                             const QubitOperator& op, int n_qubits) {
  if (sets.size() != dists.size()) throw std::invalid_argument("one distribution per measurement set is required");
  double e = op.coefficient(PauliString{}).real();
  for (std::size_t k = 0; k < sets.size(); ++k) {
    for (const auto& [bits, p] : dists[k]) {
      const int offset = static_cast<int>(bits.size()) - n_qubits;
      for (std::size_t j = 0; j < sets[k].terms.size(); ++j) {
        e += p * sets[k].terms[j].coefficient.real() * eigenvalue(bits, sets[k].term_images[j], offset);
      }
    }
  }
  return e;
}

std::map<std::string, double> normalized(const ShotTable& t) {
  std::map<std::string, double> out;
  if (t.shots == 0) return out;
  for (const auto& [b, n] : t.counts) out[b] = static_cast<double>(n) / static_cast<double>(t.shots);
  return out;
}

double jsd(const std::map<std::string, double>& p, const std::map<std::string, double>& q) {
  double sp = 0.0, sq = 0.0;
  for (const auto& [b, v] : p) sp += v;
  for (const auto& [b, v] : q) sq += v;
  if (sp <= 0.0 && sq <= 0.0) throw std::invalid_argument("JSD of two empty distributions");
  if (sp <= 0.0 || sq <= 0.0) return 1.0;
  std::map<std::string, std::pair<double, double>> joint;
  for (const auto& [b, v] : p) joint[b].first = v / sp;
  for (const auto& [b, v] : q) joint[b].second = v / sq;
  double d = 0.0;
  for (const auto& [b, pq] : joint) {
    const double m = 0.5 * (pq.first + pq.second);
    if (pq.first > 0) d += 0.5 * pq.first * std::log2(pq.first / m);
    if (pq.second > 0) d += 0.5 * pq.second * std::log2(pq.second / m);
  }
  return std::clamp(d, 0.0, 1.0);
}

double jsd(const ShotTable& p, const ShotTable& q) { return jsd(normalized(p), normalized(q)); }

std::string_view to_string(Mitigation m) {
  switch (m) {
    case Mitigation::None: return "none";
    case Mitigation::Pmsv1: return "pmsv1";
    case Mitigation::Pmsv2: return "pmsv2";
    case Mitigation::Mmsv: return "mmsv";
  }
  return "?";
}

Mitigation parse_mitigation(std::string_view s) {
  if (s == "none" || s == "raw") return Mitigation::None;
  if (s == "pmsv1") return Mitigation::Pmsv1;
  if (s == "pmsv2") return Mitigation::Pmsv2;
  if (s == "mmsv") return Mitigation::Mmsv;
  throw std::invalid_argument("unknown mitigation '" + std::string(s) + "'");
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

EstimationReport run_estimation(const Circuit& prep, const QubitOperator& op,
                                const std::vector<SymmetryOperator>& pmsv1,
                                const std::vector<SymmetryOperator>& pmsv2,
                                const EstimationOptions& options) {
  const int n = prep.n_qubits();
  std::vector<MeasurementSet> sets = partition_terms(op, static_cast<unsigned>(n));
  if (options.mitigation == Mitigation::Pmsv1) sets = attach_verifiers(std::move(sets), pmsv1);
  if (options.mitigation == Mitigation::Pmsv2) sets = attach_verifiers(std::move(sets), pmsv2);

  Circuit base = prep;
  int mmsv_bit = -1;
  int mmsv_sector = 1;
  if (options.mitigation == Mitigation::Mmsv) {
    if (pmsv1.empty()) throw std::invalid_argument("MMSV needs a parity symmetry");
    mmsv_bit = base.n_bits();
    mmsv_sector = pmsv1.front().sector;
    base = mmsv_instrument(base, pmsv1.front());
  }

  EstimationReport report;
  std::vector<ShotTable> kept;
  std::vector<std::map<std::string, double>> exact;
  for (std::size_t k = 0; k < sets.size(); ++k) {
    const Circuit mc = measurement_circuit(base, sets[k]);
    NoiseSpec noise = options.noise;
    noise.seed = derive_seed(options.noise.seed, k);
    ShotTable raw = sample(mc, options.shots, noise);
    ShotTable sel = raw;
    if (mmsv_bit >= 0) sel = mmsv_postselect(sel, mmsv_bit, mmsv_sector);
    sel = pmsv_postselect(sel, sets[k], n);

    SetReport sr;
    sr.n_terms = sets[k].terms.size();
    sr.n_verifiers = sets[k].verifiers.size();
    sr.two_qubit_gates = two_qubit_gate_count(mc);
    sr.shots = raw.shots;
    sr.kept = sel.shots;
    const Circuit ideal = measurement_circuit(prep, sets[k]);
    exact.push_back(exact_distribution(ideal));
    auto observed = normalized(sel);
    if (mmsv_bit >= 0) {
      std::map<std::string, double> stripped;
      for (const auto& [b, p] : observed) stripped[b.substr(0, b.size() - 1 - static_cast<std::size_t>(mmsv_bit)) + b.substr(b.size() - static_cast<std::size_t>(mmsv_bit))] += p;
      observed = std::move(stripped);
    }
    sr.jsd_to_exact = sel.shots ? jsd(observed, exact.back()) : 1.0;
    report.sets.push_back(sr);
    report.shots_total += raw.shots;
    report.shots_kept += sel.shots;
    kept.push_back(std::move(sel));
  }
  report.estimate = estimate_energy(sets, kept, op, n);
  report.exact_energy = estimate_energy_exact(sets, exact, op, n);
  return report;
}

}  // namespace uccc
