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


#include "uccc/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "uccc/rng.hpp"

namespace uccc {

namespace {

using kernels::Mat2;

Mat2 gate_matrix(const Gate& g) {
  const double a = g.angle.offset;
  const double c = std::cos(a / 2), s = std::sin(a / 2);
  const cplx i(0.0, 1.0);
  switch (g.kind) {
    case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      return {r, r, r, -r};
    }
    case GateKind::Rx: return {c, -i * s, -i * s, c};
    case GateKind::Ry: return {c, -s, s, c};
    case GateKind::Rz: return {std::polar(1.0, -a / 2), 0.0, 0.0, std::polar(1.0, a / 2)};
    default: throw std::logic_error("no 2x2 matrix for " + std::string(gate_name(g.kind)));
  }
}

struct Terminal {
  std::vector<Gate> unitary;
  std::vector<std::pair<int, int>> measures;  // (qubit, bit)
};

std::optional<Terminal> split_terminal(const Circuit& c) {
  Terminal t;
  bool measuring = false;
  for (const Gate& g : c.gates()) {
    if (g.kind == GateKind::Measure) {
      measuring = true;
      t.measures.emplace_back(g.q0, g.bit);
    } else if (measuring || g.kind == GateKind::Reset || g.kind == GateKind::ConditionalX) {
      return std::nullopt;
    } else {
      t.unitary.push_back(g);
    }
  }
  return t;
}

void require_bound(const Circuit& c) {
  for (const Gate& g : c.gates()) {
    if (g.angle.is_symbolic()) throw std::invalid_argument("unbound symbol '" + g.angle.symbol + "'");
  }
  if (c.n_qubits() > static_cast<int>(kMaxSimulatorQubits)) {
    throw std::invalid_argument("circuit exceeds the " + std::to_string(kMaxSimulatorQubits) +
                                "-qubit simulator limit");
  }
}

PauliString two_qubit_pauli(int code, int q0, int q1) {
  PauliString p;
  p.set(static_cast<unsigned>(q0), static_cast<Letter>(code >> 2));
  p.set(static_cast<unsigned>(q1), static_cast<Letter>(code & 3));
  return p;
}

// Draws the CX fault that follows a gate; returns 0 for none.
int draw_fault(ShotRng& rng, double p) {
  if (p <= 0.0) return 0;
  if (rng.uniform() >= p) return 0;
  return 1 + static_cast<int>(rng.below(15));
}

}  // namespace

StateVector::StateVector(unsigned n_qubits, std::uint64_t basis_state)
    : n_(n_qubits), k_(&kernels::active_kernels()) {
  if (n_qubits > kMaxSimulatorQubits) {
    throw std::invalid_argument("statevector exceeds the " + std::to_string(kMaxSimulatorQubits) +
                                "-qubit limit");
  }
  amp_.assign(std::size_t{1} << n_qubits, 0.0);
  if (basis_state >= amp_.size()) throw std::out_of_range("basis state outside register");
  amp_[basis_state] = 1.0;
}

void StateVector::apply(const Gate& g) {
  if (g.angle.is_symbolic()) throw std::invalid_argument("unbound symbol '" + g.angle.symbol + "'");
  if (g.kind == GateKind::CX) {
    k_->apply_cx(amp_.data(), n_, static_cast<unsigned>(g.q0), static_cast<unsigned>(g.q1));
  } else if (g.kind == GateKind::X) {
    apply_x(static_cast<unsigned>(g.q0));
  } else {
    k_->apply_1q(amp_.data(), n_, static_cast<unsigned>(g.q0), gate_matrix(g));
  }
}

void StateVector::apply_x(unsigned q) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < amp_.size(); ++i) {
    if (!(i & bit)) std::swap(amp_[i], amp_[i | bit]);
  }
}

void StateVector::apply_pauli(const PauliString& p) {
  const unsigned n_y = static_cast<unsigned>(std::popcount(p.x & p.z));
  const cplx phase = std::pow(cplx(0.0, 1.0), static_cast<int>(n_y & 3u));
  std::vector<cplx> out(amp_.size());
  for (std::size_t i = 0; i < amp_.size(); ++i) {
    const double s = (std::popcount(i & p.z) & 1) ? -1.0 : 1.0;
    out[i ^ p.x] = phase * s * amp_[i];
  }
  amp_ = std::move(out);
}

double StateVector::norm() const {
  double s = 0.0;
  for (const cplx& a : amp_) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::normalize() {
  const double nrm = norm();
  if (nrm == 0.0) throw std::domain_error("cannot normalize a zero state");
  for (cplx& a : amp_) a /= nrm;
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(amp_.size());
  k_->probabilities(amp_.data(), n_, p.data());
  return p;
}

double StateVector::expectation(const PauliString& p) const {
  if (p.span() > n_) throw std::out_of_range("Pauli string acts outside the register");
  return k_->pauli_expectation(amp_.data(), n_, p.x, p.z,
                               static_cast<unsigned>(std::popcount(p.x & p.z)));
}

double StateVector::expectation(const QubitOperator& op) const {
  double e = 0.0;
  for (const auto& [s, c] : op.terms()) {
    e += s.is_identity() ? c.real() : c.real() * expectation(s);
  }
  return e;
}

double StateVector::probability_one(unsigned q) const {
  const std::size_t bit = std::size_t{1} << q;
  double p = 0.0;
  for (std::size_t i = 0; i < amp_.size(); ++i) {
    if (i & bit) p += std::norm(amp_[i]);
  }
  return p;
}

void StateVector::collapse(unsigned q, int outcome) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < amp_.size(); ++i) {
    if (((i & bit) != 0) != (outcome != 0)) amp_[i] = 0.0;
  }
  normalize();
}

cplx StateVector::inner(const StateVector& other) const {
  if (other.dim() != dim()) throw std::invalid_argument("inner product of mismatched registers");
  cplx s = 0.0;
  for (std::size_t i = 0; i < amp_.size(); ++i) s += std::conj(amp_[i]) * other.amp_[i];
  return s;
}

void apply_circuit(StateVector& psi, const Circuit& c) {
  require_bound(c);
  if (static_cast<unsigned>(c.n_qubits()) > psi.n_qubits()) {
    throw std::invalid_argument("circuit is wider than the state");
  }
  const auto t = split_terminal(c);
  if (!t) throw std::invalid_argument("circuit has mid-circuit operations; use run_with_midcircuit");
  for (const Gate& g : t->unitary) psi.apply(g);
}

StateVector run_statevector(const Circuit& c, std::uint64_t basis_state) {
  StateVector psi(static_cast<unsigned>(c.n_qubits()), basis_state);
  apply_circuit(psi, c);
  return psi;
}

Branch run_branch(const Circuit& c, const StateVector& initial, const std::vector<int>& outcomes) {
  require_bound(c);
  Branch b{initial, 1.0, std::vector<int>(static_cast<std::size_t>(c.n_bits()), -1)};
  std::size_t k = 0;
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::Measure: {
        if (k >= outcomes.size()) throw std::invalid_argument("fewer outcomes than measurements");
        const int o = outcomes[k++];
        const double p1 = b.state.probability_one(static_cast<unsigned>(g.q0));
        const double p = o ? p1 : 1.0 - p1;
        b.probability *= p;
        if (p <= 0.0) {
          b.probability = 0.0;
          return b;
        }
        b.state.collapse(static_cast<unsigned>(g.q0), o);
        b.bits[static_cast<std::size_t>(g.bit)] = o;
        break;
      }
      case GateKind::Reset: {
        const double p1 = b.state.probability_one(static_cast<unsigned>(g.q0));
        if (p1 > 1e-12 && p1 < 1.0 - 1e-12) {
          throw std::invalid_argument("reset of a superposed qubit has no single branch");
        }
        if (p1 > 0.5) b.state.apply_x(static_cast<unsigned>(g.q0));
        break;
      }
      case GateKind::ConditionalX: {
        const int v = b.bits[static_cast<std::size_t>(g.bit)];
        if (v < 0) throw std::invalid_argument("conditional X reads unwritten bit c" + std::to_string(g.bit));
        if (v) b.state.apply_x(static_cast<unsigned>(g.q0));
        break;
      }
      default:
        b.state.apply(g);
    }
  }
  return b;
}

void NoiseSpec::validate() const {
  auto ok = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!ok(two_qubit_depolarizing_p) || !ok(measurement_flip_p)) {
    throw std::invalid_argument("noise probabilities must lie in [0, 1]");
  }
}

std::string bits_to_string(std::uint64_t bits, int n_bits) {
  std::string s(static_cast<std::size_t>(n_bits), '0');
  for (int b = 0; b < n_bits; ++b) {
    if ((bits >> b) & 1u) s[static_cast<std::size_t>(n_bits - 1 - b)] = '1';
  }
  return s;
}

std::uint64_t string_to_bits(std::string_view s) {
  std::uint64_t v = 0;
  for (char c : s) {
    if (c != '0' && c != '1') throw std::invalid_argument("bitstring contains '" + std::string(1, c) + "'");
    v = (v << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return v;
}

void ShotTable::add(const std::string& bits, std::uint64_t n) {
  if (static_cast<int>(bits.size()) != n_bits) {
    throw std::invalid_argument("bitstring '" + bits + "' does not have " + std::to_string(n_bits) + " bits");
  }
  counts[bits] += n;
  shots += n;
}

std::string ShotTable::to_csv() const {
  std::string out = "# bit order: little-endian (bit 0 is the rightmost character)\nbitstring,count\n";
  for (const auto& [b, n] : counts) out += b + "," + std::to_string(n) + "\n";
  return out;
}

std::string ShotTable::to_json_text() const {
  nlohmann::ordered_json j;
  j["bit_order"] = "little-endian";
  j["n_bits"] = n_bits;
  j["shots"] = shots;
  nlohmann::ordered_json counts_json = nlohmann::ordered_json::object();
  for (const auto& [b, n] : counts) counts_json[b] = n;
  j["counts"] = std::move(counts_json);
  return j.dump(2) + "\n";
}

ShotTable ShotTable::from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  ShotTable t;
  bool header = false, sized = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      if (line != "bitstring,count") throw std::invalid_argument("shot CSV lacks the 'bitstring,count' header");
      header = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("shot CSV line " + std::to_string(line_no) + " lacks a comma");
    }
    const std::string bits = line.substr(0, comma);
    string_to_bits(bits);
    if (!sized) {
      t.n_bits = static_cast<int>(bits.size());
      sized = true;
    }
    std::size_t used = 0;
    const unsigned long long n = std::stoull(line.substr(comma + 1), &used);
    if (used != line.size() - comma - 1) {
      throw std::invalid_argument("shot CSV line " + std::to_string(line_no) + " has a malformed count");
    }
    t.add(bits, n);
  }
  if (!header) throw std::invalid_argument("shot CSV lacks the 'bitstring,count' header");
  return t;
}

ShotTable ShotTable::from_json_text(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  ShotTable t;
  t.n_bits = j.at("n_bits").get<int>();
  for (const auto& [b, n] : j.at("counts").items()) {
    string_to_bits(b);
    t.add(b, n.get<std::uint64_t>());
  }
  if (j.contains("shots") && j.at("shots").get<std::uint64_t>() != t.shots) {
    throw std::invalid_argument("shot table total does not match its counts");
  }
  return t;
}

ShotTable sample(const Circuit& c, std::uint64_t shots, const NoiseSpec& noise) {
  if (shots == 0) throw std::invalid_argument("shots must be positive");
  noise.validate();
  require_bound(c);
  const auto t = split_terminal(c);
  if (!t) return run_with_midcircuit(c, shots, noise);
  if (t->measures.empty()) throw std::invalid_argument("circuit has no Measure gates to sample");

  std::vector<std::size_t> cx_positions;
  for (std::size_t i = 0; i < t->unitary.size(); ++i) {
    if (t->unitary[i].kind == GateKind::CX) cx_positions.push_back(i);
  }
  // Cumulative distributions keyed by the fault pattern of the trajectory.
  std::map<std::vector<std::pair<std::size_t, int>>, std::vector<double>> cache;
  auto cumulative_for = [&](const std::vector<std::pair<std::size_t, int>>& faults)
      -> const std::vector<double>& {
    auto it = cache.find(faults);
    if (it != cache.end()) return it->second;
    StateVector psi(static_cast<unsigned>(c.n_qubits()));
    std::size_t f = 0;
    for (std::size_t i = 0; i < t->unitary.size(); ++i) {
      const Gate& g = t->unitary[i];
      psi.apply(g);
      while (f < faults.size() && faults[f].first == i) {
        psi.apply_pauli(two_qubit_pauli(faults[f].second, g.q0, g.q1));
        ++f;
      }
    }
    std::vector<double> p = psi.probabilities();
    std::partial_sum(p.begin(), p.end(), p.begin());
    return cache.emplace(faults, std::move(p)).first->second;
  };

  ShotTable table;
  table.n_bits = c.n_bits();
  std::map<std::uint64_t, std::uint64_t> raw;
  const double p2 = noise.two_qubit_depolarizing_p, pm = noise.measurement_flip_p;
  std::vector<std::pair<std::size_t, int>> faults;
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    ShotRng rng(noise.seed, shot);
    faults.clear();
    if (p2 > 0.0) {
      for (std::size_t pos : cx_positions) {
        if (const int code = draw_fault(rng, p2)) faults.emplace_back(pos, code);
      }
    }
    const std::vector<double>& cum = cumulative_for(faults);
    const double u = rng.uniform() * cum.back();
    const std::size_t index = static_cast<std::size_t>(
        std::min<std::ptrdiff_t>(std::upper_bound(cum.begin(), cum.end(), u) - cum.begin(),
                                 static_cast<std::ptrdiff_t>(cum.size()) - 1));
    std::uint64_t bits = 0;
    for (const auto& [q, b] : t->measures) {
      std::uint64_t v = (index >> q) & 1u;
      if (pm > 0.0 && rng.uniform() < pm) v ^= 1u;
      bits = (bits & ~(std::uint64_t{1} << b)) | (v << b);
    }
    ++raw[bits];
  }
  for (const auto& [bits, n] : raw) table.add(bits_to_string(bits, c.n_bits()), n);
  return table;
}

ShotTable run_with_midcircuit(const Circuit& c, std::uint64_t shots, const NoiseSpec& noise) {
  if (shots == 0) throw std::invalid_argument("shots must be positive");
  noise.validate();
  require_bound(c);
  const double p2 = noise.two_qubit_depolarizing_p, pm = noise.measurement_flip_p;
  std::map<std::uint64_t, std::uint64_t> raw;
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    ShotRng rng(noise.seed, shot);
    StateVector psi(static_cast<unsigned>(c.n_qubits()));
    std::uint64_t bits = 0, written = 0;
    for (const Gate& g : c.gates()) {
      switch (g.kind) {
        case GateKind::Measure: {
          const unsigned q = static_cast<unsigned>(g.q0);
          const int o = rng.uniform() < psi.probability_one(q) ? 1 : 0;
          psi.collapse(q, o);
          std::uint64_t v = static_cast<std::uint64_t>(o);
          if (pm > 0.0 && rng.uniform() < pm) v ^= 1u;
          const std::uint64_t mask = std::uint64_t{1} << g.bit;
          bits = (bits & ~mask) | (v << g.bit);
          written |= mask;
          break;
        }
        case GateKind::Reset: {
          const unsigned q = static_cast<unsigned>(g.q0);
          const int o = rng.uniform() < psi.probability_one(q) ? 1 : 0;
          psi.collapse(q, o);
          if (o) psi.apply_x(q);
          break;
        }
        case GateKind::ConditionalX: {
          const std::uint64_t mask = std::uint64_t{1} << g.bit;
          if (!(written & mask)) {
            throw std::invalid_argument("conditional X reads unwritten bit c" + std::to_string(g.bit));
          }
          if (bits & mask) psi.apply_x(static_cast<unsigned>(g.q0));
          break;
        }
        default:
          psi.apply(g);
          if (g.kind == GateKind::CX) {
            if (const int code = draw_fault(rng, p2)) psi.apply_pauli(two_qubit_pauli(code, g.q0, g.q1));
          }
      }
    }
    ++raw[bits];
  }
  ShotTable table;
  table.n_bits = c.n_bits();
  for (const auto& [b, n] : raw) table.add(bits_to_string(b, c.n_bits()), n);
  return table;
}

std::map<std::string, double> exact_distribution(const Circuit& c) {
  require_bound(c);
  const auto t = split_terminal(c);
  if (!t) throw std::invalid_argument("exact distribution needs terminal measurements only");
  StateVector psi(static_cast<unsigned>(c.n_qubits()));
  for (const Gate& g : t->unitary) psi.apply(g);
  const std::vector<double> p = psi.probabilities();
  std::map<std::string, double> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    std::uint64_t bits = 0;
    for (const auto& [q, b] : t->measures) {
      const std::uint64_t v = (i >> q) & 1u;
      bits = (bits & ~(std::uint64_t{1} << b)) | (v << b);
    }
    out[bits_to_string(bits, c.n_bits())] += p[i];
  }
  return out;
}

}  // namespace uccc
