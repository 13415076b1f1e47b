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

#include "uccc/pauli.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace uccc {

namespace {

constexpr std::uint64_t bit(unsigned q) { return std::uint64_t{1} << q; }

const cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_real(std::string_view s) {
  std::string tmp(trim(s));
  if (tmp.empty()) throw std::invalid_argument("empty number");
  char* end = nullptr;
  double v = std::strtod(tmp.c_str(), &end);
  if (end != tmp.c_str() + tmp.size()) {
    throw std::invalid_argument("malformed number '" + tmp + "'");
  }
  return v;
}

}  // namespace

char letter_char(Letter l) {
  switch (l) {
    case Letter::I: return 'I';
    case Letter::X: return 'X';
    case Letter::Y: return 'Y';
    case Letter::Z: return 'Z';
  }
  return '?';
}

PauliString PauliString::single(unsigned qubit, Letter l) {
  PauliString p;
  p.set(qubit, l);
  return p;
}

Letter PauliString::at(unsigned qubit) const {
  const bool xb = (x >> qubit) & 1U;
  const bool zb = (z >> qubit) & 1U;
  if (xb && zb) return Letter::Y;
  if (xb) return Letter::X;
  if (zb) return Letter::Z;
  return Letter::I;
}

void PauliString::set(unsigned qubit, Letter l) {
  if (qubit >= 64) throw std::out_of_range("qubit index exceeds 63");
  x &= ~bit(qubit);
  z &= ~bit(qubit);
  if (l == Letter::X || l == Letter::Y) x |= bit(qubit);
  if (l == Letter::Z || l == Letter::Y) z |= bit(qubit);
}

unsigned PauliString::weight() const { return std::popcount(x | z); }

unsigned PauliString::span() const {
  const std::uint64_t s = support();
  return s == 0 ? 0U : 64U - std::countl_zero(s);
}

bool canonical_less(const PauliString& a, const PauliString& b) {
  const std::uint64_t diff = (a.x ^ b.x) | (a.z ^ b.z);
  if (diff == 0) return false;
  const unsigned q = std::countr_zero(diff);
  const Letter la = a.at(q);
  const Letter lb = b.at(q);
  if (la != Letter::I && lb != Letter::I) return la < lb;
  // One sequence has no element at q; it is smaller only if it has ended.
  const std::uint64_t above = ~((bit(q) << 1) - 1);
  if (la == Letter::I) return (a.support() & above) == 0;
  return (b.support() & above) != 0;
}

int product_phase(const PauliString& a, const PauliString& b) {
  // Sum of the per-qubit exponents of i for P_a · P_b (Aaronson-Gottesman g).
  int e = 0;
  std::uint64_t both = a.support() & b.support();
  while (both) {
    const unsigned q = std::countr_zero(both);
    both &= both - 1;
    const int x1 = (a.x >> q) & 1, z1 = (a.z >> q) & 1;
    const int x2 = (b.x >> q) & 1, z2 = (b.z >> q) & 1;
    if (x1 && z1) {
      e += z2 - x2;
    } else if (x1) {
      e += z2 * (2 * x2 - 1);
    } else {
      e += x2 * (1 - 2 * z2);
    }
  }
  return ((e % 4) + 4) % 4;
}

PauliTerm multiply(const PauliTerm& a, const PauliTerm& b) {
  PauliString s{a.string.x ^ b.string.x, a.string.z ^ b.string.z};
  const int phase = product_phase(a.string, b.string);
  return {s, a.coefficient * b.coefficient * kIPow[phase]};
}

bool commutes(const PauliString& a, const PauliString& b) {
  return std::popcount((a.x & b.z) ^ (a.z & b.x)) % 2 == 0;
}

PauliTerm PauliTerm::from_letters(std::string_view letters, cplx coefficient) {
  PauliString s;
  std::istringstream in{std::string(letters)};
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2) throw std::invalid_argument("bad Pauli token '" + tok + "'");
    Letter l;
    switch (tok[0]) {
      case 'X': l = Letter::X; break;
      case 'Y': l = Letter::Y; break;
      case 'Z': l = Letter::Z; break;
      default: throw std::invalid_argument("bad Pauli letter in '" + tok + "'");
    }
    const std::string idx = tok.substr(1);
    if (idx.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad qubit index in '" + tok + "'");
    }
    const unsigned long q = std::stoul(idx);
    if (q >= 64) throw std::out_of_range("qubit index exceeds 63");
    if (s.at(static_cast<unsigned>(q)) != Letter::I) {
      throw std::invalid_argument("qubit " + idx + " repeated");
    }
    s.set(static_cast<unsigned>(q), l);
  }
  return {s, coefficient};
}

std::string format_coefficient(cplx c) {
  const double re = c.real(), im = c.imag();
  if (im == 0.0 && !std::signbit(im)) return "(" + format_real(re) + ")";
  if (re == 0.0 && !std::signbit(re)) return "(" + format_real(im) + "j)";
  std::string ims = format_real(im);
  if (ims[0] != '-') ims = "+" + ims;
  return "(" + format_real(re) + ims + "j)";
}

cplx parse_coefficient(std::string_view text) {
  text = trim(text);
  if (text.size() < 3 || text.front() != '(' || text.back() != ')') {
    throw std::invalid_argument("coefficient must be parenthesised: '" + std::string(text) + "'");
  }
  std::string_view body = text.substr(1, text.size() - 2);
  if (body.empty()) throw std::invalid_argument("empty coefficient");
  if (body.back() != 'j') return {parse_real(body), 0.0};
  body.remove_suffix(1);
  // Split at the sign that starts the imaginary part (not an exponent sign).
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, parse_real(body)};
  return {parse_real(body.substr(0, split)), parse_real(body.substr(split))};
}

std::string to_string(const PauliTerm& t) {
  std::string out = format_coefficient(t.coefficient) + " [";
  bool first = true;
  std::uint64_t s = t.string.support();
  while (s) {
    const unsigned q = std::countr_zero(s);
    s &= s - 1;
    if (!first) out += ' ';
    out += letter_char(t.string.at(q));
    out += std::to_string(q);
    first = false;
  }
  return out + "]";
}

PauliTerm parse_pauli_term(std::string_view text) {
  text = trim(text);
  const auto open = text.find('[');
  const auto close = text.rfind(']');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
    throw std::invalid_argument("Pauli term needs '[letters]': '" + std::string(text) + "'");
  }
  const cplx c = parse_coefficient(text.substr(0, open));
  return PauliTerm::from_letters(text.substr(open + 1, close - open - 1), c);
}

QubitOperator::QubitOperator(const PauliTerm& t) { add_term(t.string, t.coefficient); }

QubitOperator QubitOperator::identity(cplx c) { return QubitOperator(PauliTerm({}, c)); }

std::vector<PauliTerm> QubitOperator::term_list() const {
  std::vector<PauliTerm> out;
  out.reserve(terms_.size());
  for (const auto& [s, c] : terms_) out.emplace_back(s, c);
  return out;
}

cplx QubitOperator::coefficient(const PauliString& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? cplx{} : it->second;
}

unsigned QubitOperator::span() const {
  unsigned n = 0;
  for (const auto& [s, c] : terms_) n = std::max(n, s.span());
  return n;
}

void QubitOperator::add_term(const PauliString& s, cplx c) {
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < kPruneThreshold) terms_.erase(it);
}

QubitOperator& QubitOperator::operator+=(const QubitOperator& o) {
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

QubitOperator& QubitOperator::operator-=(const QubitOperator& o) {
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

QubitOperator& QubitOperator::operator*=(cplx c) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    if (std::abs(it->second) < kPruneThreshold) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

QubitOperator operator*(const QubitOperator& a, const QubitOperator& b) {
  QubitOperator out;
  for (const auto& [sa, ca] : a.terms_) {
    for (const auto& [sb, cb] : b.terms_) {
      const PauliTerm p = multiply(PauliTerm(sa, ca), PauliTerm(sb, cb));
      auto [it, inserted] = out.terms_.try_emplace(p.string, p.coefficient);
      if (!inserted) it->second += p.coefficient;
    }
  }
  for (auto it = out.terms_.begin(); it != out.terms_.end();) {
    if (std::abs(it->second) < QubitOperator::kPruneThreshold) {
      it = out.terms_.erase(it);
    } else {
      ++it;
    }
  }
  return out;
}

QubitOperator QubitOperator::adjoint() const {
  QubitOperator out;
  for (const auto& [s, c] : terms_) out.terms_.emplace(s, std::conj(c));
  return out;
}

double QubitOperator::distance(const QubitOperator& a, const QubitOperator& b) {
  double d = 0.0;
  for (const auto& [s, c] : a.terms_) d = std::max(d, std::abs(c - b.coefficient(s)));
  for (const auto& [s, c] : b.terms_) d = std::max(d, std::abs(c - a.coefficient(s)));
  return d;
}

bool QubitOperator::is_hermitian(double tol) const {
  for (const auto& [s, c] : terms_) {
    if (std::abs(c.imag()) > tol) return false;
  }
  return true;
}

bool QubitOperator::is_anti_hermitian(double tol) const {
  for (const auto& [s, c] : terms_) {
    if (std::abs(c.real()) > tol) return false;
  }
  return true;
}

std::string to_string(const QubitOperator& op) {
  std::string out;
  for (const auto& [s, c] : op.terms()) {
    out += to_string(PauliTerm(s, c));
    out += '\n';
  }
  return out;
}

QubitOperator parse_qubit_operator(std::string_view text) {
  QubitOperator op;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const PauliTerm t = parse_pauli_term(line);
    op.add_term(t.string, t.coefficient);
  }
  return op;
}

Eigen::MatrixXcd to_dense(const PauliTerm& t, unsigned n_qubits) {
  if (n_qubits > kMaxDenseQubits) {
    throw std::invalid_argument("dense realization limited to " +
                                std::to_string(kMaxDenseQubits) + " qubits");
  }
  if (t.string.span() > n_qubits) {
    throw std::out_of_range("Pauli term acts on qubit " + std::to_string(t.string.span() - 1) +
                            " beyond n_qubits=" + std::to_string(n_qubits));
  }
  const cplx I{0, 1};
  Eigen::Matrix2cd pauli[4];
  pauli[0] << 1, 0, 0, 1;
  pauli[1] << 0, 1, 1, 0;
  pauli[2] << 0, -I, I, 0;
  pauli[3] << 1, 0, 0, -1;
  // Each new (higher) qubit becomes the outer Kronecker factor.
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (unsigned q = 0; q < n_qubits; ++q) {
    const Eigen::Matrix2cd& f = pauli[static_cast<int>(t.string.at(q))];
    Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        next.block(r * m.rows(), c * m.cols(), m.rows(), m.cols()) = m * f(r, c);
      }
    }
    m = std::move(next);
  }
  return m * t.coefficient;
}

Eigen::MatrixXcd to_dense(const QubitOperator& op, unsigned n_qubits) {
  if (n_qubits > kMaxDenseQubits) {
    throw std::invalid_argument("dense realization limited to " +
                                std::to_string(kMaxDenseQubits) + " qubits");
  }
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [s, c] : op.terms()) m += to_dense(PauliTerm(s, c), n_qubits);
  return m;
}

}  // namespace uccc
