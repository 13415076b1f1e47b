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

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace uccc {

using cplx = std::complex<double>;

enum class Letter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char letter_char(Letter l);

/**
 * @brief Tensor product of single-qubit Pauli letters, without coefficient.
 *
 * Stored in symplectic form: bit q of `x` / `z` is set when the letter on
 * qubit q has an X / Z component (Y has both). At most 64 qubits.
 */
struct PauliString {
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  static PauliString single(unsigned qubit, Letter l);

  Letter at(unsigned qubit) const;
  void set(unsigned qubit, Letter l);
  std::uint64_t support() const { return x | z; }
  unsigned weight() const;
  bool is_identity() const { return (x | z) == 0; }
  /// Highest qubit index acted on plus one; 0 for the identity.
  unsigned span() const;
  /// True when every letter is I or Z.
  bool is_diagonal() const { return x == 0; }

  friend bool operator==(const PauliString&, const PauliString&) = default;
};

/// Canonical order: lexicographic over the (qubit, letter) sequence.
bool canonical_less(const PauliString& a, const PauliString& b);

struct CanonicalLess {
  bool operator()(const PauliString& a, const PauliString& b) const {
    return canonical_less(a, b);
  }
};

struct PauliTerm {
  PauliString string;
  cplx coefficient{1.0, 0.0};

  PauliTerm() = default;
  PauliTerm(PauliString s, cplx c) : string(s), coefficient(c) {}

  /// Parses letters such as "X0 Y3 Z5" (the bracket contents of the text form).
  static PauliTerm from_letters(std::string_view letters, cplx coefficient = 1.0);
};

/// Group product; the ±1, ±i phase is folded into the coefficient.
PauliTerm multiply(const PauliTerm& a, const PauliTerm& b);

/// Power of i picked up when multiplying the bare strings a·b (result mod 4).
int product_phase(const PauliString& a, const PauliString& b);

bool commutes(const PauliString& a, const PauliString& b);
inline bool commutes(const PauliTerm& a, const PauliTerm& b) {
  return commutes(a.string, b.string);
}

std::string to_string(const PauliTerm& t);
PauliTerm parse_pauli_term(std::string_view text);

/// Formats a complex number the way the text forms expect, e.g. `(-0.5j)`.
std::string format_coefficient(cplx c);
cplx parse_coefficient(std::string_view text);

/**
 * @brief Weighted sum of Pauli strings with canonically merged terms.
 *
 * Terms whose coefficient magnitude drops below `kPruneThreshold` are removed
 * on every mutation, so two operators that differ only by numerical noise
 * compare equal term-by-term.
 */
class QubitOperator {
 public:
  static constexpr double kPruneThreshold = 1e-14;
  using TermMap = std::map<PauliString, cplx, CanonicalLess>;

  QubitOperator() = default;
  explicit QubitOperator(const PauliTerm& t);
  static QubitOperator identity(cplx c = 1.0);

  const TermMap& terms() const& { return terms_; }
  TermMap terms() && { return std::move(terms_); }
  std::vector<PauliTerm> term_list() const;
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Coefficient of the given string; zero when absent.
  cplx coefficient(const PauliString& s) const;
  /// Highest acted-on qubit plus one.
  unsigned span() const;

  void add_term(const PauliString& s, cplx c);
  QubitOperator& operator+=(const QubitOperator& o);
  QubitOperator& operator-=(const QubitOperator& o);
  QubitOperator& operator*=(cplx c);

  friend QubitOperator operator+(QubitOperator a, const QubitOperator& b) { return a += b; }
  friend QubitOperator operator-(QubitOperator a, const QubitOperator& b) { return a -= b; }
  friend QubitOperator operator*(QubitOperator a, cplx c) { return a *= c; }
  friend QubitOperator operator*(cplx c, QubitOperator a) { return a *= c; }
  friend QubitOperator operator*(const QubitOperator& a, const QubitOperator& b);

  QubitOperator adjoint() const;
  bool is_hermitian(double tol = 1e-12) const;
  bool is_anti_hermitian(double tol = 1e-12) const;
  /// Largest |a_k - b_k| over the union of terms.
  static double distance(const QubitOperator& a, const QubitOperator& b);

  friend bool operator==(const QubitOperator& a, const QubitOperator& b) {
    return a.terms_ == b.terms_;
  }

 private:
  TermMap terms_;
};

/// Newline-separated canonical text form.
std::string to_string(const QubitOperator& op);
QubitOperator parse_qubit_operator(std::string_view text);

/// Largest dense realization allowed; oracle use only.
inline constexpr unsigned kMaxDenseQubits = 14;

/// Dense 2^n x 2^n matrix built from explicit Kronecker products
/// (qubit 0 is the least significant index bit).
Eigen::MatrixXcd to_dense(const QubitOperator& op, unsigned n_qubits);
Eigen::MatrixXcd to_dense(const PauliTerm& t, unsigned n_qubits);

}  // namespace uccc
