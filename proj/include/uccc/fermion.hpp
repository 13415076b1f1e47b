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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uccc/pauli.hpp"

namespace uccc {

struct MolecularModel;

/// One creation (dagger) or annihilation operator on a spin orbital.
struct Ladder {
  int index = 0;
  bool dagger = false;
  friend bool operator==(const Ladder&, const Ladder&) = default;
};

inline Ladder cre(int p) { return {p, true}; }
inline Ladder ann(int p) { return {p, false}; }

/// Sum of products of ladder operators. Products are kept as written; no
/// normal ordering is applied.
class FermionOperator {
 public:
  struct Term {
    std::vector<Ladder> ops;
    cplx coefficient{1.0, 0.0};
  };

  FermionOperator() = default;
  FermionOperator(std::vector<Ladder> ops, cplx c = 1.0);
  static FermionOperator identity(cplx c = 1.0) { return FermionOperator({}, c); }

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  /// Largest spin-orbital index plus one.
  int span() const;

  FermionOperator& operator+=(const FermionOperator& o);
  FermionOperator& operator-=(const FermionOperator& o);
  FermionOperator& operator*=(cplx c);
  friend FermionOperator operator+(FermionOperator a, const FermionOperator& b) { return a += b; }
  friend FermionOperator operator-(FermionOperator a, const FermionOperator& b) { return a -= b; }
  friend FermionOperator operator*(FermionOperator a, cplx c) { return a *= c; }
  friend FermionOperator operator*(cplx c, FermionOperator a) { return a *= c; }
  friend FermionOperator operator*(const FermionOperator& a, const FermionOperator& b);

  FermionOperator adjoint() const;

 private:
  std::vector<Term> terms_;
};

std::string to_string(const FermionOperator& op);

/// JW image of a single ladder operator: Z-string on lower qubits times
/// (X ∓ iY)/2 on `index`.
QubitOperator jordan_wigner(const Ladder& l);
QubitOperator jordan_wigner(const FermionOperator& op);

enum class ExcitationKind { Single, GenericDouble, PairedDouble };

std::string to_string(ExcitationKind k);

/**
 * @brief A UCC excitation T - T†.
 *
 * `indices` lists the spin orbitals in operator order: a single is
 * (a, i) meaning a†_a a_i; a double is (a, i, b, j) meaning
 * a†_a a_i a†_b a_j. A paired double has the pattern (2p, 2q, 2p+1, 2q+1)
 * and carries its spatial pair (q, p).
 */
struct Excitation {
  ExcitationKind kind = ExcitationKind::Single;
  std::vector<int> indices;
  std::string parameter;
  std::optional<std::pair<int, int>> spatial_pair;

  /// Creation operator indices.
  std::vector<int> created() const;
  /// Annihilation operator indices.
  std::vector<int> annihilated() const;
  /// T without the Hermitian-conjugate subtraction.
  FermionOperator excitation_operator() const;
  /// Anti-Hermitian generator G = T - T†.
  FermionOperator generator() const;
  std::string label() const;

  friend bool operator==(const Excitation& a, const Excitation& b) {
    return a.kind == b.kind && a.indices == b.indices && a.parameter == b.parameter &&
           a.spatial_pair == b.spatial_pair;
  }
};

Excitation make_single(int a, int i, std::string parameter = {});
/// Double a†_a a_i a†_b a_j; classified as paired when the pattern matches.
Excitation make_double(int a, int i, int b, int j, std::string parameter = {});
/// Paired double moving an electron pair from spatial orbital q to p.
Excitation make_paired_double(int q, int p, std::string parameter = {});

/**
 * Spin-conserving occupied→virtual singles and doubles of the reference.
 * Singles come first, then doubles, each in ascending index order. Parameter
 * names are t0, t1, ... in pool order.
 */
std::vector<Excitation> generate_uccsd_pool(const MolecularModel& model);

/// (i/2)(Y_2q X_2p - X_2q Y_2p): the pair hop on the alpha qubits only.
QubitOperator hardcore_boson_image(const Excitation& exc);

}  // namespace uccc
