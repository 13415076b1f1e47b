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

#include "uccc/fermion.hpp"

#include <algorithm>
#include <stdexcept>

#include "uccc/model.hpp"

namespace uccc {

FermionOperator::FermionOperator(std::vector<Ladder> ops, cplx c) {
  for (const Ladder& l : ops) {
    if (l.index < 0) throw std::invalid_argument("negative spin-orbital index");
  }
  terms_.push_back({std::move(ops), c});
}

int FermionOperator::span() const {
  int n = 0;
  for (const Term& t : terms_) {
    for (const Ladder& l : t.ops) n = std::max(n, l.index + 1);
  }
  return n;
}

FermionOperator& FermionOperator::operator+=(const FermionOperator& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

FermionOperator& FermionOperator::operator-=(const FermionOperator& o) {
  for (Term t : o.terms_) {
    t.coefficient = -t.coefficient;
    terms_.push_back(std::move(t));
  }
  return *this;
}

FermionOperator& FermionOperator::operator*=(cplx c) {
  for (Term& t : terms_) t.coefficient *= c;
  return *this;
}

FermionOperator operator*(const FermionOperator& a, const FermionOperator& b) {
  FermionOperator out;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      FermionOperator::Term t{ta.ops, ta.coefficient * tb.coefficient};
      t.ops.insert(t.ops.end(), tb.ops.begin(), tb.ops.end());
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

FermionOperator FermionOperator::adjoint() const {
  FermionOperator out;
  for (const Term& t : terms_) {
    Term r{{t.ops.rbegin(), t.ops.rend()}, std::conj(t.coefficient)};
    for (Ladder& l : r.ops) l.dagger = !l.dagger;
    out.terms_.push_back(std::move(r));
  }
  return out;
}

std::string to_string(const FermionOperator& op) {
  std::string out;
  for (const auto& t : op.terms()) {
    out += format_coefficient(t.coefficient) + " [";
    for (std::size_t k = 0; k < t.ops.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(t.ops[k].index);
      if (t.ops[k].dagger) out += '^';
    }
    out += "]\n";
  }
  return out;
}

QubitOperator jordan_wigner(const Ladder& l) {
  PauliString zs;
  for (int q = 0; q < l.index; ++q) zs.set(static_cast<unsigned>(q), Letter::Z);
  PauliString xs = zs, ys = zs;
  xs.set(static_cast<unsigned>(l.index), Letter::X);
  ys.set(static_cast<unsigned>(l.index), Letter::Y);
  // a = (X + iY)/2 maps |1> to |0>; a† = (X - iY)/2.
  const cplx yc = l.dagger ? cplx{0, -0.5} : cplx{0, 0.5};
  QubitOperator op;
  op.add_term(xs, 0.5);
  op.add_term(ys, yc);
  return op;
}

QubitOperator jordan_wigner(const FermionOperator& op) {
  QubitOperator out;
  for (const auto& t : op.terms()) {
    QubitOperator prod = QubitOperator::identity(t.coefficient);
    for (const Ladder& l : t.ops) prod = prod * jordan_wigner(l);
    out += prod;
  }
  return out;
}

std::string to_string(ExcitationKind k) {
  switch (k) {
    case ExcitationKind::Single: return "single";
    case ExcitationKind::GenericDouble: return "generic-double";
    case ExcitationKind::PairedDouble: return "paired-double";
  }
  return "?";
}

std::vector<int> Excitation::created() const {
  std::vector<int> out;
  for (std::size_t k = 0; k < indices.size(); k += 2) out.push_back(indices[k]);
  return out;
}

std::vector<int> Excitation::annihilated() const {
  std::vector<int> out;
  for (std::size_t k = 1; k < indices.size(); k += 2) out.push_back(indices[k]);
  return out;
}

FermionOperator Excitation::excitation_operator() const {
  std::vector<Ladder> ops;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    ops.push_back({indices[k], k % 2 == 0});
  }
  return FermionOperator(std::move(ops));
}

FermionOperator Excitation::generator() const {
  const FermionOperator t = excitation_operator();
  return t - t.adjoint();
}

std::string Excitation::label() const {
  std::string out;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (k) out += ' ';
    out += (k % 2 == 0) ? "a+" : "a";
    out += std::to_string(indices[k]);
  }
  return out + " - h.c.";
}

Excitation make_single(int a, int i, std::string parameter) {
  if (a == i || a < 0 || i < 0) throw std::invalid_argument("invalid single excitation");
  return {ExcitationKind::Single, {a, i}, std::move(parameter), std::nullopt};
}

Excitation make_double(int a, int i, int b, int j, std::string parameter) {
  const std::vector<int> idx{a, i, b, j};
  for (std::size_t u = 0; u < 4; ++u) {
    if (idx[u] < 0) throw std::invalid_argument("negative index in double excitation");
  }
  if (a == b || i == j || a == i || a == j || b == i || b == j) {
    throw std::invalid_argument("double excitation indices must be distinct");
  }
  Excitation e{ExcitationKind::GenericDouble, idx, std::move(parameter), std::nullopt};
  if (a % 2 == 0 && i % 2 == 0 && b == a + 1 && j == i + 1 && i < a) {
    e.kind = ExcitationKind::PairedDouble;
    e.spatial_pair = std::make_pair(i / 2, a / 2);
  }
  return e;
}

Excitation make_paired_double(int q, int p, std::string parameter) {
  if (!(q < p) || q < 0) throw std::invalid_argument("paired double needs q < p");
  return make_double(2 * p, 2 * q, 2 * p + 1, 2 * q + 1, std::move(parameter));
}

std::vector<Excitation> generate_uccsd_pool(const MolecularModel& model) {
  const int n = model.n_spin_orbitals;
  std::vector<int> occ[2], vir[2];
  for (int p = 0; p < n; ++p) {
    (model.hf_occupation[static_cast<std::size_t>(p)] ? occ : vir)[p % 2].push_back(p);
  }
  std::vector<Excitation> singles, doubles;
  for (int s = 0; s < 2; ++s) {
    for (int i : occ[s]) {
      for (int a : vir[s]) singles.push_back(make_single(a, i));
    }
  }
  std::sort(singles.begin(), singles.end(), [](const Excitation& x, const Excitation& y) {
    return std::make_pair(x.indices[1], x.indices[0]) < std::make_pair(y.indices[1], y.indices[0]);
  });
  // Same-spin pairs: a†_a a_i a†_b a_j with i<j, a<b.
  for (int s = 0; s < 2; ++s) {
    for (std::size_t u = 0; u < occ[s].size(); ++u) {
      for (std::size_t v = u + 1; v < occ[s].size(); ++v) {
        for (std::size_t c = 0; c < vir[s].size(); ++c) {
          for (std::size_t d = c + 1; d < vir[s].size(); ++d) {
            doubles.push_back(make_double(vir[s][c], occ[s][u], vir[s][d], occ[s][v]));
          }
        }
      }
    }
  }
  // Mixed-spin: alpha pair first, then beta pair.
  for (int i : occ[0]) {
    for (int j : occ[1]) {
      for (int a : vir[0]) {
        for (int b : vir[1]) doubles.push_back(make_double(a, i, b, j));
      }
    }
  }
  auto key = [](const Excitation& e) {
    std::vector<int> ann = e.annihilated(), cr = e.created();
    std::sort(ann.begin(), ann.end());
    std::sort(cr.begin(), cr.end());
    ann.insert(ann.end(), cr.begin(), cr.end());
    return ann;
  };
  std::sort(doubles.begin(), doubles.end(),
            [&](const Excitation& x, const Excitation& y) { return key(x) < key(y); });

  std::vector<Excitation> pool = std::move(singles);
  pool.insert(pool.end(), doubles.begin(), doubles.end());
  for (std::size_t k = 0; k < pool.size(); ++k) pool[k].parameter = "t" + std::to_string(k);
  return pool;
}

QubitOperator hardcore_boson_image(const Excitation& exc) {
  if (exc.kind != ExcitationKind::PairedDouble || !exc.spatial_pair) {
    throw std::invalid_argument("hard-core boson image requires a paired double, got " +
                                to_string(exc.kind));
  }
  const auto [q, p] = *exc.spatial_pair;
  const unsigned lo = static_cast<unsigned>(2 * q), hi = static_cast<unsigned>(2 * p);
  PauliString yx, xy;
  yx.set(lo, Letter::Y);
  yx.set(hi, Letter::X);
  xy.set(lo, Letter::X);
  xy.set(hi, Letter::Y);
  QubitOperator op;
  op.add_term(yx, cplx{0, 0.5});
  op.add_term(xy, cplx{0, -0.5});
  return op;
}

}  // namespace uccc
