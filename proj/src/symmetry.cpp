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


#include "uccc/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "uccc/point_group.hpp"

namespace uccc {

std::string to_string(const SymmetryOperator& s) {
  std::string out = s.label + " " + to_string(PauliTerm(s.pauli, 1.0));
  out += s.sector > 0 ? " sector=+1" : " sector=-1";
  return out;
}

int z_parity(const PauliString& s, std::uint64_t bits) {
  return (std::popcount(s.z & bits) & 1) ? -1 : 1;
}

namespace {

SymmetryOperator make_z(std::uint64_t mask, const MolecularModel& m, std::string label) {
  SymmetryOperator s;
  s.pauli.z = mask;
  s.sector = z_parity(s.pauli, m.hf_bits());
  s.label = std::move(label);
  return s;
}

std::uint64_t parity_mask(int n, int start, int step) {
  std::uint64_t mask = 0;
  for (int q = start; q < n; q += step) mask |= std::uint64_t{1} << q;
  return mask;
}

// Reduces v against an echelon basis; returns the residue.
std::uint64_t reduce(std::uint64_t v, const std::vector<std::uint64_t>& basis) {
  for (std::uint64_t b : basis) {
    const std::uint64_t pivot = std::uint64_t{1} << (63 - std::countl_zero(b));
    if (v & pivot) v ^= b;
  }
  return v;
}

void insert_basis(std::uint64_t v, std::vector<std::uint64_t>& basis) {
  basis.push_back(v);
  std::sort(basis.begin(), basis.end(), std::greater<>());
}

}  // namespace

std::vector<SymmetryOperator> number_parity_symmetries(const MolecularModel& model) {
  const int n = model.n_spin_orbitals;
  return {make_z(parity_mask(n, 0, 2), model, "alpha_parity"),
          make_z(parity_mask(n, 1, 2), model, "beta_parity"),
          make_z(parity_mask(n, 0, 1), model, "total_parity")};
}

std::vector<SymmetryOperator> point_group_z2_symmetries(const MolecularModel& model) {
  const PointGroup& pg = point_group(model.point_group);
  std::vector<int> irrep(static_cast<std::size_t>(model.n_orbitals()));
  for (int p = 0; p < model.n_orbitals(); ++p) {
    irrep[static_cast<std::size_t>(p)] = pg.irrep_index(model.irreps[static_cast<std::size_t>(p)]);
  }
  std::vector<SymmetryOperator> out;
  std::vector<std::uint64_t> basis;
  for (int e = 1; e < pg.order(); ++e) {
    std::uint64_t mask = 0;
    for (int p = 0; p < model.n_orbitals(); ++p) {
      const int chi = pg.characters[static_cast<std::size_t>(irrep[static_cast<std::size_t>(p)])]
                                   [static_cast<std::size_t>(e)];
      if (chi < 0) mask |= std::uint64_t{3} << (2 * p);
    }
    if (mask == 0) continue;
    const std::uint64_t r = reduce(mask, basis);
    if (r == 0) continue;
    insert_basis(r, basis);
    out.push_back(make_z(mask, model, pg.elements[static_cast<std::size_t>(e)]));
  }
  return out;
}

std::vector<SymmetryOperator> pmsv1_symmetries(const MolecularModel& model) {
  return {number_parity_symmetries(model)[2]};
}

std::vector<SymmetryOperator> pmsv2_symmetries(const MolecularModel& model) {
  auto np = number_parity_symmetries(model);
  std::vector<SymmetryOperator> out{np[0], np[1]};
  for (auto& s : point_group_z2_symmetries(model)) out.push_back(std::move(s));
  return out;
}

std::vector<SymmetryOperator> all_symmetries(const MolecularModel& model) {
  auto out = number_parity_symmetries(model);
  for (auto& s : point_group_z2_symmetries(model)) out.push_back(std::move(s));
  return out;
}

bool commutes_with_all(const QubitOperator& op, const std::vector<SymmetryOperator>& syms) {
  for (const auto& [s, c] : op.terms()) {
    for (const SymmetryOperator& sym : syms) {
      if (!commutes(s, sym.pauli)) return false;
    }
  }
  return true;
}

bool irrep_allowed(const Excitation& e, const MolecularModel& model) {
  const PointGroup& pg = point_group(model.point_group);
  auto product = [&](const std::vector<int>& so) {
    int r = pg.totally_symmetric();
    for (int q : so) r = pg.product(r, pg.irrep_index(model.irreps[static_cast<std::size_t>(q / 2)]));
    return r;
  };
  return product(e.created()) == product(e.annihilated());
}

std::vector<Excitation> filter_excitations(const std::vector<Excitation>& pool,
                                           const std::vector<SymmetryOperator>& syms,
                                           const MolecularModel& model) {
  if (syms.empty()) return pool;
  std::vector<Excitation> out;
  for (const Excitation& e : pool) {
    if (!commutes_with_all(jordan_wigner(e.generator()), syms)) continue;
    if (!irrep_allowed(e, model)) continue;
    out.push_back(e);
  }
  return out;
}

}  // namespace uccc
