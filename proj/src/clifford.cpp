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


#include "uccc/clifford.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

namespace uccc {

namespace {

PauliTerm single(unsigned q, Letter l, double sign = 1.0) {
  return PauliTerm(PauliString::single(q, l), sign);
}

// Number of quarter turns in a literal angle, or -1 when not a multiple of pi/2.
int quarter_turns(const Angle& a) {
  if (a.is_symbolic()) return -1;
  const double k = a.offset / (std::numbers::pi / 2);
  const double r = std::round(k);
  if (std::abs(k - r) > 1e-12) return -1;
  return static_cast<int>(((static_cast<long long>(r) % 4) + 4) % 4);
}

// Images of X and Z under one quarter turn about the rotation axis.
std::pair<PauliTerm, PauliTerm> quarter_images(GateKind k, unsigned q) {
  switch (k) {
    case GateKind::Rx: return {single(q, Letter::X), single(q, Letter::Y, -1.0)};
    case GateKind::Ry: return {single(q, Letter::Z, -1.0), single(q, Letter::X)};
    case GateKind::Rz: return {single(q, Letter::Y), single(q, Letter::Z)};
    default: throw std::logic_error("not a rotation");
  }
}

PauliTerm strip(const PauliTerm& p, unsigned q) {
  PauliTerm rest = p;
  rest.string.set(q, Letter::I);
  return rest;
}

PauliTerm conjugate_1q(const PauliTerm& p, unsigned q, const PauliTerm& img_x, const PauliTerm& img_z) {
  const Letter l = p.string.at(q);
  if (l == Letter::I) return p;
  const PauliTerm rest = strip(p, q);
  switch (l) {
    case Letter::X: return multiply(rest, img_x);
    case Letter::Z: return multiply(rest, img_z);
    default: {
      PauliTerm y = multiply(img_x, img_z);
      y.coefficient *= cplx(0.0, 1.0);
      return multiply(rest, y);
    }
  }
}

}  // namespace

bool is_clifford(const Gate& g) {
  switch (g.kind) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::CX:
      return true;
    case GateKind::Rx:
    case GateKind::Ry:
    case GateKind::Rz:
      return quarter_turns(g.angle) >= 0;
    default:
      return false;
  }
}

PauliTerm conjugate(const PauliTerm& p, const Gate& g) {
  const unsigned q = static_cast<unsigned>(g.q0);
  switch (g.kind) {
    case GateKind::X:
      return conjugate_1q(p, q, single(q, Letter::X), single(q, Letter::Z, -1.0));
    case GateKind::H:
      return conjugate_1q(p, q, single(q, Letter::Z), single(q, Letter::X));
    case GateKind::Rx:
    case GateKind::Ry:
    case GateKind::Rz: {
      const int turns = quarter_turns(g.angle);
      if (turns < 0) throw std::invalid_argument("rotation is not a Clifford gate");
      const auto [ix, iz] = quarter_images(g.kind, q);
      PauliTerm out = p;
      for (int k = 0; k < turns; ++k) out = conjugate_1q(out, q, ix, iz);
      return out;
    }
    case GateKind::CX: {
      const unsigned c = q, t = static_cast<unsigned>(g.q1);
      const Letter lc = p.string.at(c), lt = p.string.at(t);
      if (lc == Letter::I && lt == Letter::I) return p;
      PauliTerm out = strip(strip(p, c), t);
      int n_y = 0;
      auto factor = [&](Letter l, const PauliTerm& ix, const PauliTerm& iz) {
        if (l == Letter::Y) ++n_y;
        if (l == Letter::X || l == Letter::Y) out = multiply(out, ix);
        if (l == Letter::Z || l == Letter::Y) out = multiply(out, iz);
      };
      PauliString xx;
      xx.set(c, Letter::X);
      xx.set(t, Letter::X);
      PauliString zz;
      zz.set(c, Letter::Z);
      zz.set(t, Letter::Z);
      factor(lc, PauliTerm(xx, 1.0), single(c, Letter::Z));
      factor(lt, single(t, Letter::X), PauliTerm(zz, 1.0));
      for (int k = 0; k < n_y; ++k) out.coefficient *= cplx(0.0, 1.0);
      return out;
    }
    default:
      throw std::invalid_argument("cannot conjugate through a non-unitary operation");
  }
}

PauliTerm conjugate(const PauliTerm& p, const Circuit& c) {
  PauliTerm out = p;
  for (const Gate& g : c.gates()) out = conjugate(out, g);
  return out;
}

namespace {

struct Row {
  std::uint64_t x = 0, z = 0;
};

// Reduced row echelon form with X columns (in `order`) eliminated before Z columns.
std::vector<std::pair<Row, int>> x_echelon(const std::vector<PauliTerm>& terms,
                                           const std::vector<unsigned>& order) {
  std::vector<Row> rows;
  for (const PauliTerm& t : terms) rows.push_back({t.string.x, t.string.z});
  std::vector<std::pair<Row, int>> out;  // (row, pivot qubit)
  std::size_t r = 0;
  for (unsigned q : order) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    std::size_t piv = r;
    while (piv < rows.size() && !(rows[piv].x & bit)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && (rows[i].x & bit)) {
        rows[i].x ^= rows[r].x;
        rows[i].z ^= rows[r].z;
      }
    }
    out.emplace_back(rows[r], static_cast<int>(q));
    ++r;
  }
  return out;
}

}  // namespace

Diagonalization diagonalize(const std::vector<PauliString>& terms, unsigned n_qubits) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      if (!commutes(terms[i], terms[j])) {
        throw std::invalid_argument("cannot diagonalize anticommuting Pauli strings");
      }
    }
  }
  Diagonalization d{Circuit(static_cast<int>(n_qubits)), {}};
  for (const PauliString& s : terms) d.images.emplace_back(s, 1.0);
  auto apply = [&](const Gate& g) {
    d.clifford.add(g);
    for (PauliTerm& t : d.images) t = conjugate(t, g);
  };
  const double half_pi = std::numbers::pi / 2;
  const std::size_t guard = 4 * static_cast<std::size_t>(n_qubits) * n_qubits + 16;
  for (std::size_t iter = 0;; ++iter) {
    if (iter > guard) throw std::logic_error("diagonalization did not terminate");
    for (unsigned q = 0; q < n_qubits; ++q) {
      bool has_x = false, has_y = false, has_z = false;
      for (const PauliTerm& t : d.images) {
        const Letter l = t.string.at(q);
        has_x |= l == Letter::X;
        has_y |= l == Letter::Y;
        has_z |= l == Letter::Z;
      }
      if (has_z || has_x == has_y) continue;
      apply(has_x ? Gate::h(static_cast<int>(q)) : Gate::rx(static_cast<int>(q), Angle::literal(half_pi)));
    }
    if (std::all_of(d.images.begin(), d.images.end(),
                    [](const PauliTerm& t) { return t.string.is_diagonal(); })) {
      break;
    }
    std::vector<unsigned> weight(n_qubits, 0);
    for (const PauliTerm& t : d.images) {
      for (unsigned q = 0; q < n_qubits; ++q) weight[q] += (t.string.x >> q) & 1u;
    }
    std::vector<unsigned> order(n_qubits);
    for (unsigned q = 0; q < n_qubits; ++q) order[q] = q;
    std::stable_sort(order.begin(), order.end(),
                     [&](unsigned a, unsigned b) { return weight[a] > weight[b]; });
    const auto rows = x_echelon(d.images, order);
    bool acted = false;
    for (const auto& [row, pivot] : rows) {
      if (std::popcount(row.x) <= 1) continue;
      for (unsigned c = 0; c < n_qubits; ++c) {
        if (static_cast<int>(c) != pivot && ((row.x >> c) & 1u)) apply(Gate::cx(pivot, static_cast<int>(c)));
      }
      acted = true;
      break;
    }
    if (acted) continue;
    for (std::size_t i = 0; i < rows.size() && !acted; ++i) {
      for (std::size_t j = 0; j < rows.size() && !acted; ++j) {
        if (i == j) continue;
        const int pi = rows[i].second, pj = rows[j].second;
        if ((rows[i].first.z >> pj) & 1u) {
          apply(Gate::h(pj));
          apply(Gate::cx(pi, pj));
          apply(Gate::h(pj));
          acted = true;
        }
      }
    }
    if (!acted) throw std::logic_error("diagonalization made no progress");
  }
  for (PauliTerm& t : d.images) {
    if (std::abs(t.coefficient.imag()) > 1e-12 || std::abs(std::abs(t.coefficient.real()) - 1.0) > 1e-12) {
      throw std::logic_error("diagonalized image has a non-real sign");
    }
    t.coefficient = t.coefficient.real() > 0 ? 1.0 : -1.0;
  }
  return d;
}

namespace {

unsigned cost(std::uint64_t a, std::uint64_t b) { return static_cast<unsigned>(std::popcount(a ^ b)); }

// Closed tour from the empty parity through every node.
std::vector<std::size_t> tour(const std::vector<std::uint64_t>& nodes) {
  const std::size_t m = nodes.size();
  std::vector<std::size_t> order;
  if (m == 0) return order;
  if (m <= 12) {
    const std::size_t full = std::size_t{1} << m;
    constexpr unsigned kInf = std::numeric_limits<unsigned>::max() / 2;
    std::vector<unsigned> dp(full * m, kInf);
    std::vector<std::size_t> parent(full * m, m);
    for (std::size_t j = 0; j < m; ++j) dp[(std::size_t{1} << j) * m + j] = cost(0, nodes[j]);
    for (std::size_t mask = 1; mask < full; ++mask) {
      for (std::size_t last = 0; last < m; ++last) {
        const unsigned cur = dp[mask * m + last];
        if (cur >= kInf || !((mask >> last) & 1u)) continue;
        for (std::size_t nxt = 0; nxt < m; ++nxt) {
          if ((mask >> nxt) & 1u) continue;
          const std::size_t nm = mask | (std::size_t{1} << nxt);
          const unsigned c = cur + cost(nodes[last], nodes[nxt]);
          if (c < dp[nm * m + nxt]) {
            dp[nm * m + nxt] = c;
            parent[nm * m + nxt] = last;
          }
        }
      }
    }
    std::size_t best = 0;
    unsigned best_cost = kInf;
    for (std::size_t last = 0; last < m; ++last) {
      const unsigned c = dp[(full - 1) * m + last] + cost(nodes[last], 0);
      if (c < best_cost) {
        best_cost = c;
        best = last;
      }
    }
    std::size_t mask = full - 1, cur = best;
    while (cur != m) {
      order.push_back(cur);
      const std::size_t prev = parent[mask * m + cur];
      mask &= ~(std::size_t{1} << cur);
      cur = prev;
    }
    std::reverse(order.begin(), order.end());
    return order;
  }
  std::vector<bool> used(m, false);
  std::uint64_t at = 0;
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t pick = m;
    for (std::size_t j = 0; j < m; ++j) {
      if (!used[j] && (pick == m || cost(at, nodes[j]) < cost(at, nodes[pick]))) pick = j;
    }
    used[pick] = true;
    order.push_back(pick);
    at = nodes[pick];
  }
  return order;
}

}  // namespace

void emit_phase_polynomial(Circuit& c, std::vector<PhaseRotation> rotations) {
  std::erase_if(rotations, [](const PhaseRotation& r) { return r.parity == 0; });
  const unsigned n = static_cast<unsigned>(c.n_qubits());
  while (!rotations.empty()) {
    std::vector<unsigned> weight(n, 0);
    for (const PhaseRotation& r : rotations) {
      for (unsigned q = 0; q < n; ++q) weight[q] += (r.parity >> q) & 1u;
    }
    unsigned target = 0;
    for (unsigned q = 1; q < n; ++q) {
      if (weight[q] > weight[target]) target = q;
    }
    const std::uint64_t tbit = std::uint64_t{1} << target;
    std::map<std::uint64_t, std::vector<Angle>> groups;
    std::vector<std::uint64_t> nodes;
    std::vector<PhaseRotation> rest;
    for (PhaseRotation& r : rotations) {
      if (!(r.parity & tbit)) {
        rest.push_back(std::move(r));
        continue;
      }
      const std::uint64_t extra = r.parity & ~tbit;
      auto [it, inserted] = groups.try_emplace(extra);
      if (inserted) nodes.push_back(extra);
      it->second.push_back(std::move(r.angle));
    }
    std::uint64_t current = 0;
    auto move_to = [&](std::uint64_t next) {
      const std::uint64_t toggle = current ^ next;
      for (unsigned q = 0; q < n; ++q) {
        if ((toggle >> q) & 1u) c.add(Gate::cx(static_cast<int>(q), static_cast<int>(target)));
      }
      current = next;
    };
    for (std::size_t idx : tour(nodes)) {
      move_to(nodes[idx]);
      for (const Angle& a : groups[nodes[idx]]) c.add(Gate::rz(static_cast<int>(target), a));
    }
    move_to(0);
    rotations = std::move(rest);
  }
}

}  // namespace uccc
