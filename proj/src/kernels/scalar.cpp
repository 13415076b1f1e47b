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


#include <bit>

#include "uccc/kernels.hpp"

namespace uccc::kernels {

namespace {

void apply_1q(Amp* psi, unsigned n, unsigned q, const Mat2& u) {
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t stride = std::size_t{1} << q;
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const Amp a0 = psi[i], a1 = psi[i + stride];
      psi[i] = u.m00 * a0 + u.m01 * a1;
      psi[i + stride] = u.m10 * a0 + u.m11 * a1;
    }
  }
}

void apply_cx(Amp* psi, unsigned n, unsigned control, unsigned target) {
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t cbit = std::size_t{1} << control, tbit = std::size_t{1} << target;
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & cbit) && !(i & tbit)) std::swap(psi[i], psi[i | tbit]);
  }
}

double pauli_expectation(const Amp* psi, unsigned n, std::uint64_t x, std::uint64_t z,
                         unsigned n_y) {
  const std::size_t dim = std::size_t{1} << n;
  Amp acc = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    const Amp term = std::conj(psi[i ^ x]) * psi[i];
    acc += (std::popcount(i & z) & 1) ? -term : term;
  }
  switch (n_y & 3u) {
    case 0: return acc.real();
    case 1: return -acc.imag();
    case 2: return -acc.real();
    default: return acc.imag();
  }
}

void probabilities(const Amp* psi, unsigned n, double* out) {
  const std::size_t dim = std::size_t{1} << n;
  for (std::size_t i = 0; i < dim; ++i) out[i] = std::norm(psi[i]);
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", apply_1q, apply_cx, pauli_expectation, probabilities};
  return table;
}

}  // namespace uccc::kernels
