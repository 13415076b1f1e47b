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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace uccc::kernels {

using Amp = std::complex<double>;

/// Row-major 2x2 complex matrix.
struct Mat2 {
  Amp m00, m01, m10, m11;
};

/// Statevector kernels. `n` is the qubit count; amplitudes are little-endian.
struct KernelTable {
  std::string_view name;
  void (*apply_1q)(Amp* psi, unsigned n, unsigned q, const Mat2& u);
  void (*apply_cx)(Amp* psi, unsigned n, unsigned control, unsigned target);
  /// Real part of <psi|P|psi> for P = X^x Z^z with `n_y` factors of i from Y letters folded in.
  double (*pauli_expectation)(const Amp* psi, unsigned n, std::uint64_t x, std::uint64_t z,
                              unsigned n_y);
  void (*probabilities)(const Amp* psi, unsigned n, double* out);
};

const KernelTable& scalar_kernels();
/// Null when the library was built without AVX2 support.
const KernelTable* avx2_kernels();

bool cpu_has_avx2();

/**
 * Kernels chosen once per process: AVX2 when both compiled in and supported
 * by the CPU, scalar otherwise. Setting UCCC_SIMD=scalar forces the scalar set.
 */
const KernelTable& active_kernels();

}  // namespace uccc::kernels
