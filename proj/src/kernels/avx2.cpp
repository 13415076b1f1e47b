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


#include "uccc/kernels.hpp"

#if defined(UCCC_HAVE_AVX2)

#include <immintrin.h>

#include <bit>

namespace uccc::kernels {

namespace {

// Two complex doubles per register: [re0, im0, re1, im1].
inline __m256d cmul(__m256d v, __m256d ure, __m256d uim) {
  const __m256d swapped = _mm256_permute_pd(v, 0b0101);
  return _mm256_addsub_pd(_mm256_mul_pd(ure, v), _mm256_mul_pd(uim, swapped));
}

inline __m256d load(const Amp* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store(Amp* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

void apply_1q(Amp* psi, unsigned n, unsigned q, const Mat2& u) {
  if (q == 0 || n < 2) {
    scalar_kernels().apply_1q(psi, n, q, u);
    return;
  }
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t stride = std::size_t{1} << q;
  const __m256d r00 = _mm256_set1_pd(u.m00.real()), i00 = _mm256_set1_pd(u.m00.imag());
  const __m256d r01 = _mm256_set1_pd(u.m01.real()), i01 = _mm256_set1_pd(u.m01.imag());
  const __m256d r10 = _mm256_set1_pd(u.m10.real()), i10 = _mm256_set1_pd(u.m10.imag());
  const __m256d r11 = _mm256_set1_pd(u.m11.real()), i11 = _mm256_set1_pd(u.m11.imag());
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; i += 2) {
      const __m256d a0 = load(psi + i), a1 = load(psi + i + stride);
      store(psi + i, _mm256_add_pd(cmul(a0, r00, i00), cmul(a1, r01, i01)));
      store(psi + i + stride, _mm256_add_pd(cmul(a0, r10, i10), cmul(a1, r11, i11)));
    }
  }
}

void apply_cx(Amp* psi, unsigned n, unsigned control, unsigned target) {
  if (control == 0 || target == 0 || n < 2) {
    scalar_kernels().apply_cx(psi, n, control, target);
    return;
  }
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t cbit = std::size_t{1} << control, tbit = std::size_t{1} << target;
  for (std::size_t i = 0; i < dim; i += 2) {
    if ((i & cbit) && !(i & tbit)) {
      const __m256d a = load(psi + i), b = load(psi + (i | tbit));
      store(psi + i, b);
      store(psi + (i | tbit), a);
    }
  }
}

double pauli_expectation(const Amp* psi, unsigned n, std::uint64_t x, std::uint64_t z,
                         unsigned n_y) {
  if ((x & 1u) || n < 2) return scalar_kernels().pauli_expectation(psi, n, x, z, n_y);
  const std::size_t dim = std::size_t{1} << n;
  // Lane 1 carries the sign flip of the odd index when z acts on qubit 0.
  const __m256d odd_sign = (z & 1u) ? _mm256_set_pd(-1.0, -1.0, 1.0, 1.0) : _mm256_set1_pd(1.0);
  __m256d acc_re = _mm256_setzero_pd(), acc_im = _mm256_setzero_pd();
  for (std::size_t i = 0; i < dim; i += 2) {
    const __m256d a = load(psi + i), b = load(psi + (i ^ x));
    // conj(b) * a: re = br*ar + bi*ai, im = br*ai - bi*ar.
    const __m256d prod_re = _mm256_mul_pd(b, a);
    const __m256d prod_im = _mm256_mul_pd(b, _mm256_permute_pd(a, 0b0101));
    const double sign = (std::popcount(i & z) & 1) ? -1.0 : 1.0;
    const __m256d s = _mm256_mul_pd(_mm256_set1_pd(sign), odd_sign);
    acc_re = _mm256_add_pd(acc_re, _mm256_mul_pd(s, prod_re));
    acc_im = _mm256_add_pd(acc_im, _mm256_mul_pd(s, prod_im));
  }
  alignas(32) double re[4], im[4];
  _mm256_store_pd(re, acc_re);
  _mm256_store_pd(im, acc_im);
  const Amp acc(re[0] + re[1] + re[2] + re[3], im[0] - im[1] + im[2] - im[3]);
  switch (n_y & 3u) {
    case 0: return acc.real();
    case 1: return -acc.imag();
    case 2: return -acc.real();
    default: return acc.imag();
  }
}

void probabilities(const Amp* psi, unsigned n, double* out) {
  const std::size_t dim = std::size_t{1} << n;
  if (dim < 4) {
    scalar_kernels().probabilities(psi, n, out);
    return;
  }
  for (std::size_t i = 0; i < dim; i += 4) {
    const __m256d a = load(psi + i), b = load(psi + i + 2);
    const __m256d sa = _mm256_mul_pd(a, a), sb = _mm256_mul_pd(b, b);
    // hadd gives [a0, b0, a1, b1]; permute restores index order.
    const __m256d h = _mm256_hadd_pd(sa, sb);
    _mm256_storeu_pd(out + i, _mm256_permute4x64_pd(h, 0b11011000));
  }
}

}  // namespace

const KernelTable* avx2_kernels() {
  static const KernelTable table{"avx2", apply_1q, apply_cx, pauli_expectation, probabilities};
  return &table;
}

}  // namespace uccc::kernels

#else

namespace uccc::kernels {

const KernelTable* avx2_kernels() { return nullptr; }

}  // namespace uccc::kernels

#endif
