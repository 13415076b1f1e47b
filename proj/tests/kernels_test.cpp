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


#include <gtest/gtest.h>

#include <random>

#include "uccc/kernels.hpp"
#include "uccc/rng.hpp"

using namespace uccc;
using namespace uccc::kernels;

TEST(Philox, KnownAnswerVectors) {
  using C = Philox4x32::Counter;
  using K = Philox4x32::Key;
  EXPECT_EQ(Philox4x32::block(C{0, 0, 0, 0}, K{0, 0}), (C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
  EXPECT_EQ(Philox4x32::block(C{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, K{0xffffffff, 0xffffffff}),
            (C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
  EXPECT_EQ(Philox4x32::block(C{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, K{0xa4093822, 0x299f31d0}),
            (C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(Philox, StreamsAreReproducibleAndDistinct) {
  ShotRng a(42, 0), b(42, 0), c(42, 1);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const double x = a.uniform();
    EXPECT_EQ(x, b.uniform());
    EXPECT_GE(x, 0.0);
    EXPECT_LT(x, 1.0);
    differs = differs || x != c.uniform();
  }
  EXPECT_TRUE(differs);
}

namespace {

std::vector<Amp> random_state(unsigned n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  std::vector<Amp> v(std::size_t{1} << n);
  for (auto& a : v) a = {nd(rng), nd(rng)};
  return v;
}

double max_diff(const std::vector<Amp>& a, const std::vector<Amp>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

class KernelEquivalence : public ::testing::Test {
 protected:
  void SetUp() override {
    if (avx2_kernels() == nullptr || !cpu_has_avx2()) GTEST_SKIP() << "AVX2 unavailable";
  }
};

TEST_F(KernelEquivalence, SingleQubitGate) {
  const Mat2 u{{0.6, 0.1}, {-0.3, 0.7}, {0.2, -0.5}, {0.8, 0.05}};
  for (unsigned n : {1u, 2u, 3u, 7u}) {
    for (unsigned q = 0; q < n; ++q) {
      auto a = random_state(n, n * 10 + q), b = a;
      scalar_kernels().apply_1q(a.data(), n, q, u);
      avx2_kernels()->apply_1q(b.data(), n, q, u);
      EXPECT_LT(max_diff(a, b), 1e-14) << n << " " << q;
    }
  }
}

TEST_F(KernelEquivalence, ControlledNot) {
  for (unsigned n : {2u, 3u, 6u}) {
    for (unsigned c = 0; c < n; ++c) {
      for (unsigned t = 0; t < n; ++t) {
        if (c == t) continue;
        auto a = random_state(n, 100 + c * 8 + t), b = a;
        scalar_kernels().apply_cx(a.data(), n, c, t);
        avx2_kernels()->apply_cx(b.data(), n, c, t);
        EXPECT_EQ(max_diff(a, b), 0.0);
      }
    }
  }
}

TEST_F(KernelEquivalence, Probabilities) {
  for (unsigned n : {1u, 2u, 5u}) {
    const auto a = random_state(n, 7 + n);
    std::vector<double> p(a.size()), q(a.size());
    scalar_kernels().probabilities(a.data(), n, p.data());
    avx2_kernels()->probabilities(a.data(), n, q.data());
    for (std::size_t i = 0; i < p.size(); ++i) EXPECT_NEAR(p[i], q[i], 1e-14);
  }
}

TEST(Kernels, ScalarMatchesDefinition) {
  auto a = random_state(2, 3);
  const auto orig = a;
  scalar_kernels().apply_cx(a.data(), 2, 0, 1);
  // CX(0 -> 1) swaps |01> and |11> in little-endian order.
  EXPECT_EQ(a[1], orig[3]);
  EXPECT_EQ(a[3], orig[1]);
  EXPECT_EQ(a[0], orig[0]);
  EXPECT_EQ(a[2], orig[2]);
}
