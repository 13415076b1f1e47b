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

#include "oracle.hpp"
#include "uccc/pauli.hpp"

using namespace uccc;

namespace {

const char* kLetters = "IXYZ";

std::string random_letters(std::mt19937_64& rng, int n) {
  std::string s;
  for (int i = 0; i < n; ++i) s += kLetters[rng() % 4];
  return s;
}

}  // namespace

TEST(Pauli, LetterStringsIndexByQubit) {
  const PauliTerm t = oracle::term("XIZ");
  EXPECT_EQ(t.string.at(0), Letter::X);
  EXPECT_EQ(t.string.at(1), Letter::I);
  EXPECT_EQ(t.string.at(2), Letter::Z);
  EXPECT_EQ(parse_pauli_term("(1) [X0 Z2]").string, t.string);
  EXPECT_EQ(t.string.weight(), 2u);
}

TEST(Pauli, ProductMatchesDenseMatrices) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::string a = random_letters(rng, 3), b = random_letters(rng, 3);
    const PauliTerm p = multiply(oracle::term(a), oracle::term(b));
    const oracle::Mat want = oracle::pauli(a) * oracle::pauli(b);
    EXPECT_LT((to_dense(p, 3) - want).cwiseAbs().maxCoeff(), 1e-12) << a << " * " << b;
  }
}

TEST(Pauli, CommutationMatchesDenseCommutator) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const std::string a = random_letters(rng, 4), b = random_letters(rng, 4);
    const oracle::Mat pa = oracle::pauli(a), pb = oracle::pauli(b);
    const bool dense = (pa * pb - pb * pa).cwiseAbs().maxCoeff() < 1e-12;
    EXPECT_EQ(commutes(oracle::term(a).string, oracle::term(b).string), dense);
  }
}

TEST(Pauli, OperatorAlgebraMatchesDense) {
  const QubitOperator a = oracle::qop({{"XY", 0.5}, {"ZI", {0.25, -1.0}}, {"II", 2.0}});
  const QubitOperator b = oracle::qop({{"YY", -1.0}, {"XZ", {0.0, 0.5}}});
  const oracle::Mat da = to_dense(a, 2), db = to_dense(b, 2);
  EXPECT_LT((to_dense(a * b, 2) - da * db).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((to_dense(a + b, 2) - (da + db)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((to_dense(a.adjoint(), 2) - da.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_FALSE(a.is_hermitian());
  EXPECT_TRUE((a + a.adjoint()).is_hermitian());
}

TEST(Pauli, TextFormIsIndexed) {
  EXPECT_EQ(to_string(oracle::term("XIZ", -0.5)), "(-0.5) [X0 Z2]");
}

TEST(Pauli, TextRoundTrip) {
  const QubitOperator a = oracle::qop({{"XY", 0.5}, {"ZI", {0.25, -1.0}}, {"II", 2.0}, {"YZ", -0.125}});
  const QubitOperator b = parse_qubit_operator(to_string(a));
  EXPECT_LT(QubitOperator::distance(a, b), 1e-15);
  EXPECT_EQ(a.size(), 4u);
}

TEST(Pauli, CancellingTermsAreRemoved) {
  QubitOperator a = oracle::qop({{"XX", 1.0}, {"ZZ", 1.0}});
  a -= oracle::qop({{"XX", 1.0}});
  EXPECT_EQ(a.size(), 1u);
}

TEST(Pauli, MalformedTextThrows) {
  EXPECT_THROW(parse_qubit_operator("(0.5) [X0 Q1]"), std::invalid_argument);
  EXPECT_THROW(parse_qubit_operator("0.5 [X0]"), std::invalid_argument);
}

TEST(Pauli, ReversedProductSignTracksCommutation) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const PauliTerm a = oracle::term(random_letters(rng, 4)), b = oracle::term(random_letters(rng, 4));
    const PauliTerm ab = multiply(a, b), ba = multiply(b, a);
    ASSERT_EQ(ab.string, ba.string);
    const cplx ratio = ab.coefficient / ba.coefficient;
    EXPECT_NEAR(std::abs(ratio - cplx(commutes(a.string, b.string) ? 1.0 : -1.0)), 0.0, 1e-12);
  }
}

TEST(Pauli, AdditionIsAssociativeAndCommutative) {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> nd;
  auto random_op = [&] {
    QubitOperator op;
    for (int k = 0; k < 5; ++k) op.add_term(oracle::term(random_letters(rng, 3)).string, {nd(rng), nd(rng)});
    return op;
  };
  for (int trial = 0; trial < 50; ++trial) {
    const QubitOperator a = random_op(), b = random_op(), c = random_op();
    EXPECT_LT(QubitOperator::distance((a + b) + c, a + (b + c)), 1e-12);
    EXPECT_LT(QubitOperator::distance(a + b, b + a), 1e-12);
  }
}
