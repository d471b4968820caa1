// Copyright 2026 The toposim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "toposim/pauli.h"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "oracle.h"

namespace toposim {
namespace {

using oracle::to_matrix;

TEST(PauliOperator, SingleSiteMatchesShiftAndClock) {
  for (int d : {2, 4}) {
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) {
        const auto p = PauliOperator::single_site(d, 1, 0, a, b);
        EXPECT_EQ(to_matrix(p), oracle::matmul(oracle::mpow(oracle::shift(d), a), oracle::mpow(oracle::clock(d), b)));
      }
    }
  }
}

TEST(PauliOperator, ZXIsOmegaXZ) {
  const auto x = PauliOperator::single_site(4, 1, 0, 1, 0);
  const auto z = PauliOperator::single_site(4, 1, 0, 0, 1);
  const auto zx = z * x;
  EXPECT_EQ(zx.x(0), 1);
  EXPECT_EQ(zx.z(0), 1);
  EXPECT_EQ(zx.phase(), 1);  // omega = i
  EXPECT_EQ(commutation_exponent(z, x), 1);
  EXPECT_EQ(commutation_exponent(x, z), 3);
}

TEST(PauliOperator, ProductMatchesMatrixProduct) {
  std::mt19937_64 rng(7);
  for (int d : {2, 4}) {
    for (std::size_t n : {1u, 2u}) {
      for (int t = 0; t < 300; ++t) {
        const auto p = oracle::random_pauli(rng, d, n);
        const auto q = oracle::random_pauli(rng, d, n);
        ASSERT_EQ(to_matrix(p * q), oracle::matmul(to_matrix(p), to_matrix(q))) << to_literal(p) << " * " << to_literal(q);
      }
    }
  }
}

TEST(PauliOperator, CommutationMatchesMatrices) {
  std::mt19937_64 rng(11);
  for (int d : {2, 4}) {
    for (int t = 0; t < 300; ++t) {
      const auto p = oracle::random_pauli(rng, d, 2);
      const auto q = oracle::random_pauli(rng, d, 2);
      ASSERT_EQ(commutation_exponent(p, q), oracle::matrix_commutation(p, q));
    }
  }
}

TEST(PauliOperator, AdjointAndPower) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const auto p = oracle::random_pauli(rng, 4, 2);
    EXPECT_TRUE((p * adjoint(p)).is_identity());
    EXPECT_EQ(to_matrix(power(p, 3)), oracle::mpow(to_matrix(p), 3));
    EXPECT_EQ(power(p, 0), PauliOperator::identity(4, 2));
  }
}

TEST(PauliOperator, WeightAndSupport) {
  PauliOperator p(4, 5);
  p.set_site(1, 2, 0);
  p.set_site(3, 0, 3);
  EXPECT_EQ(p.weight(), 2u);
  EXPECT_EQ(p.support(), (std::vector<std::size_t>{1, 3}));
  p.set_phase(2);
  EXPECT_FALSE(p.is_identity_up_to_phase());
  EXPECT_FALSE(p.is_identity());
}

TEST(PauliOperator, LiteralRoundTrip) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const auto p = oracle::random_pauli(rng, 4, 4);
    EXPECT_EQ(parse_literal(to_literal(p), 4, 4), p);
  }
  EXPECT_EQ(to_literal(PauliOperator(2, 3)), "i^0 I");
  EXPECT_THROW(parse_literal("i^0 X1@e9", 2, 3), std::invalid_argument);
  EXPECT_THROW(parse_literal("i^0 Q1@e0", 2, 3), std::invalid_argument);
}

TEST(PauliOperator, RejectsMismatchedOperands) {
  const PauliOperator a(2, 2);
  const PauliOperator b(4, 2);
  const PauliOperator c(2, 3);
  EXPECT_THROW(a * b, std::invalid_argument);
  EXPECT_THROW(commutation_exponent(a, c), std::invalid_argument);
  EXPECT_THROW(PauliOperator(3, 1), std::invalid_argument);
}

// Bell states as explicit vectors; each listed stabiliser must fix its state.
TEST(PauliOperator, BellStabilizersFixTheirStates) {
  const std::pair<BellState, std::array<int, 4>> states[] = {
      {BellState::PhiPlus, {1, 0, 0, 1}},
      {BellState::PhiMinus, {1, 0, 0, -1}},
      {BellState::PsiPlus, {0, 1, 1, 0}},
      {BellState::PsiMinus, {0, 1, -1, 0}},
  };
  for (const auto& [state, amps] : states) {
    for (const auto& s : bell_stabilizers(state)) {
      const auto m = to_matrix(s);
      for (std::size_t r = 0; r < 4; ++r) {
        oracle::Gauss acc;
        for (std::size_t c = 0; c < 4; ++c) acc = acc + m.at(r, c) * oracle::Gauss{amps[c], 0};
        EXPECT_EQ(acc, (oracle::Gauss{amps[r], 0})) << to_literal(s);
      }
    }
  }
}

}  // namespace
}  // namespace toposim
