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

#include "toposim/group.h"

#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "oracle.h"
#include "toposim/code.h"

namespace toposim {
namespace {

int log2_size(std::size_t n) { return std::countr_zero(n); }

GeneratorMatrix random_matrix(std::mt19937_64& rng, int dim, std::size_t sites, std::size_t rows) {
  GeneratorMatrix m(dim, sites);
  for (std::size_t r = 0; r < rows; ++r) m.add(oracle::random_pauli(rng, dim, sites));
  return m;
}

TEST(Howell, OrderMatchesBruteForceClosure) {
  std::mt19937_64 rng(21);
  for (int d : {2, 4}) {
    for (int t = 0; t < 40; ++t) {
      const auto m = random_matrix(rng, d, 3, 1 + t % 5);
      const auto elems = oracle::closure(m.rows, d, 3);
      EXPECT_EQ(StabilizerGroup(m, false).order_log2(), log2_size(elems.size()));
      EXPECT_EQ(StabilizerGroup(howell_canonicalize(m), false).order_log2(), log2_size(elems.size()));
    }
  }
}

TEST(Howell, ZeroDivisorRowsKeepTheirOrder) {
  // X^2 on a ququart generates a group of order 2, not 4.
  GeneratorMatrix m(4, 1);
  m.add(PauliOperator::single_site(4, 1, 0, 2, 0));
  EXPECT_EQ(group_order(m), 2u);
  m.add(PauliOperator::single_site(4, 1, 0, 0, 2));
  EXPECT_EQ(group_order(m), 4u);
}

TEST(Howell, MembershipMatchesClosure) {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 20; ++t) {
    const auto m = random_matrix(rng, 4, 2, 2);
    const auto elems = oracle::closure(m.rows, 4, 2);
    const StabilizerGroup g(m, false);
    oracle::for_each_pauli(4, 2, [&](const PauliOperator& p) {
      const bool member = g.membership(p) != Membership::NonMember;
      ASSERT_EQ(member, elems.contains(oracle::key(p))) << to_literal(p);
    });
  }
}

TEST(StabilizerGroup, TracksPhases) {
  GeneratorMatrix m(2, 2);
  m.add(parse_literal("i^0 X1@e0 X1@e1", 2, 2));
  m.add(parse_literal("i^0 Z1@e0 Z1@e1", 2, 2));
  const StabilizerGroup g(m);
  EXPECT_TRUE(g.phase_consistent());
  // XX * ZZ is the canonical word XZ (x) XZ with phase i^0, which is -YY.
  const auto xx_zz = m.rows[0] * m.rows[1];
  EXPECT_EQ(oracle::to_matrix(xx_zz),
            oracle::matmul(oracle::to_matrix(m.rows[0]), oracle::to_matrix(m.rows[1])));
  EXPECT_EQ(g.membership(parse_literal("i^0 X1 Z1@e0 X1 Z1@e1", 2, 2)), Membership::MemberWithPhase);
  EXPECT_EQ(g.membership(parse_literal("i^2 X1 Z1@e0 X1 Z1@e1", 2, 2)), Membership::MemberUpToPhase);
  EXPECT_EQ(g.membership(parse_literal("i^0 X1@e0", 2, 2)), Membership::NonMember);
}

TEST(StabilizerGroup, RejectsNonCommutingGenerators) {
  GeneratorMatrix m(2, 1);
  m.add(PauliOperator::single_site(2, 1, 0, 1, 0));
  m.add(PauliOperator::single_site(2, 1, 0, 0, 1));
  EXPECT_FALSE(pairwise_commuting(m));
  EXPECT_THROW(StabilizerGroup{m}, std::invalid_argument);
  EXPECT_THROW(extend_with_constraints(GeneratorMatrix(2, 1), m), std::invalid_argument);
}

TEST(StabilizerGroup, DetectsScalarInGroup) {
  GeneratorMatrix m(2, 1);
  m.add(parse_literal("i^0 Z1@e0", 2, 1));
  m.add(parse_literal("i^2 Z1@e0", 2, 1));
  EXPECT_FALSE(StabilizerGroup(m).phase_consistent());
}

TEST(Centralizer, MatchesBruteForce) {
  const TorusLattice lat(2, 2);
  const auto code = build_z4_toric(lat);
  GeneratorMatrix constraint(4, lat.num_edges());
  constraint.add(ds_constraint_h(lat, 0));
  const auto cent = centralizer_in_group(code.matrix(), constraint);
  const auto all = oracle::closure(code.matrix().rows, 4, lat.num_edges());
  // Brute force: count elements of <A, B> commuting with the constraint.
  std::size_t count = 0;
  std::vector<PauliOperator> elems{PauliOperator(4, lat.num_edges())};
  {
    std::unordered_set<std::uint64_t> seen{oracle::key(elems[0])};
    for (const auto& g : code.matrix().rows) {
      const std::size_t base = elems.size();
      for (std::size_t i = 0; i < base; ++i) {
        PauliOperator cur = elems[i];
        for (int k = 1; k < 4; ++k) {
          cur *= g;
          if (seen.insert(oracle::key(cur)).second) elems.push_back(cur);
        }
      }
    }
  }
  ASSERT_EQ(elems.size(), all.size());
  for (const auto& e : elems) count += commutes(e, constraint.rows[0]) ? 1 : 0;
  EXPECT_EQ(group_order(cent), count);
  for (const auto& row : cent.rows) EXPECT_TRUE(commutes(row, constraint.rows[0]));
}

TEST(SameGroup, IgnoresGeneratorChoice) {
  const TorusLattice lat(3, 3);
  const auto m = build_z2_toric(lat).matrix();
  GeneratorMatrix shuffled(2, lat.num_edges());
  for (std::size_t i = m.size(); i-- > 0;) shuffled.add(m.rows[i] * m.rows[(i + 1) % m.size()]);
  shuffled.add(m.rows[0]);
  EXPECT_TRUE(same_group(m, shuffled));
  GeneratorMatrix dropped(2, lat.num_edges(), {m.rows.begin() + 1, m.rows.end()});
  // Dropping one vertex term loses nothing, the star product is redundant.
  EXPECT_TRUE(same_group(m, dropped));
  dropped.rows.erase(dropped.rows.begin());
  EXPECT_FALSE(same_group(m, dropped));
}

}  // namespace
}  // namespace toposim
