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

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "toposim/pauli.h"

namespace toposim {

/// A list of Pauli operators viewed as symplectic vectors (x | z) over Z_N,
/// each carrying its phase.
struct GeneratorMatrix {
  int dim = 2;
  std::size_t num_sites = 0;
  std::vector<PauliOperator> rows;

  GeneratorMatrix() = default;
  GeneratorMatrix(int d, std::size_t n) : dim(d), num_sites(n) {}
  GeneratorMatrix(int d, std::size_t n, std::vector<PauliOperator> r);

  void add(PauliOperator p);
  bool empty() const { return rows.empty(); }
  std::size_t size() const { return rows.size(); }
};

enum class Membership { MemberWithPhase, MemberUpToPhase, NonMember };

/// Howell form of the row span over Z_N, with phases of derived rows tracked
/// through every row operation.
GeneratorMatrix howell_canonicalize(const GeneratorMatrix& m);

bool pairwise_commuting(const GeneratorMatrix& m);

/// A stabilizer group held in Howell form, for repeated queries.
class StabilizerGroup {
 public:
  /// Throws std::invalid_argument if the generators do not commute, unless
  /// `require_commuting` is false (the span is then an arbitrary Pauli group
  /// and only the order and reduction queries are meaningful).
  explicit StabilizerGroup(const GeneratorMatrix& generators, bool require_commuting = true);

  const GeneratorMatrix& howell() const { return howell_; }
  int dim() const { return howell_.dim; }
  std::size_t num_sites() const { return howell_.num_sites; }

  /// log2 of the number of distinct elements, ignoring phases.
  int order_log2() const { return order_log2_; }
  /// False if the group contains a nontrivial scalar such as -1.
  bool phase_consistent() const { return phase_consistent_; }

  Membership membership(const PauliOperator& p) const;
  /// Reduces p by the pivot rows. The result is i^k I exactly when p is a
  /// member, with k = 0 iff the phases agree.
  PauliOperator reduce(const PauliOperator& p) const;

  /// Pivot order (N / pivot value) of each Howell row.
  const std::vector<int>& row_orders() const { return row_orders_; }

 private:
  GeneratorMatrix howell_;
  std::vector<std::size_t> pivot_columns_;
  std::vector<int> pivot_values_;
  std::vector<int> row_orders_;
  int order_log2_ = 0;
  bool phase_consistent_ = true;
};

int group_order_log2(const GeneratorMatrix& m);
/// Throws std::overflow_error if the order does not fit in 64 bits.
std::uint64_t group_order(const GeneratorMatrix& m);

Membership is_member(const PauliOperator& p, const GeneratorMatrix& m);

/// Generators of {g in <m> : g commutes with every constraint}, in Howell form.
GeneratorMatrix centralizer_in_group(const GeneratorMatrix& m, const GeneratorMatrix& constraints);

/// <constraints> joined with the part of <m> that commutes with them. This is
/// the projective-measurement update of a stabilizer group. Throws
/// std::invalid_argument if the constraints do not commute among themselves.
GeneratorMatrix extend_with_constraints(const GeneratorMatrix& m, const GeneratorMatrix& constraints);

/// Exact equality of the generated groups, phases included.
bool same_group(const GeneratorMatrix& a, const GeneratorMatrix& b);

}  // namespace toposim
