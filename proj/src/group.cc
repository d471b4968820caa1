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

#include <stdexcept>

#include "toposim/howell.h"

namespace toposim {

namespace {

struct PauliRowOps {
  int entry(const PauliOperator& row, std::size_t column) const { return row.symplectic(column); }
  void subtract_multiple(PauliOperator& dst, const PauliOperator& src, int k) const {
    dst *= adjoint(power(src, k));
  }
  PauliOperator multiple(const PauliOperator& src, int k) const { return power(src, k); }
  bool is_zero(const PauliOperator& row) const { return row.is_identity_up_to_phase(); }
};

void check_shape(const PauliOperator& p, int dim, std::size_t n) {
  if (p.dim() != dim || p.num_sites() != n) {
    throw std::invalid_argument("generator shape does not match matrix");
  }
}

}  // namespace

GeneratorMatrix::GeneratorMatrix(int d, std::size_t n, std::vector<PauliOperator> r)
    : dim(d), num_sites(n), rows(std::move(r)) {
  for (const auto& p : rows) check_shape(p, dim, num_sites);
}

void GeneratorMatrix::add(PauliOperator p) {
  check_shape(p, dim, num_sites);
  rows.push_back(std::move(p));
}

std::vector<std::vector<int>> left_kernel(const std::vector<std::vector<int>>& matrix, std::size_t num_columns,
                                          int modulus) {
  const std::size_t m = matrix.size();
  std::vector<std::vector<int>> aug;
  aug.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<int> row(num_columns + m, 0);
    for (std::size_t j = 0; j < num_columns; ++j) row[j] = ((matrix[i][j] % modulus) + modulus) % modulus;
    row[num_columns + i] = 1;
    aug.push_back(std::move(row));
  }
  const auto pivots = howell_reduce(aug, num_columns + m, modulus, IntRowOps{modulus});
  std::vector<std::vector<int>> kernel;
  for (std::size_t i = 0; i < aug.size(); ++i) {
    if (pivots[i] < num_columns) continue;
    kernel.emplace_back(aug[i].begin() + static_cast<std::ptrdiff_t>(num_columns), aug[i].end());
  }
  return kernel;
}

GeneratorMatrix howell_canonicalize(const GeneratorMatrix& m) {
  GeneratorMatrix out = m;
  howell_reduce(out.rows, 2 * m.num_sites, m.dim, PauliRowOps{});
  return out;
}

bool pairwise_commuting(const GeneratorMatrix& m) {
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    for (std::size_t j = i + 1; j < m.rows.size(); ++j) {
      if (!commutes(m.rows[i], m.rows[j])) return false;
    }
  }
  return true;
}

StabilizerGroup::StabilizerGroup(const GeneratorMatrix& generators, bool require_commuting) : howell_(generators) {
  if (require_commuting && !pairwise_commuting(generators)) {
    throw std::invalid_argument("generators do not commute; not a stabilizer group");
  }
  pivot_columns_ = howell_reduce(howell_.rows, 2 * howell_.num_sites, howell_.dim, PauliRowOps{});
  for (std::size_t i = 0; i < howell_.rows.size(); ++i) {
    const int pivot = howell_.rows[i].symplectic(pivot_columns_[i]);
    pivot_values_.push_back(pivot);
    row_orders_.push_back(howell_.dim / pivot);
    order_log2_ += row_orders_.back() == 4 ? 2 : 1;
  }
  // Scalars in the group come from relations among the inputs and from the
  // annihilator relations of the pivot rows.
  for (const auto& g : generators.rows) {
    if (!reduce(g).is_identity()) phase_consistent_ = false;
  }
  for (std::size_t i = 0; i < howell_.rows.size(); ++i) {
    if (!reduce(power(howell_.rows[i], row_orders_[i])).is_identity()) phase_consistent_ = false;
  }
}

PauliOperator StabilizerGroup::reduce(const PauliOperator& p) const {
  check_shape(p, howell_.dim, howell_.num_sites);
  PauliOperator residual = p;
  for (std::size_t i = 0; i < howell_.rows.size(); ++i) {
    const int e = residual.symplectic(pivot_columns_[i]);
    if (e == 0) continue;
    if (e % pivot_values_[i] != 0) return residual;
    residual *= adjoint(power(howell_.rows[i], e / pivot_values_[i]));
  }
  return residual;
}

Membership StabilizerGroup::membership(const PauliOperator& p) const {
  const PauliOperator residual = reduce(p);
  if (!residual.is_identity_up_to_phase()) return Membership::NonMember;
  return residual.phase() == 0 ? Membership::MemberWithPhase : Membership::MemberUpToPhase;
}

int group_order_log2(const GeneratorMatrix& m) { return StabilizerGroup(m).order_log2(); }

std::uint64_t group_order(const GeneratorMatrix& m) {
  const int bits = group_order_log2(m);
  if (bits >= 64) throw std::overflow_error("group order exceeds 2^63");
  return std::uint64_t{1} << bits;
}

Membership is_member(const PauliOperator& p, const GeneratorMatrix& m) { return StabilizerGroup(m).membership(p); }

GeneratorMatrix centralizer_in_group(const GeneratorMatrix& m, const GeneratorMatrix& constraints) {
  const GeneratorMatrix base = howell_canonicalize(m);
  const int dim = m.dim;
  // Commutation exponents are multiples of 4/N; work in Z_N.
  const int step = 4 / dim;
  std::vector<std::vector<int>> kappa(base.rows.size(), std::vector<int>(constraints.rows.size(), 0));
  for (std::size_t i = 0; i < base.rows.size(); ++i) {
    for (std::size_t j = 0; j < constraints.rows.size(); ++j) {
      kappa[i][j] = commutation_exponent(base.rows[i], constraints.rows[j]) / step;
    }
  }
  const auto kernel = left_kernel(kappa, constraints.rows.size(), dim);
  GeneratorMatrix out(dim, m.num_sites);
  for (const auto& k : kernel) {
    PauliOperator g = PauliOperator::identity(dim, m.num_sites);
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (k[i] != 0) g *= power(base.rows[i], k[i]);
    }
    if (!g.is_identity_up_to_phase()) out.add(std::move(g));
  }
  return howell_canonicalize(out);
}

GeneratorMatrix extend_with_constraints(const GeneratorMatrix& m, const GeneratorMatrix& constraints) {
  if (!pairwise_commuting(constraints)) {
    throw std::invalid_argument("constraints do not commute among themselves");
  }
  GeneratorMatrix joined = constraints;
  for (auto& g : centralizer_in_group(m, constraints).rows) joined.add(std::move(g));
  return howell_canonicalize(joined);
}

bool same_group(const GeneratorMatrix& a, const GeneratorMatrix& b) {
  if (a.dim != b.dim || a.num_sites != b.num_sites) return false;
  return howell_canonicalize(a).rows == howell_canonicalize(b).rows;
}

}  // namespace toposim
