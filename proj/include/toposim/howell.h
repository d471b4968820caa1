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
#include <utility>
#include <vector>

namespace toposim {

/// Row reduction to Howell normal form over Z_M for M a power of two.
///
/// `Ops` supplies the row algebra:
///   int entry(const Row&, std::size_t column) const;
///   void subtract_multiple(Row& dst, const Row& src, int k) const;  // dst -= k * src
///   Row multiple(const Row& src, int k) const;                  // k * src, k > 0
///   bool is_zero(const Row&) const;
///
/// On return `rows` holds the Howell form: pivots are powers of two, entries
/// above each pivot are reduced modulo it, entries below are zero, and every
/// annihilator multiple of a pivot row lies in the span of the rows below it.
/// Zero rows are dropped. Returns the pivot column of each surviving row.
template <class Row, class Ops>
std::vector<std::size_t> howell_reduce(std::vector<Row>& rows, std::size_t num_columns, int modulus,
                                       const Ops& ops) {
  auto valuation = [](int v) {
    int k = 0;
    while ((v & 1) == 0) {
      v >>= 1;
      ++k;
    }
    return k;
  };
  auto inverse_unit = [modulus](int u) {
    for (int w = 1; w < modulus; w += 2) {
      if ((u * w) % modulus == 1) return w;
    }
    return 1;
  };

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < num_columns && r < rows.size(); ++col) {
    std::size_t best = rows.size();
    int best_val = 1 << 30;
    for (std::size_t i = r; i < rows.size(); ++i) {
      const int e = ops.entry(rows[i], col);
      if (e == 0) continue;
      const int v = valuation(e);
      if (v < best_val) {
        best_val = v;
        best = i;
      }
    }
    if (best == rows.size()) continue;
    std::swap(rows[r], rows[best]);

    const int e = ops.entry(rows[r], col);
    const int unit = e >> best_val;
    if (unit != 1) {
      const int inv = inverse_unit(unit % modulus);
      rows[r] = ops.multiple(rows[r], inv);
    }
    const int pivot = 1 << best_val;

    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      const int ei = ops.entry(rows[i], col);
      if (ei == 0) continue;
      const int k = ei / pivot;
      if (k != 0) ops.subtract_multiple(rows[i], rows[r], k);
    }

    if (pivot > 1) {
      Row ann = ops.multiple(rows[r], modulus / pivot);
      if (!ops.is_zero(ann)) rows.push_back(std::move(ann));
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

/// Integer rows over Z_M.
struct IntRowOps {
  int modulus;
  int entry(const std::vector<int>& row, std::size_t column) const { return row[column]; }
  void subtract_multiple(std::vector<int>& dst, const std::vector<int>& src, int k) const {
    for (std::size_t j = 0; j < dst.size(); ++j) dst[j] = ((dst[j] - k * src[j]) % modulus + modulus) % modulus;
  }
  std::vector<int> multiple(const std::vector<int>& src, int k) const {
    std::vector<int> out(src.size());
    for (std::size_t j = 0; j < src.size(); ++j) out[j] = (k * src[j]) % modulus;
    return out;
  }
  bool is_zero(const std::vector<int>& row) const {
    for (int v : row) {
      if (v != 0) return false;
    }
    return true;
  }
};

/// Generators of {k in Z_M^m : sum_i k_i * matrix[i] = 0}, where matrix has m rows.
std::vector<std::vector<int>> left_kernel(const std::vector<std::vector<int>>& matrix, std::size_t num_columns,
                                          int modulus);

}  // namespace toposim
