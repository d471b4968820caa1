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

// Independent oracles for the tests. Nothing here calls into the symplectic
// machinery except to read exponents out of a PauliOperator.

#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "toposim/code.h"
#include "toposim/pauli.h"

namespace toposim::oracle {

// Exact complex numbers with integer parts; every entry of a generalised Pauli
// matrix for N in {2, 4} is 0 or a power of i.
struct Gauss {
  std::int64_t re = 0;
  std::int64_t im = 0;
  Gauss operator*(Gauss o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  Gauss operator+(Gauss o) const { return {re + o.re, im + o.im}; }
  bool zero() const { return re == 0 && im == 0; }
  bool operator==(const Gauss&) const = default;
};

inline Gauss i_power(int k) {
  static const Gauss table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[((k % 4) + 4) % 4];
}

struct Matrix {
  std::size_t n = 0;
  std::vector<Gauss> a;
  explicit Matrix(std::size_t size = 0) : n(size), a(size * size) {}
  Gauss& at(std::size_t r, std::size_t c) { return a[r * n + c]; }
  const Gauss& at(std::size_t r, std::size_t c) const { return a[r * n + c]; }
  bool operator==(const Matrix&) const = default;
};

inline Matrix matmul(const Matrix& x, const Matrix& y) {
  Matrix out(x.n);
  for (std::size_t r = 0; r < x.n; ++r) {
    for (std::size_t k = 0; k < x.n; ++k) {
      const Gauss lhs = x.at(r, k);
      if (lhs.zero()) continue;
      for (std::size_t c = 0; c < x.n; ++c) out.at(r, c) = out.at(r, c) + lhs * y.at(k, c);
    }
  }
  return out;
}

inline Matrix kron(const Matrix& x, const Matrix& y) {
  Matrix out(x.n * y.n);
  for (std::size_t r1 = 0; r1 < x.n; ++r1)
    for (std::size_t c1 = 0; c1 < x.n; ++c1)
      for (std::size_t r2 = 0; r2 < y.n; ++r2)
        for (std::size_t c2 = 0; c2 < y.n; ++c2)
          out.at(r1 * y.n + r2, c1 * y.n + c2) = x.at(r1, c1) * y.at(r2, c2);
  return out;
}

// Shift X|j> = |j+1> and clock Z|j> = w^j |j>, with w = i^(4/N).
inline Matrix shift(int dim) {
  Matrix m(dim);
  for (int j = 0; j < dim; ++j) m.at((j + 1) % dim, j) = {1, 0};
  return m;
}

inline Matrix clock(int dim) {
  if (dim != 2 && dim != 4) throw std::invalid_argument("oracle supports N = 2 or 4");
  Matrix m(dim);
  for (int j = 0; j < dim; ++j) m.at(j, j) = i_power(j * (4 / dim));
  return m;
}

inline Matrix identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t j = 0; j < n; ++j) m.at(j, j) = {1, 0};
  return m;
}

inline Matrix mpow(const Matrix& m, int k) {
  Matrix out = identity(m.n);
  for (int j = 0; j < k; ++j) out = matmul(out, m);
  return out;
}

// i^phase * prod_j X_j^a Z_j^b, with site 0 as the most significant factor.
inline Matrix to_matrix(const PauliOperator& p) {
  const int d = p.dim();
  Matrix out = identity(1);
  for (std::size_t j = 0; j < p.num_sites(); ++j) {
    out = kron(out, matmul(mpow(shift(d), p.x(j)), mpow(clock(d), p.z(j))));
  }
  const Gauss ph = i_power(p.phase());
  for (auto& e : out.a) e = e * ph;
  return out;
}

inline PauliOperator random_pauli(std::mt19937_64& rng, int dim, std::size_t sites) {
  std::uniform_int_distribution<int> digit(0, dim - 1);
  std::uniform_int_distribution<int> phase(0, 3);
  PauliOperator p(dim, sites);
  for (std::size_t j = 0; j < sites; ++j) p.set_site(j, digit(rng), digit(rng));
  p.set_phase(phase(rng));
  return p;
}

// Symplectic key, log2(N) bits per exponent. Phases are ignored.
inline std::uint64_t key(const PauliOperator& p) {
  const int bits = p.dim() == 2 ? 1 : 2;
  if (2 * p.num_sites() * bits > 64) throw std::invalid_argument("operator too large for the oracle key");
  std::uint64_t k = 0;
  for (std::size_t j = 0; j < p.num_sites(); ++j) {
    k = (k << bits) | p.x(j);
    k = (k << bits) | p.z(j);
  }
  return k;
}

// Brute-force closure of a generating set, up to phases.
inline std::unordered_set<std::uint64_t> closure(const std::vector<PauliOperator>& gens, int dim, std::size_t sites,
                                                 std::size_t cap = 1u << 22) {
  std::vector<PauliOperator> elems{PauliOperator(dim, sites)};
  std::unordered_set<std::uint64_t> seen{key(elems[0])};
  for (const auto& g : gens) {
    const std::size_t base = elems.size();
    for (std::size_t i = 0; i < base; ++i) {
      PauliOperator cur = elems[i];
      for (int k = 1; k < dim; ++k) {
        cur *= g;
        if (seen.insert(key(cur)).second) elems.push_back(cur);
      }
    }
    if (elems.size() > cap) throw std::length_error("oracle closure too large");
  }
  return seen;
}

inline std::vector<PauliOperator> ops(const StabilizerCode& code) {
  std::vector<PauliOperator> out;
  for (const auto& g : code.generators) out.push_back(g.op);
  return out;
}

// Commutation phase from the matrices: P Q = i^k Q P, k in Z_4.
inline int matrix_commutation(const PauliOperator& p, const PauliOperator& q) {
  const Matrix pq = matmul(to_matrix(p), to_matrix(q));
  const Matrix qp = matmul(to_matrix(q), to_matrix(p));
  const int step = 4 / p.dim();
  for (int k = 0; k < p.dim(); ++k) {
    Matrix t = qp;
    for (auto& e : t.a) e = e * i_power(k * step);
    if (t == pq) return k * step;
  }
  throw std::logic_error("operators do not commute up to a root of unity");
}

// Every operator on n sites, enumerated through a callback. Phase 0.
template <typename F>
void for_each_pauli(int dim, std::size_t sites, F&& f) {
  std::vector<int> digits(2 * sites, 0);
  PauliOperator p(dim, sites);
  while (true) {
    f(p);
    std::size_t j = 0;
    while (j < digits.size() && ++digits[j] == dim) digits[j++] = 0;
    if (j == digits.size()) return;
    for (std::size_t s = 0; s <= j / 2 && s < sites; ++s) p.set_site(s, digits[2 * s], digits[2 * s + 1]);
  }
}

}  // namespace toposim::oracle
