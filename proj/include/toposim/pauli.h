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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace toposim {

/// Global phase exponent: the operator carries a factor i^phase.
using Phase = std::uint8_t;

/// A generalized Pauli operator over Z_N qudits (N = 2 or 4) in canonical
/// form i^phase * prod_j X_j^{x_j} Z_j^{z_j}, with X to the left of Z on
/// every site. X|k> = |k+1> and Z|k> = omega^k |k> with omega = exp(2 pi i / N),
/// so that Z X = omega X Z.
///
/// Phases are always tracked as powers of i, also for N = 2.
class PauliOperator {
 public:
  PauliOperator() = default;
  PauliOperator(int dim, std::size_t num_sites);

  static PauliOperator identity(int dim, std::size_t num_sites) { return PauliOperator(dim, num_sites); }
  static PauliOperator single_site(int dim, std::size_t num_sites, std::size_t site, int x_power, int z_power);

  int dim() const { return dim_; }
  std::size_t num_sites() const { return x_.size(); }
  Phase phase() const { return phase_; }
  std::uint8_t x(std::size_t site) const { return x_[site]; }
  std::uint8_t z(std::size_t site) const { return z_[site]; }
  std::span<const std::uint8_t> x_exponents() const { return x_; }
  std::span<const std::uint8_t> z_exponents() const { return z_; }

  void set_phase(int phase);
  void set_x(std::size_t site, int power);
  void set_z(std::size_t site, int power);
  /// Overwrites the site with X^x Z^z; the phase is left untouched.
  void set_site(std::size_t site, int x_power, int z_power);

  /// Symplectic entry: columns [0, n) are X exponents, [n, 2n) are Z exponents.
  std::uint8_t symplectic(std::size_t column) const;

  std::size_t weight() const;
  bool is_identity_up_to_phase() const;
  bool is_identity() const { return phase_ == 0 && is_identity_up_to_phase(); }
  std::vector<std::size_t> support() const;

  /// In-place right multiplication: *this <- *this * rhs.
  PauliOperator& operator*=(const PauliOperator& rhs);
  /// In-place right multiplication by a single-site operator X^x Z^z.
  void multiply_site(std::size_t site, int x_power, int z_power);

  bool operator==(const PauliOperator& other) const = default;

 private:
  int dim_ = 2;
  Phase phase_ = 0;
  std::vector<std::uint8_t> x_;
  std::vector<std::uint8_t> z_;
};

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q);
inline PauliOperator operator*(const PauliOperator& p, const PauliOperator& q) { return multiply(p, q); }

/// kappa in Z_4 with P Q = i^kappa Q P.
int commutation_exponent(const PauliOperator& p, const PauliOperator& q);
inline bool commutes(const PauliOperator& p, const PauliOperator& q) { return commutation_exponent(p, q) == 0; }

PauliOperator adjoint(const PauliOperator& p);
/// P^k for k >= 0.
PauliOperator power(const PauliOperator& p, int k);

/// Throws std::invalid_argument unless both operators share dimension and site count.
void require_compatible(const PauliOperator& p, const PauliOperator& q);

enum class BellState { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

struct BellSigns {
  int xx;
  int yy;
  int zz;
};

/// Eigenvalue signs of (X1 X2, Y1 Y2, Z1 Z2) on the given Bell state.
BellSigns bell_stabilizer_signs(BellState state);
/// The three signed two-qubit stabilizers, in the order XX, YY, ZZ. Y = i X Z.
std::vector<PauliOperator> bell_stabilizers(BellState state);

// Text literal format, e.g. "i^1 X3 Z3@e17 X1@e2". Factors accumulate until a
// token carrying "@e<site>" assigns them to that site. The identity prints as
// "i^0 I".
std::string to_literal(const PauliOperator& p);
PauliOperator parse_literal(std::string_view text, int dim, std::size_t num_sites);

}  // namespace toposim
