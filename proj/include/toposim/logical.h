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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toposim/code.h"
#include "toposim/group.h"
#include "toposim/syndrome.h"

namespace toposim {

// ---------------------------------------------------------------------------
// Anyons

/// e^a m^b with a, b in Z_4 (Z_2 for qubit codes).
struct AnyonLabel {
  int a = 0;
  int b = 0;

  AnyonLabel fuse(AnyonLabel other, int dim = 4) const { return {(a + other.a) % dim, (b + other.b) % dim}; }
  AnyonLabel conjugate(int dim = 4) const { return {(dim - a) % dim, (dim - b) % dim}; }
  bool operator==(const AnyonLabel&) const = default;
};

std::string to_string(AnyonLabel label);

/// Label modulo the condensed boson e^2 m^2. Eight classes: vacuum, s, s-bar
/// and ss-bar are deconfined (a + b even); the four odd classes are confined.
struct ConjugacyClass {
  AnyonLabel representative;
  bool deconfined = false;
  std::string_view name;

  bool operator==(const ConjugacyClass& o) const { return representative == o.representative; }
};

ConjugacyClass conjugacy_class(AnyonLabel label);

/// Exponent of i picked up by a full braid of u around v:
/// (4/N)(a_u b_v + b_u a_v) mod 4.
int braiding_exponent(AnyonLabel u, AnyonLabel v, int dim = 4);

/// Label carried by cell (r, c): the charge on vertex (r, c) is read from A_v
/// and the flux on plaquette (r, c) from B_p. A charge reached through the W
/// or S edge of its vertex by Z reads +1, likewise a flux reached through the
/// W or S edge of its plaquette by X. Throws std::invalid_argument if the code
/// no longer has plain A_v / B_p terms at that cell.
AnyonLabel label_from_syndrome(const StabilizerCode& code, const SyndromeRecord& syndrome, std::size_t cell);

/// Same convention, evaluated against the bare toric terms of the lattice.
AnyonLabel toric_label(const TorusLattice& lattice, int dim, const PauliOperator& frame, std::size_t cell);

/// Operator moving a dyon with the given label from `cell` to its neighbour in
/// `direction`: Z power on the connecting lattice edge for the charge and X
/// power on the crossed dual edge for the flux.
PauliOperator anyon_hop(const TorusLattice& lattice, int dim, AnyonLabel label, std::size_t cell, Role direction);

/// Cell reached from `cell` by one step in `direction`.
std::size_t neighbour_cell(const TorusLattice& lattice, std::size_t cell, Role direction);

// ---------------------------------------------------------------------------
// Logical operators

int logical_dimension_log2(const StabilizerCode& code);
std::uint64_t logical_dimension(const StabilizerCode& code);

/// The two toric logical qubits: `h` lives on horizontal edges, `v` on vertical ones.
enum class Handle { H, V };
enum class Species { X, Z };

/// X^power along the co-cycle or Z^power along the cycle of the handle's qubit:
///   h: X on h(0..rows-1, offset), Z on h(offset, 0..cols-1)
///   v: X on v(offset, 0..cols-1), Z on v(0..rows-1, offset)
PauliOperator handle_logical(const StabilizerCode& code, Handle handle, Species species, int power, int offset = 0);

/// Logical class of an operator commuting with the stabilizers: its
/// commutation exponents against a fixed generating set of logical operators.
/// The all-zero signature is the stabilizer (identity) class.
struct LogicalClass {
  std::vector<int> signature;
  bool is_identity() const;
  std::string id() const;
  bool operator==(const LogicalClass&) const = default;
};

/// Stabilizer group, normalizer and logical generators of a code.
class LogicalStructure {
 public:
  explicit LogicalStructure(const StabilizerCode& code);

  const StabilizerCode& code() const { return code_; }
  const StabilizerGroup& stabilizers() const { return stabilizers_; }
  /// Representatives generating the normalizer modulo the stabilizers.
  const std::vector<PauliOperator>& logical_generators() const { return logical_generators_; }
  /// Order of each logical generator modulo the previous ones and the stabilizers.
  const std::vector<int>& logical_orders() const { return logical_orders_; }

  bool commutes_with_stabilizers(const PauliOperator& p) const;
  /// Throws std::invalid_argument if p does not commute with the stabilizers.
  LogicalClass classify(const PauliOperator& p) const;
  bool same_class(const PauliOperator& p, const PauliOperator& q) const;
  /// One representative per logical class, the identity first.
  std::vector<PauliOperator> class_representatives() const;

 private:
  StabilizerCode code_;  // owned copy, so temporaries are safe
  StabilizerGroup stabilizers_;
  std::vector<PauliOperator> logical_generators_;
  std::vector<int> logical_orders_;
};

/// Logical representatives of the twisted qubit, following
/// [Z_t] = [X_h] = [Z_v], [X_t] = [Z_h X_v] (both strings on one row), and
/// [Y_t] = [X_t Z_t]. For a horizontal twist the roles of h and v swap.
struct TwistedLogicals {
  PauliOperator z_t;
  PauliOperator x_t;
  PauliOperator y_t;
};
TwistedLogicals twisted_logicals(const StabilizerCode& twisted, Orientation twist_orientation);

// ---------------------------------------------------------------------------
// Distance

struct DistanceResult {
  /// True when the node budget ran out before an answer was certain.
  bool overflow = false;
  int distance = 0;
  std::uint64_t nodes = 0;
  PauliOperator witness;
};

inline constexpr std::uint64_t kDefaultDistanceBudget = 400'000'000;

/// Minimum weight of a nontrivial logical operator, or of an operator in the
/// class of `class_representative` when given. Exact; uses coset enumeration
/// over the stabilizer group when it fits the budget and weight-ordered
/// enumeration otherwise.
DistanceResult code_distance(const LogicalStructure& logicals,
                             const std::optional<PauliOperator>& class_representative = std::nullopt,
                             std::uint64_t budget = kDefaultDistanceBudget);

/// Weight-ordered enumeration of all Pauli operators, lowest weight first.
DistanceResult distance_by_weight(const LogicalStructure& logicals,
                                  const std::optional<PauliOperator>& class_representative, std::uint64_t budget);

/// Minimum weight over the cosets L * S of the stabilizer group S.
DistanceResult distance_by_cosets(const LogicalStructure& logicals,
                                  const std::optional<PauliOperator>& class_representative, std::uint64_t budget);

struct ClassDistance {
  LogicalClass cls;
  PauliOperator representative;
  DistanceResult result;
};

/// Distance of every nontrivial logical class. Uses per-class coset
/// enumeration when it fits the budget and one shared weight-ordered sweep
/// otherwise; classes not reached within the budget report overflow.
std::vector<ClassDistance> class_resolved_distances(const LogicalStructure& logicals,
                                                    std::uint64_t budget = kDefaultDistanceBudget);

}  // namespace toposim
