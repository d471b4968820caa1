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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toposim/group.h"
#include "toposim/lattice.h"
#include "toposim/pauli.h"

namespace toposim {

enum class GeneratorKind {
  AVertex,            // A_v
  BPlaquette,         // B_p
  ATildeVertex,       // condensed vertex term A_v * B_{NE(v)}
  BTildePlaquette,    // condensed plaquette term B_p^2
  CTildeH,            // X^2 on h(r,c), Z^2 on v(r,c)
  CTildeV,            // Z^2 on h(r,c), X^2 on v(r-1,c+1)
  CTwist,             // Z on a vertical edge, X on a horizontal edge
  CompatibleProduct,  // local product of base generators surviving a constraint
  Centralizer,        // nonlocal centralizer element, used only as a last resort
};

std::string_view kind_name(GeneratorKind kind);
GeneratorKind parse_kind(std::string_view name);

struct Generator {
  PauliOperator op;
  GeneratorKind kind;
  /// Vertex, plaquette or cell index the generator is attached to.
  std::size_t anchor = 0;

  bool operator==(const Generator&) const = default;
};

struct StabilizerCode {
  TorusLattice lattice;
  int dim = 2;
  std::vector<Generator> generators;
  std::vector<RegionMask> regions;

  std::size_t num_sites() const { return lattice.num_edges(); }
  GeneratorMatrix matrix() const;
  /// Index of the first generator with this kind and anchor.
  std::optional<std::size_t> find(GeneratorKind kind, std::size_t anchor) const;
  const RegionMask* region(std::string_view role) const;

  bool operator==(const StabilizerCode&) const = default;
};

/// A_v: X on all four star edges for N = 2; X^dag on N, E and X on S, W for N = 4.
PauliOperator vertex_operator(const TorusLattice& lattice, int dim, std::size_t v);
/// B_p: Z on all four edges for N = 2; Z^dag on N, W and Z on E, S for N = 4.
PauliOperator plaquette_operator(const TorusLattice& lattice, int dim, std::size_t p);

StabilizerCode build_z2_toric(const TorusLattice& lattice);
StabilizerCode build_z4_toric(const TorusLattice& lattice);

/// Z on v(r,c) and X on h(r,c) of a unit cell. For a horizontal strip the
/// rotated pairing Z on h(r,c), X on v(r,c) is used instead.
PauliOperator twist_constraint(const TorusLattice& lattice, std::size_t cell, Orientation strip);

/// Adds one twist constraint per unit cell of column `offset` (Vertical) or
/// row `offset` (Horizontal) and projects the group onto it. Requires N = 2.
StabilizerCode insert_noncontractible_twist(const StabilizerCode& code, Orientation orientation, int offset);

/// Twists along both handles: column `column` and row `row`. The crossing
/// cell keeps only the vertical constraint; carrying both would leave no
/// logical qubit.
StabilizerCode insert_double_twist(const StabilizerCode& code, int column, int row);

/// Twist constraints on a contractible strip of cells (vertical pairing).
/// Throws std::invalid_argument if the strip wraps a handle.
StabilizerCode insert_finite_twist(const StabilizerCode& code, const RegionMask& strip);

PauliOperator ds_constraint_h(const TorusLattice& lattice, std::size_t cell);
PauliOperator ds_constraint_v(const TorusLattice& lattice, std::size_t cell);
/// Plaquette north-east of a vertex; its flux enters the condensed vertex term.
std::size_t ne_plaquette(const TorusLattice& lattice, std::size_t v);

/// Adds the pair of order-two constraints on every cell of `region` and
/// projects. Inside the region the surviving vertex and plaquette terms are
/// A_v * B_{NE(v)} and B_p^2; boundary terms come from the centralizer.
StabilizerCode condense_ds(const StabilizerCode& code, const RegionMask& region);

/// <A_v B_{NE(v)}, B_p^2, C~_h, C~_v> over the whole torus, written out directly.
GeneratorMatrix explicit_ds_group(const TorusLattice& lattice);

/// Number of generators violated by `error` (nonzero commutation exponent).
int energy(const StabilizerCode& code, const PauliOperator& error);

/// Line-oriented text form; serialize(deserialize(s)) == s.
std::string serialize(const StabilizerCode& code);
StabilizerCode deserialize(std::string_view text);

}  // namespace toposim
