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

#include "toposim/code.h"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace toposim {

namespace {

constexpr std::array<std::pair<GeneratorKind, std::string_view>, 9> kKindNames = {{
    {GeneratorKind::AVertex, "A_vertex"},
    {GeneratorKind::BPlaquette, "B_plaquette"},
    {GeneratorKind::ATildeVertex, "At_vertex"},
    {GeneratorKind::BTildePlaquette, "Bt_plaquette"},
    {GeneratorKind::CTildeH, "Ct_h"},
    {GeneratorKind::CTildeV, "Ct_v"},
    {GeneratorKind::CTwist, "C_twist"},
    {GeneratorKind::CompatibleProduct, "product"},
    {GeneratorKind::Centralizer, "centralizer"},
}};

bool commutes_with_all(const PauliOperator& p, const std::vector<Generator>& constraints) {
  return std::all_of(constraints.begin(), constraints.end(),
                     [&](const Generator& c) { return commutes(p, c.op); });
}

bool shares_site(const PauliOperator& a, const PauliOperator& b) {
  for (std::size_t j = 0; j < a.num_sites(); ++j) {
    if ((a.x(j) | a.z(j)) != 0 && (b.x(j) | b.z(j)) != 0) return true;
  }
  return false;
}

std::size_t first_site(const PauliOperator& p) {
  const auto s = p.support();
  return s.empty() ? 0 : s.front();
}

/// Replaces the base group by <constraints> joined with its commuting part,
/// keeping a local generating set: constraints, then surviving base
/// generators, then the caller's preferred products, then pairwise products
/// of overlapping base generators, and only if still short, Howell rows of
/// the projected group.
StabilizerCode project(const StabilizerCode& base, std::vector<Generator> constraints,
                       const std::vector<Generator>& preferred) {
  GeneratorMatrix constraint_matrix(base.dim, base.num_sites());
  for (const auto& c : constraints) constraint_matrix.add(c.op);
  const GeneratorMatrix base_matrix = base.matrix();
  const GeneratorMatrix target = extend_with_constraints(base_matrix, constraint_matrix);
  const int target_order = StabilizerGroup(target).order_log2();

  StabilizerCode out = base;
  out.generators = std::move(constraints);
  std::vector<const Generator*> broken;
  for (const auto& g : base.generators) {
    if (commutes_with_all(g.op, out.generators)) {
      out.generators.push_back(g);
    } else {
      broken.push_back(&g);
    }
  }
  for (const auto& g : preferred) {
    if (commutes_with_all(g.op, out.generators)) out.generators.push_back(g);
  }

  GeneratorMatrix current = howell_canonicalize(out.matrix());
  auto order = [](const GeneratorMatrix& m) { return StabilizerGroup(m).order_log2(); };
  int current_order = order(current);

  auto try_add = [&](const PauliOperator& op, GeneratorKind kind, std::size_t anchor) {
    if (current_order >= target_order) return;
    if (op.is_identity_up_to_phase()) return;
    if (StabilizerGroup(current).membership(op) != Membership::NonMember) return;
    out.generators.push_back({op, kind, anchor});
    current.add(op);
    current = howell_canonicalize(current);
    current_order = order(current);
  };

  if (current_order < target_order) {
    for (const Generator* g : broken) {
      for (int j = 1; j < base.dim; ++j) {
        const PauliOperator gj = power(g->op, j);
        if (j > 1 && commutes_with_all(gj, out.generators)) try_add(gj, GeneratorKind::CompatibleProduct, g->anchor);
        for (const Generator* h : broken) {
          if (h <= g || !shares_site(g->op, h->op)) continue;
          for (int k = 1; k < base.dim; ++k) {
            PauliOperator prod = gj * power(h->op, k);
            if (commutes_with_all(prod, out.generators)) {
              try_add(prod, GeneratorKind::CompatibleProduct, g->anchor);
            }
          }
        }
      }
    }
  }
  for (const auto& row : target.rows) {
    try_add(row, GeneratorKind::Centralizer, first_site(row));
  }
  if (!same_group(out.matrix(), target)) {
    throw std::logic_error("local generating set does not reproduce the projected group");
  }
  return out;
}

}  // namespace

std::string_view kind_name(GeneratorKind kind) {
  for (auto [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  throw std::invalid_argument("unknown generator kind");
}

GeneratorKind parse_kind(std::string_view name) {
  for (auto [k, n] : kKindNames) {
    if (n == name) return k;
  }
  throw std::invalid_argument("unknown generator kind '" + std::string(name) + "'");
}

GeneratorMatrix StabilizerCode::matrix() const {
  GeneratorMatrix m(dim, num_sites());
  m.rows.reserve(generators.size());
  for (const auto& g : generators) m.rows.push_back(g.op);
  return m;
}

std::optional<std::size_t> StabilizerCode::find(GeneratorKind kind, std::size_t anchor) const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].kind == kind && generators[i].anchor == anchor) return i;
  }
  return std::nullopt;
}

const RegionMask* StabilizerCode::region(std::string_view role) const {
  for (const auto& r : regions) {
    if (r.role == role) return &r;
  }
  return nullptr;
}

PauliOperator vertex_operator(const TorusLattice& lattice, int dim, std::size_t v) {
  PauliOperator op(dim, lattice.num_edges());
  const auto edges = lattice.vertex_edges(v);
  for (int role = 0; role < 4; ++role) {
    const bool dagger = dim == 4 && (role == North || role == East);
    op.set_x(edges[role], dagger ? -1 : 1);
  }
  return op;
}

PauliOperator plaquette_operator(const TorusLattice& lattice, int dim, std::size_t p) {
  PauliOperator op(dim, lattice.num_edges());
  const auto edges = lattice.plaquette_edges(p);
  for (int role = 0; role < 4; ++role) {
    const bool dagger = dim == 4 && (role == North || role == West);
    op.set_z(edges[role], dagger ? -1 : 1);
  }
  return op;
}

namespace {

StabilizerCode build_toric(const TorusLattice& lattice, int dim) {
  StabilizerCode code;
  code.lattice = lattice;
  code.dim = dim;
  for (std::size_t v = 0; v < lattice.num_vertices(); ++v) {
    code.generators.push_back({vertex_operator(lattice, dim, v), GeneratorKind::AVertex, v});
  }
  for (std::size_t p = 0; p < lattice.num_plaquettes(); ++p) {
    code.generators.push_back({plaquette_operator(lattice, dim, p), GeneratorKind::BPlaquette, p});
  }
  return code;
}

void merge_region(StabilizerCode& code, const RegionMask& region) {
  for (auto& r : code.regions) {
    if (r.role == region.role) {
      for (std::size_t k = 0; k < r.cells.size(); ++k) r.cells[k] = r.cells[k] || region.cells[k];
      return;
    }
  }
  code.regions.push_back(region);
}

StabilizerCode add_twist_cells(const StabilizerCode& code, const RegionMask& strip, Orientation orientation) {
  if (code.dim != 2) throw std::invalid_argument("twists are defined on the Z_2 toric code");
  std::vector<Generator> constraints;
  for (std::size_t cell = 0; cell < strip.cells.size(); ++cell) {
    if (!strip.cells[cell]) continue;
    constraints.push_back({twist_constraint(code.lattice, cell, orientation), GeneratorKind::CTwist, cell});
  }
  if (constraints.empty()) return code;
  // Constraints already present are kept once.
  std::vector<Generator> fresh;
  for (auto& c : constraints) {
    if (!code.find(GeneratorKind::CTwist, c.anchor)) fresh.push_back(std::move(c));
  }
  StabilizerCode base = code;
  std::vector<Generator> existing;
  for (auto it = base.generators.begin(); it != base.generators.end();) {
    if (it->kind == GeneratorKind::CTwist) {
      existing.push_back(*it);
      it = base.generators.erase(it);
    } else {
      ++it;
    }
  }
  if (fresh.empty()) return code;
  std::vector<Generator> all = existing;
  all.insert(all.end(), fresh.begin(), fresh.end());
  std::sort(all.begin(), all.end(), [](const Generator& a, const Generator& b) { return a.anchor < b.anchor; });
  StabilizerCode out = project(base, std::move(all), {});
  merge_region(out, strip);
  return out;
}

}  // namespace

StabilizerCode build_z2_toric(const TorusLattice& lattice) { return build_toric(lattice, 2); }
StabilizerCode build_z4_toric(const TorusLattice& lattice) { return build_toric(lattice, 4); }

PauliOperator twist_constraint(const TorusLattice& lattice, std::size_t cell, Orientation strip) {
  const int r = lattice.row_of(cell);
  const int c = lattice.col_of(cell);
  PauliOperator op(2, lattice.num_edges());
  if (strip == Orientation::Vertical) {
    op.set_z(lattice.v_edge(r, c), 1);
    op.set_x(lattice.h_edge(r, c), 1);
  } else {
    op.set_z(lattice.h_edge(r, c), 1);
    op.set_x(lattice.v_edge(r, c), 1);
  }
  return op;
}

StabilizerCode insert_noncontractible_twist(const StabilizerCode& code, Orientation orientation, int offset) {
  const auto& lat = code.lattice;
  RegionMask strip = orientation == Orientation::Vertical ? RegionMask::block(lat, 0, offset, lat.rows(), 1, "twist")
                                                          : RegionMask::block(lat, offset, 0, 1, lat.cols(), "twist");
  return add_twist_cells(code, strip, orientation);
}

StabilizerCode insert_double_twist(const StabilizerCode& code, int column, int row) {
  return insert_noncontractible_twist(insert_noncontractible_twist(code, Orientation::Vertical, column),
                                      Orientation::Horizontal, row);
}

StabilizerCode insert_finite_twist(const StabilizerCode& code, const RegionMask& strip) {
  if (strip.is_empty()) return code;
  if (strip.wraps_handle(code.lattice)) {
    throw std::invalid_argument("finite twist strip must be contractible");
  }
  RegionMask named = strip;
  named.role = "twist";
  return add_twist_cells(code, named, Orientation::Vertical);
}

PauliOperator ds_constraint_h(const TorusLattice& lattice, std::size_t cell) {
  const int r = lattice.row_of(cell);
  const int c = lattice.col_of(cell);
  PauliOperator op(4, lattice.num_edges());
  op.set_x(lattice.h_edge(r, c), 2);
  op.set_z(lattice.v_edge(r, c), 2);
  return op;
}

PauliOperator ds_constraint_v(const TorusLattice& lattice, std::size_t cell) {
  const int r = lattice.row_of(cell);
  const int c = lattice.col_of(cell);
  PauliOperator op(4, lattice.num_edges());
  op.set_z(lattice.h_edge(r, c), 2);
  op.set_x(lattice.v_edge(r - 1, c + 1), 2);
  return op;
}

std::size_t ne_plaquette(const TorusLattice& lattice, std::size_t v) { return lattice.vertex_plaquettes(v)[1]; }

StabilizerCode condense_ds(const StabilizerCode& code, const RegionMask& region) {
  if (code.dim != 4) throw std::invalid_argument("condensation acts on the Z_4 toric code");
  if (region.is_empty()) return code;
  const auto& lat = code.lattice;
  std::vector<Generator> constraints;
  for (std::size_t cell = 0; cell < lat.num_cells(); ++cell) {
    if (!region.cells[cell]) continue;
    constraints.push_back({ds_constraint_h(lat, cell), GeneratorKind::CTildeH, cell});
    constraints.push_back({ds_constraint_v(lat, cell), GeneratorKind::CTildeV, cell});
  }
  std::vector<Generator> preferred;
  for (std::size_t v = 0; v < lat.num_vertices(); ++v) {
    auto a = code.find(GeneratorKind::AVertex, v);
    auto b = code.find(GeneratorKind::BPlaquette, ne_plaquette(lat, v));
    if (a && b) {
      preferred.push_back(
          {code.generators[*a].op * code.generators[*b].op, GeneratorKind::ATildeVertex, v});
    }
  }
  for (std::size_t p = 0; p < lat.num_plaquettes(); ++p) {
    if (auto b = code.find(GeneratorKind::BPlaquette, p)) {
      preferred.push_back({power(code.generators[*b].op, 2), GeneratorKind::BTildePlaquette, p});
    }
  }
  // Survivors of the base group that are redundant with the condensed terms
  // are dropped from `preferred` by project(); keep only terms whose base
  // generator is broken.
  std::vector<Generator> filtered;
  for (auto& g : preferred) {
    const GeneratorKind base_kind =
        g.kind == GeneratorKind::ATildeVertex ? GeneratorKind::AVertex : GeneratorKind::BPlaquette;
    const auto idx = code.find(base_kind, g.anchor);
    bool broken = false;
    for (const auto& c : constraints) broken = broken || !commutes(code.generators[*idx].op, c.op);
    if (broken) filtered.push_back(std::move(g));
  }
  StabilizerCode out = project(code, std::move(constraints), filtered);
  RegionMask named = region;
  named.role = "condensed-ds";
  merge_region(out, named);
  return out;
}

GeneratorMatrix explicit_ds_group(const TorusLattice& lattice) {
  GeneratorMatrix m(4, lattice.num_edges());
  for (std::size_t v = 0; v < lattice.num_vertices(); ++v) {
    m.add(vertex_operator(lattice, 4, v) * plaquette_operator(lattice, 4, ne_plaquette(lattice, v)));
  }
  for (std::size_t p = 0; p < lattice.num_plaquettes(); ++p) m.add(power(plaquette_operator(lattice, 4, p), 2));
  for (std::size_t cell = 0; cell < lattice.num_cells(); ++cell) {
    m.add(ds_constraint_h(lattice, cell));
    m.add(ds_constraint_v(lattice, cell));
  }
  return m;
}

int energy(const StabilizerCode& code, const PauliOperator& error) {
  int count = 0;
  for (const auto& g : code.generators) count += commutation_exponent(g.op, error) != 0;
  return count;
}

std::string serialize(const StabilizerCode& code) {
  std::ostringstream out;
  out << "toposim-code 1\n";
  out << "lattice " << code.lattice.rows() << ' ' << code.lattice.cols() << '\n';
  out << "dim " << code.dim << '\n';
  out << "regions " << code.regions.size() << '\n';
  for (const auto& r : code.regions) {
    out << "region " << r.role << ' ';
    bool first = true;
    for (std::size_t k = 0; k < r.cells.size(); ++k) {
      if (!r.cells[k]) continue;
      out << (first ? "" : ",") << k;
      first = false;
    }
    if (first) out << '-';
    out << '\n';
  }
  out << "generators " << code.generators.size() << '\n';
  for (const auto& g : code.generators) {
    out << kind_name(g.kind) << ' ' << g.anchor << ' ' << to_literal(g.op) << '\n';
  }
  return out.str();
}

namespace {

[[noreturn]] void bad_code(const std::string& why) { throw std::invalid_argument("bad code description: " + why); }

std::string expect_line(std::istringstream& in, std::string_view keyword) {
  std::string line;
  if (!std::getline(in, line)) bad_code("missing '" + std::string(keyword) + "'");
  if (!line.starts_with(std::string(keyword) + " ")) bad_code("expected '" + std::string(keyword) + "'");
  return line.substr(keyword.size() + 1);
}

}  // namespace

StabilizerCode deserialize(std::string_view text) {
  std::istringstream in{std::string(text)};
  if (expect_line(in, "toposim-code") != "1") bad_code("unsupported version");
  StabilizerCode code;
  {
    std::istringstream dims(expect_line(in, "lattice"));
    int rows = 0;
    int cols = 0;
    if (!(dims >> rows >> cols)) bad_code("lattice dims");
    code.lattice = TorusLattice(rows, cols);
  }
  code.dim = std::stoi(expect_line(in, "dim"));
  if (code.dim != 2 && code.dim != 4) bad_code("dim");
  const int num_regions = std::stoi(expect_line(in, "regions"));
  for (int k = 0; k < num_regions; ++k) {
    std::istringstream fields(expect_line(in, "region"));
    std::string role;
    std::string cells;
    fields >> role >> cells;
    RegionMask mask = RegionMask::empty(code.lattice, role);
    if (cells != "-") {
      std::istringstream list(cells);
      std::string item;
      while (std::getline(list, item, ',')) {
        const std::size_t cell = std::stoul(item);
        if (cell >= mask.cells.size()) bad_code("region cell out of range");
        mask.cells[cell] = true;
      }
    }
    code.regions.push_back(std::move(mask));
  }
  const int num_generators = std::stoi(expect_line(in, "generators"));
  for (int k = 0; k < num_generators; ++k) {
    std::string line;
    if (!std::getline(in, line)) bad_code("truncated generator list");
    const auto s1 = line.find(' ');
    const auto s2 = line.find(' ', s1 + 1);
    if (s1 == std::string::npos || s2 == std::string::npos) bad_code("generator line");
    Generator g{parse_literal(std::string_view(line).substr(s2 + 1), code.dim, code.num_sites()),
                parse_kind(std::string_view(line).substr(0, s1)), std::stoul(line.substr(s1 + 1, s2 - s1 - 1))};
    code.generators.push_back(std::move(g));
  }
  return code;
}

}  // namespace toposim
