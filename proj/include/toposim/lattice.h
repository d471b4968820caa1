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

#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace toposim {

enum class Orientation { Horizontal, Vertical };

/// Incident-edge roles of a vertex star or plaquette boundary.
enum Role : int { North = 0, East = 1, South = 2, West = 3 };

/// Periodic square lattice with `rows` x `cols` unit cells.
///
/// Vertex (r, c) and plaquette (r, c) share index r * cols + c; plaquette (r, c)
/// has vertex (r, c) as its north-west corner, and rows grow southward.
/// Edge indexing is row-major with horizontal edges first:
///   h(r, c) = r * cols + c               joins vertex (r, c) to (r, c + 1)
///   v(r, c) = rows * cols + r * cols + c joins vertex (r, c) to (r + 1, c)
/// Unit cell (r, c) owns h(r, c) and v(r, c).
class TorusLattice {
 public:
  TorusLattice() = default;
  /// Throws std::invalid_argument for rows or cols below 2.
  TorusLattice(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t num_cells() const { return static_cast<std::size_t>(rows_) * cols_; }
  std::size_t num_vertices() const { return num_cells(); }
  std::size_t num_plaquettes() const { return num_cells(); }
  std::size_t num_edges() const { return 2 * num_cells(); }

  std::size_t cell(int r, int c) const;
  std::size_t vertex(int r, int c) const { return cell(r, c); }
  std::size_t plaquette(int r, int c) const { return cell(r, c); }
  std::size_t h_edge(int r, int c) const { return cell(r, c); }
  std::size_t v_edge(int r, int c) const { return num_cells() + cell(r, c); }

  int row_of(std::size_t cell_index) const { return static_cast<int>(cell_index) / cols_; }
  int col_of(std::size_t cell_index) const { return static_cast<int>(cell_index) % cols_; }

  bool is_horizontal(std::size_t edge) const { return edge < num_cells(); }
  std::size_t edge_cell(std::size_t edge) const { return is_horizontal(edge) ? edge : edge - num_cells(); }

  /// Edges of the vertex star in role order N, E, S, W.
  std::array<std::size_t, 4> vertex_edges(std::size_t v) const;
  /// Edges of the plaquette boundary in role order N, E, S, W.
  std::array<std::size_t, 4> plaquette_edges(std::size_t p) const;
  std::array<std::size_t, 2> edge_vertices(std::size_t e) const;
  std::array<std::size_t, 2> edge_plaquettes(std::size_t e) const;
  /// Plaquettes around a vertex: NW, NE, SW, SE.
  std::array<std::size_t, 4> vertex_plaquettes(std::size_t v) const;
  /// Corners of a plaquette: NW, NE, SW, SE.
  std::array<std::size_t, 4> plaquette_vertices(std::size_t p) const;

  /// Role of `edge` in the star of `v` (or -1 if not incident).
  int vertex_role(std::size_t v, std::size_t edge) const;
  int plaquette_role(std::size_t p, std::size_t edge) const;

  /// Manhattan distance on the torus between cells (vertices or plaquettes).
  int cell_distance(std::size_t a, std::size_t b) const;

  bool operator==(const TorusLattice&) const = default;

 private:
  int wrap_row(int r) const { return ((r % rows_) + rows_) % rows_; }
  int wrap_col(int c) const { return ((c % cols_) + cols_) % cols_; }

  int rows_ = 0;
  int cols_ = 0;
};

/// Minimal non-contractible loop. A cycle runs along lattice edges (support of
/// a Z string moving charges); a co-cycle crosses edges on the dual lattice
/// (support of an X string moving fluxes).
///   cycle,    Horizontal, offset r: h(r, 0..cols-1)
///   cycle,    Vertical,   offset c: v(0..rows-1, c)
///   co-cycle, Horizontal, offset r: v(r, 0..cols-1)
///   co-cycle, Vertical,   offset c: h(0..rows-1, c)
std::vector<std::size_t> handle_cycle(const TorusLattice& lattice, Orientation orientation, int offset,
                                      bool cocycle = false);

enum class PathGraph { Primal, Dual };

inline constexpr double kBlocked = std::numeric_limits<double>::infinity();

/// Minimal-weight edge path between two vertices (Primal) or two plaquettes
/// (Dual). Each traversed edge costs 1 + penalty[edge]; an infinite penalty
/// blocks the edge. An empty penalty vector means no penalties. Ties resolve
/// toward lower edge indices. Returns nullopt when `to` is unreachable.
std::optional<std::vector<std::size_t>> shortest_path(const TorusLattice& lattice, PathGraph graph, std::size_t from,
                                                      std::size_t to, const std::vector<double>& penalty = {});

/// Region of unit cells. Plaquette p belongs iff its cell does; an edge belongs
/// iff both adjacent plaquettes do; a vertex belongs iff all four surrounding
/// plaquettes do.
struct RegionMask {
  std::string role;
  std::vector<bool> cells;

  static RegionMask empty(const TorusLattice& lattice, std::string role);
  static RegionMask full(const TorusLattice& lattice, std::string role);
  /// Block of cells with top-left (r0, c0), wrapping periodically.
  static RegionMask block(const TorusLattice& lattice, int r0, int c0, int height, int width, std::string role);

  bool contains_cell(std::size_t cell) const { return cells[cell]; }
  bool contains_plaquette(std::size_t p) const { return cells[p]; }
  bool contains_edge(const TorusLattice& lattice, std::size_t e) const;
  bool contains_vertex(const TorusLattice& lattice, std::size_t v) const;
  std::size_t count() const;
  bool is_empty() const { return count() == 0; }
  bool is_full() const { return count() == cells.size(); }
  RegionMask complement(std::string new_role) const;

  /// True unless some full row and some full column avoid the region.
  bool wraps_handle(const TorusLattice& lattice) const;
  /// Edges with exactly one adjacent plaquette inside the region.
  std::vector<std::size_t> boundary_edges(const TorusLattice& lattice) const;
  /// Edges within `width` vertex-steps of a boundary edge (width 0 gives the
  /// boundary itself), sorted.
  std::vector<std::size_t> boundary_zone(const TorusLattice& lattice, int width = 1) const;

  bool operator==(const RegionMask&) const = default;
};

}  // namespace toposim
