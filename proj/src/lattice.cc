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

#include "toposim/lattice.h"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>

namespace toposim {

TorusLattice::TorusLattice(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 2 || cols < 2) {
    throw std::invalid_argument("torus must have at least 2 rows and 2 columns");
  }
}

std::size_t TorusLattice::cell(int r, int c) const {
  return static_cast<std::size_t>(wrap_row(r)) * cols_ + wrap_col(c);
}

std::array<std::size_t, 4> TorusLattice::vertex_edges(std::size_t v) const {
  const int r = row_of(v);
  const int c = col_of(v);
  return {v_edge(r - 1, c), h_edge(r, c), v_edge(r, c), h_edge(r, c - 1)};
}

std::array<std::size_t, 4> TorusLattice::plaquette_edges(std::size_t p) const {
  const int r = row_of(p);
  const int c = col_of(p);
  return {h_edge(r, c), v_edge(r, c + 1), h_edge(r + 1, c), v_edge(r, c)};
}

std::array<std::size_t, 2> TorusLattice::edge_vertices(std::size_t e) const {
  const std::size_t k = edge_cell(e);
  const int r = row_of(k);
  const int c = col_of(k);
  if (is_horizontal(e)) return {vertex(r, c), vertex(r, c + 1)};
  return {vertex(r, c), vertex(r + 1, c)};
}

std::array<std::size_t, 2> TorusLattice::edge_plaquettes(std::size_t e) const {
  const std::size_t k = edge_cell(e);
  const int r = row_of(k);
  const int c = col_of(k);
  if (is_horizontal(e)) return {plaquette(r - 1, c), plaquette(r, c)};
  return {plaquette(r, c - 1), plaquette(r, c)};
}

std::array<std::size_t, 4> TorusLattice::vertex_plaquettes(std::size_t v) const {
  const int r = row_of(v);
  const int c = col_of(v);
  return {plaquette(r - 1, c - 1), plaquette(r - 1, c), plaquette(r, c - 1), plaquette(r, c)};
}

std::array<std::size_t, 4> TorusLattice::plaquette_vertices(std::size_t p) const {
  const int r = row_of(p);
  const int c = col_of(p);
  return {vertex(r, c), vertex(r, c + 1), vertex(r + 1, c), vertex(r + 1, c + 1)};
}

int TorusLattice::vertex_role(std::size_t v, std::size_t edge) const {
  const auto edges = vertex_edges(v);
  for (int k = 0; k < 4; ++k) {
    if (edges[k] == edge) return k;
  }
  return -1;
}

int TorusLattice::plaquette_role(std::size_t p, std::size_t edge) const {
  const auto edges = plaquette_edges(p);
  for (int k = 0; k < 4; ++k) {
    if (edges[k] == edge) return k;
  }
  return -1;
}

int TorusLattice::cell_distance(std::size_t a, std::size_t b) const {
  const int dr = std::abs(row_of(a) - row_of(b));
  const int dc = std::abs(col_of(a) - col_of(b));
  return std::min(dr, rows_ - dr) + std::min(dc, cols_ - dc);
}

std::vector<std::size_t> handle_cycle(const TorusLattice& lattice, Orientation orientation, int offset,
                                      bool cocycle) {
  const bool horizontal = orientation == Orientation::Horizontal;
  const int range = horizontal ? lattice.rows() : lattice.cols();
  if (offset < 0 || offset >= range) throw std::out_of_range("handle offset out of range");
  std::vector<std::size_t> out;
  if (horizontal) {
    for (int c = 0; c < lattice.cols(); ++c) {
      out.push_back(cocycle ? lattice.v_edge(offset, c) : lattice.h_edge(offset, c));
    }
  } else {
    for (int r = 0; r < lattice.rows(); ++r) {
      out.push_back(cocycle ? lattice.h_edge(r, offset) : lattice.v_edge(r, offset));
    }
  }
  return out;
}

std::optional<std::vector<std::size_t>> shortest_path(const TorusLattice& lattice, PathGraph graph, std::size_t from,
                                                      std::size_t to, const std::vector<double>& penalty) {
  const std::size_t n = lattice.num_cells();
  if (from >= n || to >= n) throw std::out_of_range("path endpoint out of range");
  if (!penalty.empty() && penalty.size() != lattice.num_edges()) {
    throw std::invalid_argument("penalty vector must have one entry per edge");
  }
  if (from == to) return std::vector<std::size_t>{};

  auto neighbours = [&](std::size_t node) {
    return graph == PathGraph::Primal ? lattice.vertex_edges(node) : lattice.plaquette_edges(node);
  };
  auto across = [&](std::size_t node, std::size_t edge) {
    const auto ends = graph == PathGraph::Primal ? lattice.edge_vertices(edge) : lattice.edge_plaquettes(edge);
    return ends[0] == node ? ends[1] : ends[0];
  };

  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(n, inf);
  std::vector<std::size_t> prev_edge(n, lattice.num_edges());
  using Item = std::tuple<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[from] = 0;
  queue.emplace(0.0, from);
  while (!queue.empty()) {
    auto [d, node] = queue.top();
    queue.pop();
    if (d > dist[node]) continue;
    if (node == to) break;
    auto edges = neighbours(node);
    std::sort(edges.begin(), edges.end());
    for (std::size_t e : edges) {
      const double extra = penalty.empty() ? 0.0 : penalty[e];
      if (std::isinf(extra)) continue;
      const std::size_t next = across(node, e);
      const double nd = d + 1.0 + extra;
      if (nd < dist[next]) {
        dist[next] = nd;
        prev_edge[next] = e;
        queue.emplace(nd, next);
      }
    }
  }
  if (std::isinf(dist[to])) return std::nullopt;
  std::vector<std::size_t> path;
  for (std::size_t node = to; node != from;) {
    const std::size_t e = prev_edge[node];
    path.push_back(e);
    node = across(node, e);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

RegionMask RegionMask::empty(const TorusLattice& lattice, std::string role) {
  return {std::move(role), std::vector<bool>(lattice.num_cells(), false)};
}

RegionMask RegionMask::full(const TorusLattice& lattice, std::string role) {
  return {std::move(role), std::vector<bool>(lattice.num_cells(), true)};
}

RegionMask RegionMask::block(const TorusLattice& lattice, int r0, int c0, int height, int width, std::string role) {
  RegionMask mask = empty(lattice, std::move(role));
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) mask.cells[lattice.cell(r0 + r, c0 + c)] = true;
  }
  return mask;
}

bool RegionMask::contains_edge(const TorusLattice& lattice, std::size_t e) const {
  const auto ps = lattice.edge_plaquettes(e);
  return cells[ps[0]] && cells[ps[1]];
}

bool RegionMask::contains_vertex(const TorusLattice& lattice, std::size_t v) const {
  const auto ps = lattice.vertex_plaquettes(v);
  return std::all_of(ps.begin(), ps.end(), [&](std::size_t p) { return cells[p]; });
}

std::size_t RegionMask::count() const { return static_cast<std::size_t>(std::count(cells.begin(), cells.end(), true)); }

RegionMask RegionMask::complement(std::string new_role) const {
  RegionMask out{std::move(new_role), cells};
  out.cells.flip();
  return out;
}

bool RegionMask::wraps_handle(const TorusLattice& lattice) const {
  bool free_row = false;
  for (int r = 0; r < lattice.rows() && !free_row; ++r) {
    bool any = false;
    for (int c = 0; c < lattice.cols(); ++c) any = any || cells[lattice.cell(r, c)];
    free_row = !any;
  }
  bool free_col = false;
  for (int c = 0; c < lattice.cols() && !free_col; ++c) {
    bool any = false;
    for (int r = 0; r < lattice.rows(); ++r) any = any || cells[lattice.cell(r, c)];
    free_col = !any;
  }
  return !(free_row && free_col);
}

std::vector<std::size_t> RegionMask::boundary_edges(const TorusLattice& lattice) const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < lattice.num_edges(); ++e) {
    const auto ps = lattice.edge_plaquettes(e);
    if (cells[ps[0]] != cells[ps[1]]) out.push_back(e);
  }
  return out;
}

std::vector<std::size_t> RegionMask::boundary_zone(const TorusLattice& lattice, int width) const {
  std::set<std::size_t> zone;
  for (std::size_t e : boundary_edges(lattice)) zone.insert(e);
  for (int step = 0; step < width; ++step) {
    std::set<std::size_t> grown = zone;
    for (std::size_t e : zone) {
      for (std::size_t v : lattice.edge_vertices(e)) {
        for (std::size_t f : lattice.vertex_edges(v)) grown.insert(f);
      }
    }
    zone = std::move(grown);
  }
  return {zone.begin(), zone.end()};
}

}  // namespace toposim
