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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

namespace toposim {
namespace {

int wrap(int x, int n) { return ((x % n) + n) % n; }

// Coordinate oracle for incidences, written out independently of the class.
struct Coords {
  int rows, cols;
  std::size_t cell(int r, int c) const { return wrap(r, rows) * cols + wrap(c, cols); }
  std::size_t h(int r, int c) const { return cell(r, c); }
  std::size_t v(int r, int c) const { return rows * cols + cell(r, c); }
};

TEST(TorusLattice, StarAndBoundaryFromCoordinates) {
  for (auto [rows, cols] : {std::pair{2, 2}, {3, 4}, {5, 3}}) {
    const TorusLattice lat(rows, cols);
    const Coords k{rows, cols};
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        const std::size_t i = k.cell(r, c);
        const std::array<std::size_t, 4> star{k.v(r - 1, c), k.h(r, c), k.v(r, c), k.h(r, c - 1)};
        const std::array<std::size_t, 4> face{k.h(r, c), k.v(r, c + 1), k.h(r + 1, c), k.v(r, c)};
        EXPECT_EQ(lat.vertex_edges(i), star);
        EXPECT_EQ(lat.plaquette_edges(i), face);
        const std::array<std::size_t, 4> around{k.cell(r - 1, c - 1), k.cell(r - 1, c), k.cell(r, c - 1), k.cell(r, c)};
        EXPECT_EQ(lat.vertex_plaquettes(i), around);
        const std::array<std::size_t, 4> corners{k.cell(r, c), k.cell(r, c + 1), k.cell(r + 1, c), k.cell(r + 1, c + 1)};
        EXPECT_EQ(lat.plaquette_vertices(i), corners);
        for (int role = 0; role < 4; ++role) {
          EXPECT_EQ(lat.vertex_role(i, star[role]), role);
          EXPECT_EQ(lat.plaquette_role(i, face[role]), role);
        }
      }
    }
  }
}

TEST(TorusLattice, EdgeIncidenceIsInverseOfStars) {
  const TorusLattice lat(3, 4);
  for (std::size_t e = 0; e < lat.num_edges(); ++e) {
    std::set<std::size_t> vs, ps;
    for (std::size_t v = 0; v < lat.num_vertices(); ++v)
      for (auto x : lat.vertex_edges(v)) if (x == e) vs.insert(v);
    for (std::size_t p = 0; p < lat.num_plaquettes(); ++p)
      for (auto x : lat.plaquette_edges(p)) if (x == e) ps.insert(p);
    const auto ev = lat.edge_vertices(e);
    const auto ep = lat.edge_plaquettes(e);
    EXPECT_EQ(vs, (std::set<std::size_t>{ev[0], ev[1]}));
    EXPECT_EQ(ps, (std::set<std::size_t>{ep[0], ep[1]}));
  }
}

TEST(TorusLattice, RejectsDegenerateTorus) {
  EXPECT_THROW(TorusLattice(1, 3), std::invalid_argument);
  EXPECT_THROW(TorusLattice(3, 0), std::invalid_argument);
}

TEST(TorusLattice, CellDistanceIsToroidalManhattan) {
  const TorusLattice lat(5, 4);
  EXPECT_EQ(lat.cell_distance(lat.cell(0, 0), lat.cell(4, 3)), 2);
  EXPECT_EQ(lat.cell_distance(lat.cell(1, 1), lat.cell(3, 3)), 4);
  EXPECT_EQ(lat.cell_distance(lat.cell(2, 2), lat.cell(2, 2)), 0);
}

TEST(HandleCycle, SupportsAreStraightLoops) {
  const TorusLattice lat(3, 4);
  const Coords k{3, 4};
  auto hc = handle_cycle(lat, Orientation::Horizontal, 1);
  EXPECT_EQ(hc, (std::vector<std::size_t>{k.h(1, 0), k.h(1, 1), k.h(1, 2), k.h(1, 3)}));
  auto vc = handle_cycle(lat, Orientation::Vertical, 2, true);
  EXPECT_EQ(vc, (std::vector<std::size_t>{k.h(0, 2), k.h(1, 2), k.h(2, 2)}));
  EXPECT_THROW(handle_cycle(lat, Orientation::Horizontal, 3), std::out_of_range);
}

TEST(ShortestPath, LengthEqualsManhattanDistance) {
  const TorusLattice lat(4, 5);
  for (std::size_t a = 0; a < lat.num_cells(); ++a) {
    for (std::size_t b = 0; b < lat.num_cells(); ++b) {
      for (auto g : {PathGraph::Primal, PathGraph::Dual}) {
        const auto path = shortest_path(lat, g, a, b);
        ASSERT_TRUE(path.has_value());
        EXPECT_EQ(static_cast<int>(path->size()), lat.cell_distance(a, b));
      }
    }
  }
}

TEST(ShortestPath, PrimalPathIsConnected) {
  const TorusLattice lat(4, 4);
  const auto path = shortest_path(lat, PathGraph::Primal, lat.cell(0, 0), lat.cell(2, 3));
  ASSERT_TRUE(path);
  // Boundary of the path: endpoints appear an odd number of times.
  std::vector<int> deg(lat.num_vertices(), 0);
  for (auto e : *path)
    for (auto v : lat.edge_vertices(e)) ++deg[v];
  for (std::size_t v = 0; v < deg.size(); ++v) {
    const bool end = v == lat.cell(0, 0) || v == lat.cell(2, 3);
    EXPECT_EQ(deg[v] % 2, end ? 1 : 0);
  }
}

TEST(ShortestPath, PenaltiesDetourAndBlock) {
  const TorusLattice lat(3, 3);
  std::vector<double> pen(lat.num_edges(), kBlocked);
  EXPECT_FALSE(shortest_path(lat, PathGraph::Primal, 0, 1, pen).has_value());
  pen.assign(lat.num_edges(), 0.0);
  pen[lat.h_edge(0, 0)] = kBlocked;
  const auto p = shortest_path(lat, PathGraph::Primal, lat.vertex(0, 0), lat.vertex(0, 1), pen);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->size(), 2u);  // around the torus the other way
  EXPECT_THROW(shortest_path(lat, PathGraph::Primal, 0, 99), std::out_of_range);
}

TEST(RegionMask, BlockMembership) {
  const TorusLattice lat(6, 6);
  const auto r = RegionMask::block(lat, 2, 2, 2, 2, "ds");
  EXPECT_EQ(r.count(), 4u);
  EXPECT_FALSE(r.wraps_handle(lat));
  // Interior edge shared by two block plaquettes, and a boundary edge.
  EXPECT_TRUE(r.contains_edge(lat, lat.v_edge(2, 3)));
  EXPECT_FALSE(r.contains_edge(lat, lat.v_edge(2, 2)));
  // Only vertex (3,3) has all four neighbouring plaquettes inside.
  std::size_t inside = 0;
  for (std::size_t v = 0; v < lat.num_vertices(); ++v) inside += r.contains_vertex(lat, v);
  EXPECT_EQ(inside, 1u);
  EXPECT_TRUE(r.contains_vertex(lat, lat.vertex(3, 3)));
  EXPECT_EQ(r.boundary_edges(lat).size(), 8u);
  const auto c = r.complement("toric");
  EXPECT_EQ(c.count(), 32u);
  EXPECT_EQ(c.role, "toric");
}

TEST(RegionMask, WrappingStripsAreDetected) {
  const TorusLattice lat(4, 4);
  EXPECT_TRUE(RegionMask::block(lat, 0, 1, 4, 1, "s").wraps_handle(lat));
  EXPECT_TRUE(RegionMask::block(lat, 1, 0, 1, 4, "s").wraps_handle(lat));
  EXPECT_FALSE(RegionMask::block(lat, 3, 3, 2, 2, "s").wraps_handle(lat));
  EXPECT_TRUE(RegionMask::full(lat, "f").is_full());
  EXPECT_TRUE(RegionMask::empty(lat, "e").is_empty());
}

TEST(RegionMask, BoundaryZoneGrowsWithWidth) {
  const TorusLattice lat(8, 8);
  const auto r = RegionMask::block(lat, 3, 3, 2, 2, "ds");
  const auto z0 = r.boundary_zone(lat, 0);
  const auto z1 = r.boundary_zone(lat, 1);
  EXPECT_EQ(z0, r.boundary_edges(lat));
  EXPECT_TRUE(std::is_sorted(z1.begin(), z1.end()));
  EXPECT_GT(z1.size(), z0.size());
  EXPECT_TRUE(std::includes(z1.begin(), z1.end(), z0.begin(), z0.end()));
}

}  // namespace
}  // namespace toposim
