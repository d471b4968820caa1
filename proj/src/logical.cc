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

#include "toposim/logical.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "toposim/howell.h"

namespace toposim {

namespace {

int mod(int v, int m) { return ((v % m) + m) % m; }

/// Label component read from a commutation exponent: -k / (4/N) mod N.
int label_component(int kappa, int dim) { return mod(-kappa / (4 / dim), dim); }

}  // namespace

std::string to_string(AnyonLabel label) {
  std::ostringstream out;
  out << "e" << label.a << "m" << label.b;
  return out.str();
}

ConjugacyClass conjugacy_class(AnyonLabel label) {
  const AnyonLabel l{mod(label.a, 4), mod(label.b, 4)};
  const AnyonLabel shifted{(l.a + 2) % 4, (l.b + 2) % 4};
  const AnyonLabel rep = (shifted.a < l.a || (shifted.a == l.a && shifted.b < l.b)) ? shifted : l;
  const bool deconfined = (rep.a + rep.b) % 2 == 0;
  std::string_view name;
  if (rep == AnyonLabel{0, 0}) {
    name = "vacuum";
  } else if (rep == AnyonLabel{1, 1}) {
    name = "s";
  } else if (rep == AnyonLabel{1, 3}) {
    name = "s-bar";
  } else if (rep == AnyonLabel{0, 2}) {
    name = "ss-bar";
  } else if (rep == AnyonLabel{1, 0}) {
    name = "confined-1";
  } else if (rep == AnyonLabel{1, 2}) {
    name = "confined-2";
  } else if (rep == AnyonLabel{0, 1}) {
    name = "confined-3";
  } else {
    name = "confined-4";
  }
  return {rep, deconfined, name};
}

int braiding_exponent(AnyonLabel u, AnyonLabel v, int dim) {
  return mod((4 / dim) * (u.a * v.b + u.b * v.a), 4);
}

AnyonLabel label_from_syndrome(const StabilizerCode& code, const SyndromeRecord& syndrome, std::size_t cell) {
  const auto a = code.find(GeneratorKind::AVertex, cell);
  const auto b = code.find(GeneratorKind::BPlaquette, cell);
  if (!a || !b) {
    throw std::invalid_argument("cell " + std::to_string(cell) + " has no plain vertex/plaquette terms; unresolvable");
  }
  if (syndrome.values.size() != code.generators.size()) throw std::invalid_argument("syndrome size mismatch");
  return {label_component(syndrome.values[*a], code.dim), label_component(syndrome.values[*b], code.dim)};
}

AnyonLabel toric_label(const TorusLattice& lattice, int dim, const PauliOperator& frame, std::size_t cell) {
  return {label_component(commutation_exponent(vertex_operator(lattice, dim, cell), frame), dim),
          label_component(commutation_exponent(plaquette_operator(lattice, dim, cell), frame), dim)};
}

std::size_t neighbour_cell(const TorusLattice& lattice, std::size_t cell, Role direction) {
  const int r = lattice.row_of(cell);
  const int c = lattice.col_of(cell);
  switch (direction) {
    case North:
      return lattice.cell(r - 1, c);
    case East:
      return lattice.cell(r, c + 1);
    case South:
      return lattice.cell(r + 1, c);
    case West:
      return lattice.cell(r, c - 1);
  }
  throw std::invalid_argument("bad direction");
}

PauliOperator anyon_hop(const TorusLattice& lattice, int dim, AnyonLabel label, std::size_t cell, Role direction) {
  const int r = lattice.row_of(cell);
  const int c = lattice.col_of(cell);
  std::size_t charge_edge = 0;
  std::size_t flux_edge = 0;
  switch (direction) {
    case East:
      charge_edge = lattice.h_edge(r, c);
      flux_edge = lattice.v_edge(r, c + 1);
      break;
    case West:
      charge_edge = lattice.h_edge(r, c - 1);
      flux_edge = lattice.v_edge(r, c);
      break;
    case North:
      charge_edge = lattice.v_edge(r - 1, c);
      flux_edge = lattice.h_edge(r, c);
      break;
    case South:
      charge_edge = lattice.v_edge(r, c);
      flux_edge = lattice.h_edge(r + 1, c);
      break;
  }
  const std::size_t dest = neighbour_cell(lattice, cell, direction);
  const std::size_t n = lattice.num_edges();
  const int charge_unit = label_component(
      commutation_exponent(vertex_operator(lattice, dim, dest), PauliOperator::single_site(dim, n, charge_edge, 0, 1)),
      dim);
  const int flux_unit = label_component(
      commutation_exponent(plaquette_operator(lattice, dim, dest), PauliOperator::single_site(dim, n, flux_edge, 1, 0)),
      dim);
  // Units are +-1, which are their own inverses.
  PauliOperator hop(dim, n);
  hop.multiply_site(charge_edge, 0, label.a * charge_unit);
  hop.multiply_site(flux_edge, label.b * flux_unit, 0);
  return hop;
}

int logical_dimension_log2(const StabilizerCode& code) {
  const int bits_per_site = code.dim == 4 ? 2 : 1;
  return static_cast<int>(code.num_sites()) * bits_per_site - StabilizerGroup(code.matrix()).order_log2();
}

std::uint64_t logical_dimension(const StabilizerCode& code) {
  const int bits = logical_dimension_log2(code);
  if (bits >= 64) throw std::overflow_error("logical dimension exceeds 2^63");
  return std::uint64_t{1} << bits;
}

PauliOperator handle_logical(const StabilizerCode& code, Handle handle, Species species, int power, int offset) {
  const auto& lat = code.lattice;
  std::vector<std::size_t> support;
  if (handle == Handle::H) {
    support = species == Species::X ? handle_cycle(lat, Orientation::Vertical, offset, true)
                                    : handle_cycle(lat, Orientation::Horizontal, offset, false);
  } else {
    support = species == Species::X ? handle_cycle(lat, Orientation::Horizontal, offset, true)
                                    : handle_cycle(lat, Orientation::Vertical, offset, false);
  }
  PauliOperator op(code.dim, code.num_sites());
  for (std::size_t e : support) {
    if (species == Species::X) {
      op.set_x(e, power);
    } else {
      op.set_z(e, power);
    }
  }
  return op;
}

bool LogicalClass::is_identity() const {
  return std::all_of(signature.begin(), signature.end(), [](int v) { return v == 0; });
}

std::string LogicalClass::id() const {
  std::string s;
  for (int v : signature) s += static_cast<char>('0' + v);
  return s.empty() ? "-" : s;
}

LogicalStructure::LogicalStructure(const StabilizerCode& code)
    : code_(code), stabilizers_(code.matrix()) {
  const int dim = code.dim;
  const std::size_t n = code.num_sites();
  const auto& rows = stabilizers_.howell().rows;
  // Normalizer: vectors (x | z) with sum_j b_g(j) x_j - a_g(j) z_j = 0 for all g.
  std::vector<std::vector<int>> coeffs(2 * n, std::vector<int>(rows.size(), 0));
  for (std::size_t g = 0; g < rows.size(); ++g) {
    for (std::size_t j = 0; j < n; ++j) {
      coeffs[j][g] = rows[g].z(j);
      coeffs[n + j][g] = mod(-static_cast<int>(rows[g].x(j)), dim);
    }
  }
  const auto kernel = left_kernel(coeffs, rows.size(), dim);
  GeneratorMatrix normalizer(dim, n);
  for (const auto& k : kernel) {
    PauliOperator p(dim, n);
    for (std::size_t j = 0; j < n; ++j) p.set_site(j, k[j], k[n + j]);
    if (!p.is_identity_up_to_phase()) normalizer.add(std::move(p));
  }
  normalizer = howell_canonicalize(normalizer);

  GeneratorMatrix running = stabilizers_.howell();
  int order = stabilizers_.order_log2();
  for (const auto& p : normalizer.rows) {
    GeneratorMatrix next = running;
    next.add(p);
    const int next_order = StabilizerGroup(next, false).order_log2();
    if (next_order > order) {
      logical_generators_.push_back(p);
      logical_orders_.push_back(1 << (next_order - order));
      running = howell_canonicalize(next);
      order = next_order;
    }
  }
}

bool LogicalStructure::commutes_with_stabilizers(const PauliOperator& p) const {
  for (const auto& g : stabilizers_.howell().rows) {
    if (!commutes(g, p)) return false;
  }
  return true;
}

LogicalClass LogicalStructure::classify(const PauliOperator& p) const {
  if (!commutes_with_stabilizers(p)) throw std::invalid_argument("operator does not commute with the stabilizers");
  LogicalClass out;
  out.signature.reserve(logical_generators_.size());
  for (const auto& l : logical_generators_) out.signature.push_back(commutation_exponent(p, l));
  return out;
}

bool LogicalStructure::same_class(const PauliOperator& p, const PauliOperator& q) const {
  return classify(p) == classify(q);
}

std::vector<PauliOperator> LogicalStructure::class_representatives() const {
  std::vector<PauliOperator> reps{PauliOperator::identity(code_.dim, code_.num_sites())};
  for (std::size_t i = 0; i < logical_generators_.size(); ++i) {
    std::vector<PauliOperator> next;
    for (int k = 0; k < logical_orders_[i]; ++k) {
      const PauliOperator factor = power(logical_generators_[i], k);
      for (const auto& r : reps) next.push_back(r * factor);
    }
    reps = std::move(next);
  }
  return reps;
}

TwistedLogicals twisted_logicals(const StabilizerCode& twisted, Orientation twist_orientation) {
  TwistedLogicals out;
  if (twist_orientation == Orientation::Vertical) {
    out.z_t = handle_logical(twisted, Handle::H, Species::X, 1);
    out.x_t = handle_logical(twisted, Handle::H, Species::Z, 1) * handle_logical(twisted, Handle::V, Species::X, 1);
  } else {
    out.z_t = handle_logical(twisted, Handle::V, Species::X, 1);
    out.x_t = handle_logical(twisted, Handle::V, Species::Z, 1) * handle_logical(twisted, Handle::H, Species::X, 1);
  }
  out.y_t = out.x_t * out.z_t;
  return out;
}

// ---------------------------------------------------------------------------
// Distance

namespace {

struct BudgetExceeded {};

}  // namespace

DistanceResult distance_by_weight(const LogicalStructure& logicals,
                                  const std::optional<PauliOperator>& class_representative, std::uint64_t budget) {
  const StabilizerCode& code = logicals.code();
  const int dim = code.dim;
  const std::size_t n = code.num_sites();
  std::optional<LogicalClass> target;
  if (class_representative) target = logicals.classify(*class_representative);

  SyndromeTracker tracker(code);
  std::vector<std::pair<int, int>> local_ops;
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      if (a != 0 || b != 0) local_ops.emplace_back(a, b);
    }
  }

  DistanceResult result;
  std::vector<std::size_t> chosen_sites;
  std::vector<std::pair<int, int>> chosen_ops;

  auto build = [&]() {
    PauliOperator p(dim, n);
    for (std::size_t i = 0; i < chosen_sites.size(); ++i) {
      p.set_site(chosen_sites[i], chosen_ops[i].first, chosen_ops[i].second);
    }
    return p;
  };

  std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t start, std::size_t remaining) -> bool {
    for (std::size_t site = start; site + remaining <= n; ++site) {
      for (auto [a, b] : local_ops) {
        if (++result.nodes > budget) throw BudgetExceeded{};
        tracker.apply_site(site, a, b);
        chosen_sites.push_back(site);
        chosen_ops.emplace_back(a, b);
        bool found = false;
        if (remaining == 1) {
          if (tracker.energy() == 0) {
            const PauliOperator p = build();
            const LogicalClass cls = logicals.classify(p);
            found = target ? cls == *target : !cls.is_identity();
            if (found) result.witness = p;
          }
        } else {
          found = search(site + 1, remaining - 1);
        }
        chosen_sites.pop_back();
        chosen_ops.pop_back();
        tracker.apply_site(site, -a, -b);
        if (found) return true;
      }
    }
    return false;
  };

  try {
    for (std::size_t w = 1; w <= n; ++w) {
      if (search(0, w)) {
        result.distance = static_cast<int>(w);
        return result;
      }
    }
  } catch (const BudgetExceeded&) {
    result.overflow = true;
    return result;
  }
  // Only reachable when no logical of the requested class exists.
  result.overflow = true;
  return result;
}

DistanceResult distance_by_cosets(const LogicalStructure& logicals,
                                  const std::optional<PauliOperator>& class_representative, std::uint64_t budget) {
  const StabilizerCode& code = logicals.code();
  const int dim = code.dim;
  const std::size_t n = code.num_sites();
  const auto& rows = logicals.stabilizers().howell().rows;
  const auto& orders = logicals.stabilizers().row_orders();

  std::vector<PauliOperator> reps;
  if (class_representative) {
    logicals.classify(*class_representative);
    reps.push_back(*class_representative);
  } else {
    reps = logicals.class_representatives();
    reps.erase(reps.begin());
  }

  DistanceResult result;
  const int order_bits = logicals.stabilizers().order_log2();
  if (order_bits >= 62 || reps.empty() ||
      static_cast<double>(reps.size()) * std::ldexp(1.0, order_bits) > static_cast<double>(budget)) {
    result.overflow = true;
    return result;
  }

  // Sparse symplectic rows for incremental weight updates.
  struct SparseRow {
    std::vector<std::size_t> sites;
    std::vector<int> xs;
    std::vector<int> zs;
  };
  std::vector<SparseRow> sparse;
  for (const auto& r : rows) {
    SparseRow s;
    for (std::size_t j : r.support()) {
      s.sites.push_back(j);
      s.xs.push_back(r.x(j));
      s.zs.push_back(r.z(j));
    }
    sparse.push_back(std::move(s));
  }

  std::vector<int> x(n);
  std::vector<int> z(n);
  int weight = 0;
  int best = std::numeric_limits<int>::max();
  std::vector<int> best_x;
  std::vector<int> best_z;

  auto add_row = [&](const SparseRow& row, int times) {
    for (std::size_t k = 0; k < row.sites.size(); ++k) {
      const std::size_t j = row.sites[k];
      const bool before = (x[j] | z[j]) != 0;
      x[j] = mod(x[j] + times * row.xs[k], dim);
      z[j] = mod(z[j] + times * row.zs[k], dim);
      const bool after = (x[j] | z[j]) != 0;
      weight += static_cast<int>(after) - static_cast<int>(before);
    }
  };

  std::function<void(std::size_t)> walk = [&](std::size_t j) {
    if (j == sparse.size()) {
      ++result.nodes;
      if (weight < best) {
        best = weight;
        best_x = x;
        best_z = z;
      }
      return;
    }
    for (int k = 0; k < orders[j]; ++k) {
      walk(j + 1);
      if (k + 1 < orders[j]) add_row(sparse[j], 1);
    }
    add_row(sparse[j], -(orders[j] - 1));
  };

  for (const auto& rep : reps) {
    weight = 0;
    for (std::size_t j = 0; j < n; ++j) {
      x[j] = rep.x(j);
      z[j] = rep.z(j);
      weight += (x[j] | z[j]) != 0;
    }
    walk(0);
  }
  result.distance = best;
  result.witness = PauliOperator(dim, n);
  for (std::size_t j = 0; j < n; ++j) result.witness.set_site(j, best_x[j], best_z[j]);
  return result;
}

std::vector<ClassDistance> class_resolved_distances(const LogicalStructure& logicals, std::uint64_t budget) {
  std::vector<ClassDistance> out;
  for (const auto& rep : logicals.class_representatives()) {
    LogicalClass cls = logicals.classify(rep);
    if (!cls.is_identity()) out.push_back({std::move(cls), rep, {}});
  }
  if (out.empty()) return out;
  const int order_bits = logicals.stabilizers().order_log2();
  const bool cosets_fit = order_bits < 62 && static_cast<double>(out.size()) * std::ldexp(1.0, order_bits) <=
                                                 static_cast<double>(budget);
  if (cosets_fit) {
    for (auto& entry : out) entry.result = distance_by_cosets(logicals, entry.representative, budget);
    return out;
  }

  // One sweep by increasing weight; each class keeps its first hit.
  const StabilizerCode& code = logicals.code();
  const int dim = code.dim;
  const std::size_t n = code.num_sites();
  SyndromeTracker tracker(code);
  std::vector<std::pair<int, int>> local_ops;
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      if (a != 0 || b != 0) local_ops.emplace_back(a, b);
    }
  }
  std::size_t unresolved = out.size();
  std::uint64_t nodes = 0;
  std::vector<std::size_t> sites;
  std::vector<std::pair<int, int>> ops;
  std::function<void(std::size_t, std::size_t, int)> sweep = [&](std::size_t start, std::size_t remaining, int w) {
    for (std::size_t site = start; site + remaining <= n && unresolved > 0; ++site) {
      for (auto [a, b] : local_ops) {
        if (++nodes > budget) throw BudgetExceeded{};
        tracker.apply_site(site, a, b);
        sites.push_back(site);
        ops.emplace_back(a, b);
        if (remaining > 1) {
          sweep(site + 1, remaining - 1, w);
        } else if (tracker.energy() == 0) {
          PauliOperator p(dim, n);
          for (std::size_t i = 0; i < sites.size(); ++i) p.set_site(sites[i], ops[i].first, ops[i].second);
          const LogicalClass cls = logicals.classify(p);
          for (auto& entry : out) {
            if (entry.result.distance == 0 && entry.cls == cls) {
              entry.result.distance = w;
              entry.result.witness = p;
              --unresolved;
            }
          }
        }
        sites.pop_back();
        ops.pop_back();
        tracker.apply_site(site, -a, -b);
        if (unresolved == 0) return;
      }
    }
  };
  try {
    for (std::size_t w = 1; w <= n && unresolved > 0; ++w) sweep(0, w, static_cast<int>(w));
  } catch (const BudgetExceeded&) {
  }
  for (auto& entry : out) {
    entry.result.nodes = nodes;
    entry.result.overflow = entry.result.distance == 0;
  }
  return out;
}

DistanceResult code_distance(const LogicalStructure& logicals,
                             const std::optional<PauliOperator>& class_representative, std::uint64_t budget) {
  DistanceResult by_cosets = distance_by_cosets(logicals, class_representative, budget);
  if (!by_cosets.overflow) return by_cosets;
  return distance_by_weight(logicals, class_representative, budget);
}

}  // namespace toposim
