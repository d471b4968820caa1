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

#include "toposim/decoder.h"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <boost/math/distributions/binomial.hpp>

namespace toposim {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

int mod4(int v) { return ((v % 4) + 4) % 4; }

/// Exponent k with g * (X^x Z^z on site) = i^k (X^x Z^z on site) * g.
int site_kappa(const PauliOperator& g, std::size_t site, int x, int z) {
  return mod4(g.z(site) * x - g.x(site) * z);
}

/// Generator indices of the fully condensed code, by cell.
struct DsLayout {
  std::vector<std::size_t> a_tilde;
  std::vector<std::size_t> b_tilde;
  std::vector<std::size_t> constraints;
  std::vector<std::size_t> x_edge;  // odd X on this edge flips the constraint
  std::vector<std::size_t> z_edge;  // odd Z on this edge flips the constraint
  std::vector<std::size_t> partner;  // by edge: z-edge sharing a constraint with this x-edge
};

DsLayout make_layout(const StabilizerCode& code) {
  if (code.dim != 4) throw std::invalid_argument("decoder needs a Z_4 double-semion code");
  const auto& lat = code.lattice;
  DsLayout out;
  out.partner.assign(lat.num_edges(), kNone);
  for (std::size_t v = 0; v < lat.num_vertices(); ++v) {
    const auto a = code.find(GeneratorKind::ATildeVertex, v);
    const auto b = code.find(GeneratorKind::BTildePlaquette, v);
    if (!a || !b) throw std::invalid_argument("decoder needs a fully condensed double-semion code");
    out.a_tilde.push_back(*a);
    out.b_tilde.push_back(*b);
  }
  for (std::size_t g = 0; g < code.generators.size(); ++g) {
    const auto kind = code.generators[g].kind;
    if (kind != GeneratorKind::CTildeH && kind != GeneratorKind::CTildeV) continue;
    const auto& op = code.generators[g].op;
    std::size_t xe = kNone;
    std::size_t ze = kNone;
    for (std::size_t s : op.support()) {
      if (op.z(s) == 2 && op.x(s) == 0) xe = s;
      if (op.x(s) == 2 && op.z(s) == 0) ze = s;
    }
    if (xe == kNone || ze == kNone) throw std::invalid_argument("unexpected constraint shape");
    out.constraints.push_back(g);
    out.x_edge.push_back(xe);
    out.z_edge.push_back(ze);
    out.partner[xe] = ze;
  }
  if (out.constraints.size() != lat.num_edges()) {
    throw std::invalid_argument("decoder needs a fully condensed double-semion code");
  }
  return out;
}

struct Candidate {
  std::size_t site;
  int x;
  int z;
};

std::array<Candidate, 4> candidates(const DsLayout& layout, std::size_t c) {
  return {{{layout.x_edge[c], 1, 0}, {layout.x_edge[c], 3, 0}, {layout.z_edge[c], 0, 1}, {layout.z_edge[c], 0, 3}}};
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

class DsDecoder {
 public:
  DsDecoder(const StabilizerCode& code, const SyndromeRecord& syndrome)
      : code_(code), lat_(code.lattice), layout_(make_layout(code)), tracker_(code) {
    tracker_.load(syndrome);
  }

  DecodeReport run() {
    undo_confined();
    move_semions();
    fuse_pairs();
    if (tracker_.energy() != 0) throw std::logic_error("decoder left a residual syndrome");
    report_.recovery = tracker_.frame();
    return std::move(report_);
  }

 private:
  int a_value(std::size_t v) const { return tracker_.value(layout_.a_tilde[v]); }
  bool b_violated(std::size_t p) const { return tracker_.value(layout_.b_tilde[p]) != 0; }
  const PauliOperator& a_op(std::size_t v) const { return code_.generators[layout_.a_tilde[v]].op; }

  // Stage 1: each violated constraint flags an odd X or odd Z on one of two
  // edges. Connected clusters are resolved by minimizing what is left on the
  // vertex and plaquette terms.
  void undo_confined() {
    std::vector<std::size_t> violated;
    for (std::size_t c = 0; c < layout_.constraints.size(); ++c) {
      if (tracker_.value(layout_.constraints[c]) != 0) violated.push_back(c);
    }
    std::vector<std::size_t> parent(violated.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t i = 0; i < violated.size(); ++i) {
      for (std::size_t j = i + 1; j < violated.size(); ++j) {
        const auto ci = violated[i];
        const auto cj = violated[j];
        const bool touch = layout_.x_edge[ci] == layout_.z_edge[cj] || layout_.z_edge[ci] == layout_.x_edge[cj];
        if (touch) parent[find_root(parent, j)] = find_root(parent, i);
      }
    }
    std::vector<std::vector<std::size_t>> clusters;
    std::vector<std::size_t> slot(violated.size(), kNone);
    for (std::size_t i = 0; i < violated.size(); ++i) {
      const std::size_t root = find_root(parent, i);
      if (slot[root] == kNone) {
        slot[root] = clusters.size();
        clusters.emplace_back();
      }
      clusters[slot[root]].push_back(violated[i]);
    }
    for (const auto& cluster : clusters) {
      report_.cluster_sizes.push_back(cluster.size());
      const std::vector<int> choice =
          cluster.size() <= kExactClusterLimit ? exhaustive(cluster) : greedy(cluster);
      const bool exact = cluster.size() <= kExactClusterLimit;
      for (std::size_t k = 0; k < cluster.size(); ++k) {
        const Candidate cand = candidates(layout_, cluster[k])[choice[k]];
        tracker_.apply_site(cand.site, cand.x, cand.z);
        ExcitationSpecies species = cand.x != 0 ? ExcitationSpecies::ConfinedX : ExcitationSpecies::ConfinedZ;
        if (!exact) species = ExcitationSpecies::Opaque;
        const auto& g = code_.generators[layout_.constraints[cluster[k]]];
        report_.excitations.push_back({species, g.kind, g.anchor});
      }
    }
  }

  std::vector<int> exhaustive(const std::vector<std::size_t>& cluster) {
    const std::size_t k = cluster.size();
    std::size_t combos = 1;
    for (std::size_t i = 0; i < k; ++i) combos *= 4;
    std::vector<int> digits(k);
    std::vector<int> best(k, 0);
    std::pair<int, int> best_score{std::numeric_limits<int>::max(), 0};
    for (std::size_t n = 0; n < combos; ++n) {
      std::size_t rest = n;
      for (std::size_t i = 0; i < k; ++i) {
        digits[i] = static_cast<int>(rest % 4);
        rest /= 4;
      }
      std::vector<std::pair<std::size_t, std::pair<int, int>>> applied;
      for (std::size_t i = 0; i < k; ++i) {
        const Candidate cand = candidates(layout_, cluster[i])[digits[i]];
        tracker_.apply_site(cand.site, cand.x, cand.z);
        auto it = std::find_if(applied.begin(), applied.end(), [&](const auto& e) { return e.first == cand.site; });
        if (it == applied.end()) {
          applied.push_back({cand.site, {cand.x, cand.z}});
        } else {
          it->second.first += cand.x;
          it->second.second += cand.z;
        }
      }
      int weight = 0;
      for (const auto& [site, xz] : applied) weight += (mod4(xz.first) | mod4(xz.second)) != 0;
      const std::pair<int, int> score{tracker_.energy(), weight};
      if (score < best_score) {
        best_score = score;
        best = digits;
      }
      for (std::size_t i = 0; i < k; ++i) {
        const Candidate cand = candidates(layout_, cluster[i])[digits[i]];
        tracker_.apply_site(cand.site, -cand.x, -cand.z);
      }
    }
    return best;
  }

  // Leaves the tracker unchanged; the caller applies the returned choice.
  std::vector<int> greedy(const std::vector<std::size_t>& cluster) {
    std::vector<int> choice;
    for (std::size_t c : cluster) {
      int best = 0;
      int best_energy = std::numeric_limits<int>::max();
      const auto cands = candidates(layout_, c);
      for (int i = 0; i < 4; ++i) {
        tracker_.apply_site(cands[i].site, cands[i].x, cands[i].z);
        if (tracker_.energy() < best_energy) {
          best_energy = tracker_.energy();
          best = i;
        }
        tracker_.apply_site(cands[i].site, -cands[i].x, -cands[i].z);
      }
      tracker_.apply_site(cands[best].site, cands[best].x, cands[best].z);
      choice.push_back(best);
    }
    for (std::size_t k = 0; k < cluster.size(); ++k) {
      const Candidate cand = candidates(layout_, cluster[k])[choice[k]];
      tracker_.apply_site(cand.site, -cand.x, -cand.z);
    }
    return choice;
  }

  // Stage 2: a violated plaquette term carries odd phases on the vertex terms
  // at its south-west and north-east corners. Equal phases mark s, opposite
  // phases s-bar. A corner shared by two such plaquettes is split between them.
  void move_semions() {
    const std::size_t np = lat_.num_plaquettes();
    std::vector<int> sw(np, 0);
    std::vector<int> ne(np, 0);
    std::vector<bool> defect(np);
    for (std::size_t p = 0; p < np; ++p) defect[p] = b_violated(p);
    for (std::size_t v = 0; v < lat_.num_vertices(); ++v) {
      const int val = a_value(v);
      const auto around = lat_.vertex_plaquettes(v);
      const std::size_t pa = around[1];  // v is its south-west corner
      const std::size_t pb = around[2];  // v is its north-east corner
      if (defect[pa] && defect[pb]) {
        if (val % 2 != 0) mark_opaque(v);
        sw[pa] = 1;
        ne[pb] = mod4(val - 1);
      } else if (defect[pa]) {
        if (val % 2 == 0) mark_opaque(v);
        sw[pa] = val;
      } else if (defect[pb]) {
        if (val % 2 == 0) mark_opaque(v);
        ne[pb] = val;
      } else if (val % 2 != 0) {
        mark_opaque(v);
      }
    }
    std::vector<std::size_t> semions;
    std::vector<std::size_t> anti;
    for (std::size_t p = 0; p < np; ++p) {
      if (!defect[p]) continue;
      const bool same = sw[p] == ne[p];
      (same ? semions : anti).push_back(p);
      report_.excitations.push_back({same ? ExcitationSpecies::Semion : ExcitationSpecies::AntiSemion,
                                     GeneratorKind::BTildePlaquette, p});
    }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (semions.size() % 2 == 1) {
      // One s and one s-bar must fuse; take the closest such pair.
      std::size_t bi = 0;
      std::size_t bj = 0;
      int bd = std::numeric_limits<int>::max();
      for (std::size_t i = 0; i < semions.size(); ++i) {
        for (std::size_t j = 0; j < anti.size(); ++j) {
          const int d = lat_.cell_distance(semions[i], anti[j]);
          if (d < bd) {
            bd = d;
            bi = i;
            bj = j;
          }
        }
      }
      pairs.emplace_back(semions[bi], anti[bj]);
      semions.erase(semions.begin() + static_cast<std::ptrdiff_t>(bi));
      anti.erase(anti.begin() + static_cast<std::ptrdiff_t>(bj));
    }
    for (const auto* group : {&semions, &anti}) {
      for (auto [i, j] : min_weight_matching(distances(*group))) pairs.emplace_back((*group)[i], (*group)[j]);
    }
    for (auto [p, q] : pairs) carry(p, q, sw[p], ne[p]);
  }

  void carry(std::size_t from, std::size_t to, int moving_sw, int moving_ne) {
    const auto path = shortest_path(lat_, PathGraph::Dual, from, to);
    if (!path) throw std::logic_error("no dual path between defects");
    std::size_t cur = from;
    for (std::size_t e : *path) {
      const auto sides = lat_.edge_plaquettes(e);
      const std::size_t next = sides[0] == cur ? sides[1] : sides[0];
      const std::size_t f = layout_.partner[e];
      const auto cur_corners = lat_.plaquette_vertices(cur);
      const auto next_corners = lat_.plaquette_vertices(next);
      const int ux = site_kappa(a_op(cur_corners[2]), e, 1, 0);
      const int uz = site_kappa(a_op(cur_corners[1]), f, 0, 1);
      if (ux % 2 == 0 || uz % 2 == 0) throw std::logic_error("hop does not reach the defect corners");
      const int alpha = mod4(-moving_sw * ux);
      const int beta = mod4(-moving_ne * uz);
      tracker_.apply_site(e, alpha, 0);
      tracker_.apply_site(f, 0, beta);
      moving_sw = mod4(alpha * site_kappa(a_op(next_corners[2]), e, 1, 0));
      moving_ne = mod4(beta * site_kappa(a_op(next_corners[1]), f, 0, 1));
      cur = next;
    }
  }

  // Stage 3: remaining vertex terms at -1 are ss-bar. They move by single-site
  // Z^2, X^2 or X^2 Z^2 operators, which include diagonal steps, so pairs are
  // matched and fused on that graph rather than on the square lattice.
  void fuse_pairs() {
    std::vector<std::size_t> composites;
    for (std::size_t v = 0; v < lat_.num_vertices(); ++v) {
      const int val = a_value(v);
      if (val == 2) {
        composites.push_back(v);
        report_.excitations.push_back({ExcitationSpecies::SemionPair, GeneratorKind::ATildeVertex, v});
      } else if (val != 0) {
        throw std::logic_error("odd vertex phase left after semion transport");
      }
    }
    if (composites.empty()) return;
    if (composites.size() % 2 != 0) throw std::logic_error("odd number of ss-bar composites");
    build_even_moves();
    std::vector<std::vector<Step>> trees;
    std::vector<std::vector<int>> cost(composites.size(), std::vector<int>(composites.size(), 0));
    for (std::size_t i = 0; i < composites.size(); ++i) {
      trees.push_back(bfs(composites[i]));
      for (std::size_t j = 0; j < composites.size(); ++j) cost[i][j] = trees[i][composites[j]].depth;
    }
    for (auto [i, j] : min_weight_matching(cost)) {
      const auto& tree = trees[i];
      for (std::size_t v = composites[j]; v != composites[i]; v = tree[v].from) {
        const Step& s = tree[v];
        tracker_.apply_site(s.site, s.x, s.z);
      }
    }
  }

  struct Move {
    std::size_t to;
    std::size_t site;
    int x;
    int z;
  };
  struct Step {
    int depth = -1;
    std::size_t from = kNone;
    std::size_t site = kNone;
    int x = 0;
    int z = 0;
  };

  void build_even_moves() {
    even_moves_.assign(lat_.num_vertices(), {});
    const std::array<std::pair<int, int>, 3> ops{{{0, 2}, {2, 0}, {2, 2}}};
    for (std::size_t site = 0; site < lat_.num_edges(); ++site) {
      for (auto [x, z] : ops) {
        std::vector<std::size_t> hit;
        bool clean = true;
        for (std::size_t g : tracker_.generators_at(site)) {
          if (site_kappa(code_.generators[g].op, site, x, z) == 0) continue;
          if (code_.generators[g].kind != GeneratorKind::ATildeVertex) clean = false;
          hit.push_back(code_.generators[g].anchor);
        }
        if (!clean || hit.size() != 2) continue;
        even_moves_[hit[0]].push_back({hit[1], site, x, z});
        even_moves_[hit[1]].push_back({hit[0], site, x, z});
      }
    }
  }

  std::vector<Step> bfs(std::size_t source) const {
    std::vector<Step> tree(lat_.num_vertices());
    tree[source].depth = 0;
    std::vector<std::size_t> frontier{source};
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      const std::size_t v = frontier[head];
      for (const Move& m : even_moves_[v]) {
        if (tree[m.to].depth >= 0) continue;
        tree[m.to] = {tree[v].depth + 1, v, m.site, m.x, m.z};
        frontier.push_back(m.to);
      }
    }
    return tree;
  }

  std::vector<std::vector<int>> distances(const std::vector<std::size_t>& cells) const {
    std::vector<std::vector<int>> d(cells.size(), std::vector<int>(cells.size(), 0));
    for (std::size_t i = 0; i < cells.size(); ++i) {
      for (std::size_t j = 0; j < cells.size(); ++j) d[i][j] = lat_.cell_distance(cells[i], cells[j]);
    }
    return d;
  }

  void mark_opaque(std::size_t v) {
    report_.excitations.push_back({ExcitationSpecies::Opaque, GeneratorKind::ATildeVertex, v});
  }

  const StabilizerCode& code_;
  const TorusLattice& lat_;
  DsLayout layout_;
  SyndromeTracker tracker_;
  DecodeReport report_;
  std::vector<std::vector<Move>> even_moves_;
};

}  // namespace

std::string_view species_name(ExcitationSpecies species) {
  switch (species) {
    case ExcitationSpecies::ConfinedX:
      return "confined-X";
    case ExcitationSpecies::ConfinedZ:
      return "confined-Z";
    case ExcitationSpecies::Semion:
      return "s";
    case ExcitationSpecies::AntiSemion:
      return "s-bar";
    case ExcitationSpecies::SemionPair:
      return "ss-bar";
    case ExcitationSpecies::Opaque:
      return "opaque";
  }
  return "?";
}

std::vector<std::pair<std::size_t, std::size_t>> min_weight_matching(const std::vector<std::vector<int>>& cost) {
  const std::size_t n = cost.size();
  if (n % 2 != 0) throw std::invalid_argument("matching needs an even number of items");
  std::vector<std::pair<std::size_t, std::size_t>> best;
  if (n == 0) return best;
  if (n <= kExactMatchingLimit) {
    std::vector<bool> used(n, false);
    std::vector<std::pair<std::size_t, std::size_t>> current;
    int best_cost = std::numeric_limits<int>::max();
    std::function<void(int)> rec = [&](int acc) {
      if (acc >= best_cost) return;
      std::size_t i = 0;
      while (i < n && used[i]) ++i;
      if (i == n) {
        best_cost = acc;
        best = current;
        return;
      }
      used[i] = true;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (used[j]) continue;
        used[j] = true;
        current.emplace_back(i, j);
        rec(acc + cost[i][j]);
        current.pop_back();
        used[j] = false;
      }
      used[i] = false;
    };
    rec(0);
    return best;
  }
  std::vector<bool> used(n, false);
  for (std::size_t round = 0; round < n / 2; ++round) {
    std::size_t bi = 0;
    std::size_t bj = 0;
    int bc = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!used[j] && cost[i][j] < bc) {
          bc = cost[i][j];
          bi = i;
          bj = j;
        }
      }
    }
    used[bi] = used[bj] = true;
    best.emplace_back(bi, bj);
  }
  return best;
}

DecodeReport decode_report(const StabilizerCode& code, const SyndromeRecord& syndrome) {
  return DsDecoder(code, syndrome).run();
}

PauliOperator decode(const StabilizerCode& code, const SyndromeRecord& syndrome) {
  return decode_report(code, syndrome).recovery;
}

std::vector<Excitation> identify_excitations(const StabilizerCode& code, const SyndromeRecord& syndrome) {
  return decode_report(code, syndrome).excitations;
}

LogicalClass logical_failure(const LogicalStructure& logicals, const PauliOperator& frame,
                             const PauliOperator& recovery) {
  const PauliOperator residual = frame * recovery;
  if (!logicals.commutes_with_stabilizers(residual)) {
    throw std::invalid_argument("recovery does not clear the syndrome");
  }
  return logicals.classify(residual);
}

PauliOperator sample_noise(int dim, std::size_t num_sites, double p, TrialRng& rng) {
  PauliOperator out(dim, num_sites);
  const auto choices = static_cast<std::uint64_t>(dim * dim - 1);
  for (std::size_t s = 0; s < num_sites; ++s) {
    if (!rng.bernoulli(p)) continue;
    const int k = static_cast<int>(rng.below(choices)) + 1;
    out.set_site(s, k / dim, k % dim);
  }
  return out;
}

BenchResult run_decoder_bench(const BenchConfig& config) {
  if (config.p < 0.0 || config.p > 1.0) throw std::invalid_argument("p must lie in [0, 1]");
  const auto start = std::chrono::steady_clock::now();
  const TorusLattice lat(config.size, config.size);
  const StabilizerCode code = condense_ds(build_z4_toric(lat), RegionMask::full(lat, "condensed-ds"));
  const LogicalStructure logicals(code);

  BenchResult result;
  result.config = config;
  result.failed.assign(config.trials, 0);
  std::vector<std::string> classes(config.trials);
  parallel_trials(config.trials, config.threads, [&](std::uint64_t t) {
    TrialRng rng(config.seed, t);
    const PauliOperator frame = sample_noise(code.dim, code.num_sites(), config.p, rng);
    const PauliOperator recovery = decode(code, extract_syndrome(code, frame));
    const LogicalClass cls = logical_failure(logicals, frame, recovery);
    if (!cls.is_identity()) {
      result.failed[t] = 1;
      classes[t] = cls.id();
    }
  });
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    if (!result.failed[t]) continue;
    ++result.failures;
    ++result.failures_by_class[classes[t]];
  }
  result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

SignTest paired_sign_test(const BenchResult& smaller, const BenchResult& larger) {
  if (smaller.failed.size() != larger.failed.size()) throw std::invalid_argument("benches differ in trial count");
  SignTest out;
  for (std::size_t t = 0; t < smaller.failed.size(); ++t) {
    if (larger.failed[t] && !smaller.failed[t]) ++out.worse;
    if (smaller.failed[t] && !larger.failed[t]) ++out.better;
  }
  const std::uint64_t n = out.worse + out.better;
  if (n > 0 && out.worse > 0) {
    const boost::math::binomial_distribution<double> dist(static_cast<double>(n), 0.5);
    out.p_value = boost::math::cdf(boost::math::complement(dist, static_cast<double>(out.worse - 1)));
  }
  return out;
}

std::string bench_csv_header() { return "schema_version,L,p,trials,seed,failures,failures_by_class,wall_seconds"; }

std::string bench_csv_row(const BenchResult& result, bool timing) {
  std::ostringstream out;
  out << kBenchSchemaVersion << ',' << result.config.size << ',' << result.config.p << ',' << result.config.trials
      << ',' << result.config.seed << ',' << result.failures << ',';
  if (result.failures_by_class.empty()) {
    out << "none";
  } else {
    bool first = true;
    for (const auto& [cls, count] : result.failures_by_class) {
      out << (first ? "" : ";") << cls << ':' << count;
      first = false;
    }
  }
  out << ',';
  if (timing) {
    out << result.wall_seconds;
  } else {
    out << "NA";
  }
  return out.str();
}

}  // namespace toposim
