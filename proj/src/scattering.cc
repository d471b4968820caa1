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

#include "toposim/scattering.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

#include "toposim/rng.h"
#include "toposim/syndrome.h"

namespace toposim {

namespace {

int mod(int v, int m) { return ((v % m) + m) % m; }

AnyonLabel read_label(const SyndromeTracker& tracker, const ScatterSetup& setup) {
  // Same convention as label_from_syndrome: component = -k mod 4.
  return {mod(-tracker.value(setup.a_home), 4), mod(-tracker.value(setup.b_home), 4)};
}

Role opposite(Role r) { return static_cast<Role>((static_cast<int>(r) + 2) % 4); }

}  // namespace

std::string_view outcome_name(ScatterOutcome outcome) {
  return outcome == ScatterOutcome::Reflect ? "reflect" : "transmit";
}

ScatterOutcome classify_scattering(AnyonLabel label) {
  return conjugacy_class(label).deconfined ? ScatterOutcome::Transmit : ScatterOutcome::Reflect;
}

StabilizerCode build_hybrid(const TorusLattice& lattice, const RegionMask& condensed) {
  if (condensed.cells.size() != lattice.num_cells()) throw std::invalid_argument("region does not fit the lattice");
  if (!condensed.is_full() && condensed.wraps_handle(lattice)) {
    throw std::invalid_argument("condensed region wraps a handle");
  }
  return condense_ds(build_z4_toric(lattice), condensed);
}

StabilizerCode build_island(const TorusLattice& lattice, const RegionMask& island) {
  if (island.cells.size() != lattice.num_cells()) throw std::invalid_argument("island does not fit the lattice");
  if (island.is_empty()) throw std::invalid_argument("island is empty");
  if (island.wraps_handle(lattice)) throw std::invalid_argument("island wraps a handle");
  return condense_ds(build_z4_toric(lattice), island.complement("condensed-ds"));
}

std::vector<int> transport(const StabilizerCode& code, AnyonLabel label, std::size_t start,
                           const std::vector<Role>& path) {
  SyndromeTracker tracker(code);
  std::vector<int> energies{tracker.energy()};
  std::size_t cur = start;
  for (Role step : path) {
    tracker.apply(anyon_hop(code.lattice, code.dim, label, cur, step));
    cur = neighbour_cell(code.lattice, cur, step);
    energies.push_back(tracker.energy());
  }
  return energies;
}

LifetimeConfig island_preset() {
  LifetimeConfig c;
  c.rows = 7;
  c.cols = 7;
  c.block_row = 2;
  c.block_col = 2;
  c.block_height = 3;
  c.block_width = 3;
  c.island = true;
  return c;
}

ScatterSetup prepare_scatter(const LifetimeConfig& config) {
  if (config.p < 0.0 || config.p > 1.0) throw std::invalid_argument("p must lie in [0, 1]");
  if (config.zone_width < 0) throw std::invalid_argument("zone width must be non-negative");
  if (config.block_height < 1 || config.block_width < 1) throw std::invalid_argument("block must be non-empty");
  const TorusLattice lat(config.rows, config.cols);
  const RegionMask block =
      RegionMask::block(lat, config.block_row, config.block_col, config.block_height, config.block_width, "block");
  ScatterSetup s;
  if (config.island) {
    s.code = build_island(lat, block);
    s.condensed = block.complement("condensed-ds");
    // Particle on the east edge of the island, facing the bulk.
    s.home = lat.cell(config.block_row + config.block_height / 2, config.block_col + config.block_width - 1);
  } else {
    s.code = build_hybrid(lat, block);
    s.condensed = block;
    s.condensed.role = "condensed-ds";
    // Particle just west of the condensed block, facing it.
    s.home = lat.cell(config.block_row + config.block_height / 2, config.block_col - 1);
  }
  s.direction = East;
  s.partner = neighbour_cell(lat, s.home, opposite(s.direction));
  if (s.condensed.contains_cell(s.home) || !s.condensed.contains_cell(neighbour_cell(lat, s.home, s.direction))) {
    throw std::invalid_argument("home cell must border the condensed region");
  }
  const auto a = s.code.find(GeneratorKind::AVertex, s.home);
  const auto b = s.code.find(GeneratorKind::BPlaquette, s.home);
  if (!a || !b) throw std::invalid_argument("home cell has no plain vertex/plaquette terms; unresolvable");
  s.a_home = *a;
  s.b_home = *b;
  if (config.penetration < 1) throw std::invalid_argument("penetration must be positive");
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      std::vector<PauliOperator> steps;
      PauliOperator total(4, lat.num_edges());
      std::size_t cur = s.home;
      for (int k = 0; k < config.penetration; ++k) {
        steps.push_back(anyon_hop(lat, 4, {a, b}, cur, s.direction));
        total *= steps.back();
        cur = neighbour_cell(lat, cur, s.direction);
      }
      s.bounce_steps.push_back(std::move(steps));
      s.retreat.push_back(adjoint(total));
    }
  }
  s.zone = s.condensed.boundary_zone(lat, config.zone_width);
  if (s.zone.empty()) throw std::invalid_argument("empty boundary zone");
  return s;
}

ClassChangeCount class_change_probability(const ScatterSetup& setup, double p) {
  ClassChangeCount out;
  const auto& a_op = setup.code.generators[setup.a_home].op;
  const auto& b_op = setup.code.generators[setup.b_home].op;
  for (std::size_t e : setup.zone) {
    for (int k = 1; k < 16; ++k) {
      const PauliOperator err = PauliOperator::single_site(4, setup.code.num_sites(), e, k / 4, k % 4);
      const AnyonLabel delta{mod(-commutation_exponent(a_op, err), 4), mod(-commutation_exponent(b_op, err), 4)};
      ++out.total;
      if (conjugacy_class(delta).representative != AnyonLabel{0, 0}) ++out.changing;
    }
  }
  out.q = p * static_cast<double>(out.changing) / static_cast<double>(out.total);
  return out;
}

namespace {

struct TrialOutcome {
  std::uint64_t lifetime = 0;  // 0 = censored
  std::uint64_t bounces = 0;
  std::uint64_t reflections = 0;
};

/// One trial. Each round the particle probes the condensed region, counts as
/// reflected if the last probe step raised the energy, and retreats; then, with probability p, a random zone error strikes.
TrialOutcome run_trial(const ScatterSetup& setup, const LifetimeConfig& config, std::uint64_t trial,
                       std::vector<TraceEntry>* trace) {
  const auto& lat = setup.code.lattice;
  SyndromeTracker tracker(setup.code);
  TrialRng rng(config.seed, trial);
  tracker.apply(anyon_hop(lat, 4, config.label, setup.partner, setup.direction));
  const ConjugacyClass initial = conjugacy_class(config.label);
  TrialOutcome out;
  for (std::uint64_t round = 1; round <= config.rounds; ++round) {
    const AnyonLabel label = read_label(tracker, setup);
    const auto index = static_cast<std::size_t>(4 * label.a + label.b);
    int last = tracker.energy();
    bool reflected = false;
    for (const auto& step : setup.bounce_steps[index]) {
      last = tracker.energy();
      tracker.apply(step);
      reflected = tracker.energy() > last;
    }
    tracker.apply(setup.retreat[index]);
    ++out.bounces;
    out.reflections += reflected;

    const bool poisoned = rng.bernoulli(config.p);
    if (poisoned) {
      const std::size_t edge = setup.zone[rng.below(setup.zone.size())];
      const int k = static_cast<int>(rng.below(15)) + 1;
      tracker.apply_site(edge, k / 4, k % 4);
    }
    const AnyonLabel now = read_label(tracker, setup);
    const ConjugacyClass cls = conjugacy_class(now);
    if (trace) {
      trace->push_back({round, setup.home, now, std::string(cls.name), tracker.energy(), reflected, poisoned});
    }
    if (cls.representative != initial.representative) {
      out.lifetime = round;
      return out;
    }
  }
  return out;
}

void goodness_of_fit(LifetimeResult& r) {
  const double q = r.q;
  const auto n = static_cast<double>(r.lifetimes.size());
  if (q <= 0.0 || q >= 1.0 || r.lifetimes.empty()) {
    r.dof = 0;
    r.chi_square = 0.0;
    r.gof_p_value = 1.0;
    return;
  }
  const double log_keep = std::log1p(-q);
  auto survival = [&](double t) { return std::exp(t * log_keep); };
  // Roughly equiprobable bins [lo, hi]; the last one is open and holds the
  // censored trials.
  constexpr int kBins = 20;
  std::vector<std::uint64_t> upper;
  for (int k = 1; k < kBins; ++k) {
    const auto hi = static_cast<std::uint64_t>(std::ceil(std::log(1.0 - static_cast<double>(k) / kBins) / log_keep));
    if (hi >= r.config.rounds) break;
    if (hi >= 1 && (upper.empty() || hi > upper.back())) upper.push_back(hi);
  }
  std::vector<double> expected;
  std::vector<double> observed(upper.size() + 1, 0.0);
  std::uint64_t lo = 1;
  for (std::uint64_t hi : upper) {
    expected.push_back(n * (survival(static_cast<double>(lo - 1)) - survival(static_cast<double>(hi))));
    lo = hi + 1;
  }
  expected.push_back(n * survival(static_cast<double>(lo - 1)));
  for (std::uint64_t t : r.lifetimes) {
    const std::uint64_t value = t == 0 ? UINT64_MAX : t;
    const auto bin = static_cast<std::size_t>(std::lower_bound(upper.begin(), upper.end(), value) - upper.begin());
    observed[bin] += 1.0;
  }
  // Merge sparse bins into their right neighbour (the tail into its left).
  std::vector<double> e;
  std::vector<double> o;
  double acc_e = 0.0;
  double acc_o = 0.0;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    acc_e += expected[i];
    acc_o += observed[i];
    if (acc_e >= 5.0) {
      e.push_back(acc_e);
      o.push_back(acc_o);
      acc_e = acc_o = 0.0;
    }
  }
  if (acc_e > 0.0 || acc_o > 0.0) {
    if (e.empty()) {
      e.push_back(acc_e);
      o.push_back(acc_o);
    } else {
      e.back() += acc_e;
      o.back() += acc_o;
    }
  }
  r.chi_square = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) r.chi_square += (o[i] - e[i]) * (o[i] - e[i]) / e[i];
  r.dof = static_cast<int>(e.size()) - 1;
  if (r.dof < 1) {
    r.gof_p_value = 1.0;
    return;
  }
  const boost::math::chi_squared_distribution<double> dist(r.dof);
  r.gof_p_value = boost::math::cdf(boost::math::complement(dist, r.chi_square));
}

}  // namespace

ScatterTrace scatter_trace(const LifetimeConfig& config, std::uint64_t trial) {
  const ScatterSetup setup = prepare_scatter(config);
  if (classify_scattering(config.label) != ScatterOutcome::Reflect) {
    throw std::invalid_argument("initial label must be confined");
  }
  ScatterTrace trace;
  trace.config = config;
  trace.trial = trial;
  run_trial(setup, config, trial, &trace.entries);
  return trace;
}

LifetimeResult lifetime_experiment(const LifetimeConfig& config) {
  if (classify_scattering(config.label) != ScatterOutcome::Reflect) {
    throw std::invalid_argument("initial label must be confined");
  }
  const auto start = std::chrono::steady_clock::now();
  const ScatterSetup setup = prepare_scatter(config);
  const ClassChangeCount count = class_change_probability(setup, config.p);

  LifetimeResult r;
  r.config = config;
  r.q = count.q;
  r.changing_pairs = count.changing;
  r.zone_pairs = count.total;
  std::vector<TrialOutcome> outcomes(config.trials);
  parallel_trials(config.trials, config.threads,
                  [&](std::uint64_t t) { outcomes[t] = run_trial(setup, config, t, nullptr); });

  r.lifetimes.reserve(config.trials);
  double sum = 0.0;
  double sum_sq = 0.0;
  std::uint64_t finished = 0;
  for (const auto& o : outcomes) {
    r.lifetimes.push_back(o.lifetime);
    r.bounces += o.bounces;
    r.reflections += o.reflections;
    if (o.lifetime == 0) {
      ++r.censored;
      continue;
    }
    ++finished;
    const auto t = static_cast<double>(o.lifetime);
    sum += t;
    sum_sq += t * t;
  }
  if (finished > 0) {
    const auto n = static_cast<double>(finished);
    r.mean = sum / n;
    r.variance = finished > 1 ? (sum_sq - n * r.mean * r.mean) / (n - 1.0) : 0.0;
    r.standard_error = std::sqrt(r.variance / n);
  }
  goodness_of_fit(r);
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<HistogramBin> lifetime_histogram(const LifetimeResult& result, int bins) {
  if (bins < 1) throw std::invalid_argument("bins must be positive");
  std::uint64_t longest = 0;
  for (std::uint64_t t : result.lifetimes) longest = std::max(longest, t);
  std::vector<HistogramBin> out;
  if (longest == 0) return out;
  const std::uint64_t width = (longest + static_cast<std::uint64_t>(bins) - 1) / static_cast<std::uint64_t>(bins);
  for (std::uint64_t lo = 1; lo <= longest; lo += width) out.push_back({lo, lo + width - 1, 0});
  for (std::uint64_t t : result.lifetimes) {
    if (t != 0) ++out[(t - 1) / width].count;
  }
  return out;
}

}  // namespace toposim
