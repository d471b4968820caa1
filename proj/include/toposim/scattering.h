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
#include <string>
#include <string_view>
#include <vector>

#include "toposim/code.h"
#include "toposim/lattice.h"
#include "toposim/logical.h"

namespace toposim {

enum class ScatterOutcome { Reflect, Transmit };

std::string_view outcome_name(ScatterOutcome outcome);

/// Transmit iff the label's class survives condensation (a + b even).
ScatterOutcome classify_scattering(AnyonLabel label);

/// Z_4 toric code with a condensed double-semion region. Throws
/// std::invalid_argument if the region wraps a handle; the full region is
/// accepted and gives the double-semion code.
StabilizerCode build_hybrid(const TorusLattice& lattice, const RegionMask& condensed);

/// Inverted geometry: a toric-code island inside a double-semion bulk.
/// The island itself must not wrap a handle.
StabilizerCode build_island(const TorusLattice& lattice, const RegionMask& island);

/// Moves `label` from `start` along `path`, one cell per step, and returns
/// the energy before the first step and after every step.
std::vector<int> transport(const StabilizerCode& code, AnyonLabel label, std::size_t start,
                           const std::vector<Role>& path);

struct LifetimeConfig {
  int rows = 6;
  int cols = 6;
  /// Condensed block; with `island` set, the block is the toric-code island.
  int block_row = 2;
  int block_col = 2;
  int block_height = 2;
  int block_width = 2;
  bool island = false;
  AnyonLabel label{1, 0};
  double p = 0.02;
  std::uint64_t rounds = 100000;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  int zone_width = 1;
  /// Cells probed per bounce. The first condensed cell is a boundary layer
  /// where e-type strings cost nothing, so the default probes two.
  int penetration = 2;
  int threads = 0;
};

/// The island preset: a 3x3 toric-code island in a 7x7 double-semion torus.
LifetimeConfig island_preset();

/// Resolved geometry of an experiment. The particle sits at `home` and
/// bounces towards `direction`; its pair partner sits one cell behind.
struct ScatterSetup {
  StabilizerCode code;
  RegionMask condensed;
  std::size_t home = 0;
  std::size_t partner = 0;
  Role direction = East;
  std::vector<std::size_t> zone;
  std::size_t a_home = 0;
  std::size_t b_home = 0;
  /// Bounce hops for each label (index 4a + b) and the retreat undoing them.
  std::vector<std::vector<PauliOperator>> bounce_steps;
  std::vector<PauliOperator> retreat;
};

ScatterSetup prepare_scatter(const LifetimeConfig& config);

struct ClassChangeCount {
  std::uint64_t changing = 0;
  std::uint64_t total = 0;
  /// Per-round class-change probability p * changing / total.
  double q = 0.0;
};

/// Counts zone (edge, operator) pairs that change the class at the home cell.
ClassChangeCount class_change_probability(const ScatterSetup& setup, double p);

struct TraceEntry {
  std::uint64_t round = 0;
  std::size_t position = 0;
  AnyonLabel label;
  std::string class_name;
  int energy = 0;
  bool reflected = false;
  bool poisoned = false;
};

struct ScatterTrace {
  LifetimeConfig config;
  std::uint64_t trial = 0;
  std::vector<TraceEntry> entries;
};

/// Round-by-round record of one trial, stopping at the first class change.
ScatterTrace scatter_trace(const LifetimeConfig& config, std::uint64_t trial);

struct LifetimeResult {
  LifetimeConfig config;
  double q = 0.0;
  std::uint64_t changing_pairs = 0;
  std::uint64_t zone_pairs = 0;
  /// Round of the first class change per trial; 0 marks a censored trial.
  std::vector<std::uint64_t> lifetimes;
  std::uint64_t censored = 0;
  double mean = 0.0;
  double variance = 0.0;
  double standard_error = 0.0;
  std::uint64_t bounces = 0;
  std::uint64_t reflections = 0;
  /// Chi-square goodness of fit against the geometric law with parameter q.
  double chi_square = 0.0;
  int dof = 0;
  double gof_p_value = 1.0;
  double wall_seconds = 0.0;
};

LifetimeResult lifetime_experiment(const LifetimeConfig& config);

struct HistogramBin {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::uint64_t count = 0;
};

/// Equal-width bins over the uncensored lifetimes.
std::vector<HistogramBin> lifetime_histogram(const LifetimeResult& result, int bins = 20);

inline constexpr int kLifetimeSchemaVersion = 1;

}  // namespace toposim
