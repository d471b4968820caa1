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
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "toposim/code.h"
#include "toposim/logical.h"
#include "toposim/rng.h"
#include "toposim/syndrome.h"

namespace toposim {

enum class ExcitationSpecies { ConfinedX, ConfinedZ, Semion, AntiSemion, SemionPair, Opaque };

std::string_view species_name(ExcitationSpecies species);

/// One identified excitation. `anchor` is the cell of the flagging term:
/// the constraint for confined species, the plaquette for s and s-bar, the
/// vertex for ss-bar.
struct Excitation {
  ExcitationSpecies species;
  GeneratorKind kind;
  std::size_t anchor;
  bool operator==(const Excitation&) const = default;
};

/// Constraint clusters up to this size are deduced exhaustively.
inline constexpr std::size_t kExactClusterLimit = 5;
/// Defect sets up to this size are matched exactly.
inline constexpr std::size_t kExactMatchingLimit = 10;

/// Minimum-weight perfect matching of an even number of items. Exact by
/// enumeration up to kExactMatchingLimit items, greedy closest pair beyond.
/// Ties go to the lowest indices.
std::vector<std::pair<std::size_t, std::size_t>> min_weight_matching(const std::vector<std::vector<int>>& cost);

struct DecodeReport {
  PauliOperator recovery;
  std::vector<Excitation> excitations;
  /// Sizes of the violated-constraint clusters found in the first stage.
  std::vector<std::size_t> cluster_sizes;
};

/// Species found by the decoder's identification pass. Confined species come
/// from violated constraints; semions and ss-bar are read from the syndrome
/// left after the confined errors are undone.
std::vector<Excitation> identify_excitations(const StabilizerCode& code, const SyndromeRecord& syndrome);

/// Recovery for a fully condensed double-semion code. Throws
/// std::invalid_argument for other codes and std::logic_error if the
/// recovery fails to clear the syndrome.
PauliOperator decode(const StabilizerCode& code, const SyndromeRecord& syndrome);
DecodeReport decode_report(const StabilizerCode& code, const SyndromeRecord& syndrome);

/// Logical class of frame * recovery. Throws std::invalid_argument if the
/// product leaves a syndrome.
LogicalClass logical_failure(const LogicalStructure& logicals, const PauliOperator& frame,
                             const PauliOperator& recovery);

/// Each site independently, with probability p, suffers X^a Z^b with (a, b)
/// uniform over the nontrivial pairs.
PauliOperator sample_noise(int dim, std::size_t num_sites, double p, TrialRng& rng);

struct BenchConfig {
  int size = 3;
  double p = 0.01;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  int threads = 0;
};

struct BenchResult {
  BenchConfig config;
  std::uint64_t failures = 0;
  std::map<std::string, std::uint64_t> failures_by_class;
  /// Per-trial outcome, for paired comparisons across sizes.
  std::vector<std::uint8_t> failed;
  double wall_seconds = 0.0;
};

/// Monte Carlo logical failure rate of the decoder on the fully condensed
/// L x L code. Trial t draws from TrialRng(seed, t).
BenchResult run_decoder_bench(const BenchConfig& config);

struct SignTest {
  std::uint64_t worse = 0;   ///< trials failing only at the larger size
  std::uint64_t better = 0;  ///< trials failing only at the smaller size
  double p_value = 1.0;      ///< one-sided, against "the larger size fails more"
};

/// Paired sign test on per-trial outcomes of two benches with equal trials.
SignTest paired_sign_test(const BenchResult& smaller, const BenchResult& larger);

inline constexpr int kBenchSchemaVersion = 1;
std::string bench_csv_header();
std::string bench_csv_row(const BenchResult& result, bool timing);

}  // namespace toposim
