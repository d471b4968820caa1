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
#include <vector>

#include "toposim/code.h"
#include "toposim/pauli.h"

namespace toposim {

/// Measured eigenvalue exponents: generator g reads i^{values[g]}.
struct SyndromeRecord {
  std::vector<std::uint8_t> values;
  std::vector<GeneratorKind> kinds;

  bool is_trivial() const;
  std::size_t num_violated() const;
  bool operator==(const SyndromeRecord&) const = default;
};

/// Perfect single-shot measurement: values[g] = commutation_exponent(g, frame).
SyndromeRecord extract_syndrome(const StabilizerCode& code, const PauliOperator& frame);

/// Accumulated physical error with the seed lineage that produced it.
struct ErrorFrame {
  PauliOperator error;
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;

  void compose(const PauliOperator& more) { error *= more; }
};

/// Syndrome of a frame maintained incrementally under single-site updates.
/// Each update touches only the generators incident to that site.
class SyndromeTracker {
 public:
  explicit SyndromeTracker(const StabilizerCode& code);

  void reset();
  /// Starts from a measured syndrome with an identity frame, so the frame
  /// then holds only the updates applied afterwards.
  void load(const SyndromeRecord& syndrome);
  /// Right-multiplies the frame by X^x Z^z on `site`.
  void apply_site(std::size_t site, int x_power, int z_power);
  void apply(const PauliOperator& op);

  const std::vector<std::uint8_t>& values() const { return values_; }
  std::uint8_t value(std::size_t generator) const { return values_[generator]; }
  /// Violated generator count, i.e. the energy of the current frame.
  int energy() const { return violated_; }
  const PauliOperator& frame() const { return frame_; }
  /// Generators incident to `site`.
  const std::vector<std::size_t>& generators_at(std::size_t site) const { return incidence_[site]; }

 private:
  void update_values(std::size_t site, int x_power, int z_power);

  const StabilizerCode* code_;
  std::vector<std::vector<std::size_t>> incidence_;
  std::vector<std::uint8_t> values_;
  PauliOperator frame_;
  int violated_ = 0;
};

}  // namespace toposim
