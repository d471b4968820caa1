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
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "toposim/code.h"
#include "toposim/logical.h"

namespace toposim {

inline constexpr std::string_view kToolName = "toposim";
inline constexpr std::string_view kToolVersion = "0.1.0";

enum ExitStatus : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitInvalidConfig = 2,
  kExitOverflow = 3,
};

/// Model selection shared by the subcommands.
struct ModelSpec {
  std::string model = "z2";  ///< z2, z4, ds, hybrid or island
  int rows = 3;
  int cols = 3;
  std::string twist = "none";  ///< none, vertical, horizontal or double (z2 only)
  int twist_offset = 0;
  /// Block (row, col, height, width) for hybrid and island; height 0 picks a
  /// block of about a third of the lattice.
  std::array<int, 4> region{0, 0, 0, 0};
};

StabilizerCode build_model(const ModelSpec& spec);

/// Accepts "e", "m3", "e2m", "e^2m^3", "e1m0", "vacuum", "s", "s-bar", "ss-bar" and "a,b".
AnyonLabel parse_label(std::string_view text);

/// Accepts "3" and "3x4".
std::array<int, 2> parse_size(std::string_view text);

/// FNV-1a 64 of a canonical config text, as 16 hex digits.
std::string config_hash(std::string_view canonical);

/// Entry point. Writes results to `out` (or to files named by flags) and
/// diagnostics to `err`; returns an ExitStatus.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toposim
