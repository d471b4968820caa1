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

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace toposim {

/// Per-trial generator. Draws avoid the standard distributions so results
/// do not depend on the standard library implementation.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial) : engine_(seed ^ trial) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n) by rejection.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("empty range");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = 0;
    do {
      v = engine_();
    } while (v >= limit);
    return v % n;
  }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

inline constexpr const char* kThreadsEnv = "TOPOSIM_THREADS";

/// Worker count: `requested` if positive, else $TOPOSIM_THREADS, else the
/// hardware concurrency.
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv(kThreadsEnv)) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

/// Runs body(trial) for every trial in [0, trials). Trials are striped over
/// workers; any result must be written to a per-trial slot so the reduction
/// is independent of the thread count. The first exception is rethrown.
template <class Body>
void parallel_trials(std::uint64_t trials, int threads, Body&& body) {
  const int workers = static_cast<int>(std::min<std::uint64_t>(std::max(1, resolve_threads(threads)), std::max<std::uint64_t>(trials, 1)));
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&](int w) {
    try {
      for (std::uint64_t t = static_cast<std::uint64_t>(w); t < trials; t += static_cast<std::uint64_t>(workers)) body(t);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace toposim
