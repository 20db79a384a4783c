// Copyright 2026 The mbqc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace mbqc {

using cdouble = std::complex<double>;

/// Hard cap on dense register size. Anything larger belongs to a different
/// kind of simulator.
inline constexpr int kMaxQubits = 20;

/// Tolerance for norm preservation checks after public operations.
inline constexpr double kNormTol = 1e-10;

/// A forced measurement branch with probability below this threshold is a
/// genuinely forbidden branch, not round-off.
inline constexpr double kForbiddenBranchTol = 1e-12;

/// All stochastic code paths draw from this generator, seeded explicitly.
using Rng = std::mt19937_64;
inline constexpr const char* kRngName = "mt19937_64";

/// Stable per-task sub-seed so that parallel or reordered execution of
/// independent tasks (Monte-Carlo trials, optimizer restarts) stays
/// reproducible. SplitMix64 finalizer over (seed, index).
inline std::uint64_t derive_subseed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Thrown when a caller forces a measurement branch whose probability is
/// below kForbiddenBranchTol.
struct ForbiddenBranchError : std::runtime_error {
  explicit ForbiddenBranchError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Worker count for embarrassingly parallel sweeps; MBQC_THREADS overrides
/// (clamped to [1, 64]). Results never depend on it: every task derives its
/// own sub-seed and lands in its own output slot.
inline int worker_threads() {
  const char* env = std::getenv("MBQC_THREADS");
  if (!env) return 1;
  const long v = std::strtol(env, nullptr, 10);
  return static_cast<int>(std::clamp(v, 1L, 64L));
}

/// Runs fn(lo, hi) over a chunked index range on worker_threads() threads.
template <typename Fn>
void parallel_chunks(long n, Fn&& fn) {
  const int threads = worker_threads();
  if (threads <= 1 || n < 2) {
    fn(0L, n);
    return;
  }
  std::vector<std::thread> pool;
  const long chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const long lo = t * chunk;
    const long hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] { fn(lo, hi); });
  }
  for (auto& th : pool) th.join();
}

inline constexpr const char* kVersion = "0.1.0";

}  // namespace mbqc
