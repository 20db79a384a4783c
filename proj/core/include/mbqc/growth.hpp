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

#include <cstdint>
#include <span>
#include <vector>

#include "mbqc/common.hpp"

namespace mbqc {

/// Probabilistic heralded growth of a linear cluster: a successful entangling
/// attempt lengthens the chain by one, a failure costs the affected pair plus
/// the recovery measurement, i.e. two sites, clamped at zero for chains too
/// short to pay.
struct GrowthParams {
  double p = 0.5;           // success probability in [0, 1]
  int steps = 100;          // attempts per trajectory
  long trials = 1000;       // independent trajectories
  std::uint64_t seed = 0;
  long initial_length = 0;  // 0 = auto: 2*steps + 1, clamp never triggers
};

struct GrowthStats {
  double drift_per_step = 0.0;      // mean (final - initial) / steps
  double ci_half_width = 0.0;       // 1.96 * stderr of the mean
  double extinction_fraction = 0.0; // trajectories that ever hit length 0
  long trials = 0;
  int steps = 0;
  long initial_length = 0;
};

/// One growth attempt: success -> length + 1, failure -> max(length - 2, 0).
long growth_step(long length, bool success);
long growth_step(long length, double p, Rng& rng);

/// Seeded, reproducible trajectory statistics. Trials use derived sub-seeds,
/// so the result is independent of execution order.
GrowthStats simulate_growth(const GrowthParams& params);

struct ScanRow {
  double p = 0.0;
  double drift = 0.0;
  double ci_half_width = 0.0;
};

std::vector<ScanRow> threshold_scan(std::span<const double> p_grid,
                                    const GrowthParams& base);

}  // namespace mbqc
