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

#include "mbqc/growth.hpp"

#include <cmath>
#include <stdexcept>

namespace mbqc {

long growth_step(long length, bool success) {
  if (length < 0) throw std::invalid_argument("negative cluster length");
  return success ? length + 1 : std::max(length - 2, 0L);
}

long growth_step(long length, double p, Rng& rng) {
  std::bernoulli_distribution success(p);
  return growth_step(length, success(rng));
}

GrowthStats simulate_growth(const GrowthParams& params) {
  if (params.p < 0.0 || params.p > 1.0)
    throw std::invalid_argument("success probability must be in [0, 1]");
  if (params.trials < 1) throw std::invalid_argument("need at least one trial");
  if (params.steps < 1) throw std::invalid_argument("need at least one step");

  const long init = params.initial_length > 0
                        ? params.initial_length
                        : std::max<long>(2L * params.steps + 1, 3);

  // per-trial slots: aggregation order is fixed, so the statistics cannot
  // depend on how the trial range is chunked across workers
  std::vector<double> drifts(params.trials);
  std::vector<std::uint8_t> hit(params.trials);
  parallel_chunks(params.trials, [&](long lo, long hi) {
    for (long t = lo; t < hi; ++t) {
      Rng rng(derive_subseed(params.seed, static_cast<std::uint64_t>(t)));
      long len = init;
      bool hit_zero = false;
      for (int s = 0; s < params.steps; ++s) {
        len = growth_step(len, params.p, rng);
        hit_zero |= (len == 0);
      }
      drifts[t] = static_cast<double>(len - init) / params.steps;
      hit[t] = hit_zero ? 1 : 0;
    }
  });
  double sum = 0.0, sum_sq = 0.0;
  long extinct = 0;
  for (long t = 0; t < params.trials; ++t) {
    sum += drifts[t];
    sum_sq += drifts[t] * drifts[t];
    extinct += hit[t];
  }

  GrowthStats stats;
  stats.trials = params.trials;
  stats.steps = params.steps;
  stats.initial_length = init;
  stats.drift_per_step = sum / params.trials;
  const double var =
      params.trials > 1
          ? std::max(0.0, (sum_sq - sum * sum / params.trials) /
                              (params.trials - 1))
          : 0.0;
  stats.ci_half_width = 1.96 * std::sqrt(var / params.trials);
  stats.extinction_fraction = static_cast<double>(extinct) / params.trials;
  return stats;
}

std::vector<ScanRow> threshold_scan(std::span<const double> p_grid,
                                    const GrowthParams& base) {
  if (p_grid.empty()) throw std::invalid_argument("empty probability grid");
  std::vector<ScanRow> rows;
  rows.reserve(p_grid.size());
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    GrowthParams params = base;
    params.p = p_grid[i];
    params.seed = derive_subseed(base.seed, 0x5ca0 + i);
    const GrowthStats stats = simulate_growth(params);
    rows.push_back({p_grid[i], stats.drift_per_step, stats.ci_half_width});
  }
  return rows;
}

}  // namespace mbqc
