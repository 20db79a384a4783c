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

#include <catch2/catch_amalgamated.hpp>

#include "mbqc/growth.hpp"

using namespace mbqc;

TEST_CASE("growth step arithmetic", "[growth]") {
  CHECK(growth_step(5, true) == 6);
  CHECK(growth_step(5, false) == 3);
  CHECK(growth_step(1, false) == 0);  // clamped
  CHECK(growth_step(0, false) == 0);
  CHECK_THROWS_AS(growth_step(-1, true), std::invalid_argument);
}

TEST_CASE("deterministic endpoints of the drift", "[growth]") {
  GrowthParams params{.p = 1.0, .steps = 50, .trials = 100, .seed = 7};
  GrowthStats all_success = simulate_growth(params);
  CHECK(all_success.drift_per_step == Catch::Approx(1.0));
  CHECK(all_success.ci_half_width == Catch::Approx(0.0).margin(1e-15));

  params.p = 0.0;  // auto initial length keeps the walk clear of the clamp
  GrowthStats all_fail = simulate_growth(params);
  CHECK(all_fail.drift_per_step == Catch::Approx(-2.0));
  CHECK(all_fail.initial_length >= 2 * params.steps);
  CHECK(all_fail.extinction_fraction == 0.0);
}

TEST_CASE("drift converges to 3p - 2", "[growth]") {
  const double grid[] = {0.3, 0.55, 2.0 / 3.0, 0.8};
  GrowthParams base{.p = 0, .steps = 60, .trials = 20000, .seed = 99};
  const auto rows = threshold_scan(grid, base);
  REQUIRE(rows.size() == 4);
  for (const auto& row : rows) {
    const double expect = 3 * row.p - 2;
    const double sigma = row.ci_half_width / 1.96;
    CHECK(std::abs(row.drift - expect) <= 3 * sigma + 1e-12);
  }
  // drift estimates increase along the grid
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(rows[i].drift > rows[i - 1].drift);
}

TEST_CASE("threshold bracketing around 2/3", "[growth]") {
  const double grid[] = {0.6, 2.0 / 3.0, 0.75};
  GrowthParams base{.p = 0, .steps = 60, .trials = 20000, .seed = 3};
  const auto rows = threshold_scan(grid, base);
  CHECK(rows[0].drift < 0.0);
  CHECK(std::abs(rows[1].drift) <= rows[1].ci_half_width * 2);
  CHECK(rows[2].drift > 0.0);
}

TEST_CASE("identical seeds give identical statistics", "[growth]") {
  const GrowthParams params{.p = 0.71, .steps = 40, .trials = 500, .seed = 11};
  const GrowthStats a = simulate_growth(params);
  const GrowthStats b = simulate_growth(params);
  CHECK(a.drift_per_step == b.drift_per_step);  // bit-for-bit
  CHECK(a.ci_half_width == b.ci_half_width);
  CHECK(a.extinction_fraction == b.extinction_fraction);
}

TEST_CASE("short chains die out under failure", "[growth]") {
  const GrowthParams params{
      .p = 0.1, .steps = 30, .trials = 400, .seed = 5, .initial_length = 2};
  const GrowthStats stats = simulate_growth(params);
  CHECK(stats.extinction_fraction > 0.9);
}
