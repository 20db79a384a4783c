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

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

#include "mbqc/state_vector.hpp"

namespace mbqc {

/// Bipartite von Neumann entropy in bits across the cut mask_a vs the rest.
/// mask_a must be a proper nonempty subset. Schmidt coefficients below 1e-12
/// count as zero.
double vn_entropy(const StateVector& state, std::uint32_t mask_a);

inline constexpr int kMaxEwdQubits = 8;

/// All subcubic trees on n labeled leaves (every internal vertex degree 3;
/// degree-2 vertices induce no new bipartitions), each given as the list of
/// its edge-cut leaf masks. Exactly (2n-5)!! trees for n >= 3.
std::vector<std::vector<std::uint32_t>> subcubic_tree_cuts(int n);

/// Entanglement width: min over subcubic trees of the max edge-cut entropy,
/// by exhaustive enumeration with entropies memoized per cut. n <= 8.
double entanglement_width(const StateVector& state);

struct GEResult {
  double lambda_max = 0.0;  // best overlap with a product state (lower bound)
  double e_g = 0.0;         // -log2(lambda_max^2), upper bound on true E_G
  std::vector<double> restart_overlaps;
  long iterations = 0;
};

/// Alternating single-site optimization of the product-state overlap from
/// seeded random starts; converged when the overlap gain drops below 1e-12.
GEResult geometric_entanglement(const StateVector& state, int restarts,
                                std::uint64_t seed);

struct GEBracket {
  double lambda_lo = 0.0, lambda_hi = 0.0;  // lambda_lo <= Lambda_max <= hi
  double eg_lo = 0.0, eg_hi = 0.0;          // from hi / lo respectively
};

/// Independent bracket on Lambda_max for n <= 3: exact Schmidt value for
/// n <= 2; for n = 3 a spherical grid over one qubit (step `resolution`
/// radians) with the exact best 2-qubit product overlap (largest singular
/// value) for the rest, plus a conservative Lipschitz margin.
GEBracket ge_grid_oracle(const StateVector& state, double resolution = 1e-2);

/// Max over the 2^n outcomes of a product measurement of |<alpha|psi>|^2.
/// bases[q] holds the orthonormal measurement basis of qubit q as columns.
double max_outcome_probability(const StateVector& state,
                               std::span<const Eigen::Matrix2cd> bases);

}  // namespace mbqc
