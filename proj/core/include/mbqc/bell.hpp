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

#include <array>
#include <cstdint>
#include <vector>

#include "mbqc/common.hpp"
#include "mbqc/state_vector.hpp"

namespace mbqc {

/// (|000> + |111>)/sqrt(2).
StateVector ghz_state();

/// The four GHZ stabilizers, sign included: XXX, -XYY, -YXY, -YYX.
struct GhzReport {
  std::array<double, 4> expectations{};  // of XXX, XYY, YXY, YYX
  double phi3_fidelity = 0.0;            // H1 H3 |GHZ> vs the 3-qubit cluster
  bool pass = false;
};
GhzReport ghz_checks();

/// Counts the 64 assignments v(X_i), v(Y_i) in {+-1} satisfying the product
/// constraints selected by constraint_mask (bit k = k-th GHZ stabilizer
/// relation). The full set admits none.
int hvm_satisfying_count(unsigned constraint_mask = 0b1111u);

/// One run of the GHZ OR gate: bases q_i in {X=0, Y=1} with q1 = a, q2 = b,
/// q3 = a xor b; output o = s1 xor s2 xor s3.
struct OrRun {
  int a = 0, b = 0;
  std::array<int, 3> q{};
  std::array<int, 3> s{};
  int o = 0;
  double probability = 0.0;
};

OrRun mbqc_or(int a, int b, Rng& rng);
/// Every branch with nonzero probability.
std::vector<OrRun> mbqc_or_all_branches(int a, int b);

}  // namespace mbqc
