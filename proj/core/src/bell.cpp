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

#include "mbqc/bell.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mbqc/pauli.hpp"
#include "mbqc/stabilizer.hpp"

namespace mbqc {

namespace {
constexpr double kPi = std::numbers::pi;

// X for q = 0, Y for q = 1
MeasurementBasis or_basis(int q) {
  return MeasurementBasis::equatorial(q ? kPi / 2 : 0.0);
}
}  // namespace

StateVector ghz_state() {
  std::vector<cdouble> amps(8, cdouble{0, 0});
  amps[0] = amps[7] = 1.0 / std::sqrt(2.0);
  return StateVector(3, std::move(amps));
}

GhzReport ghz_checks() {
  const StateVector ghz = ghz_state();
  GhzReport report;
  const char* ops[4] = {"XXX", "XYY", "YXY", "YYX"};
  for (int k = 0; k < 4; ++k)
    report.expectations[k] = expectation(ghz, PauliOperator::from_string(ops[k]));

  StateVector rotated = ghz;
  const Eigen::Matrix2cd h = (Eigen::Matrix2cd() << 1, 1, 1, -1).finished() /
                             std::sqrt(2.0);
  apply_1q(rotated, 0, h);
  apply_1q(rotated, 2, h);
  report.phi3_fidelity = fidelity(rotated, graph_state(Graph::path(3)));

  const double signs[4] = {1.0, -1.0, -1.0, -1.0};
  report.pass = report.phi3_fidelity >= 1.0 - 1e-10;
  for (int k = 0; k < 4; ++k)
    report.pass = report.pass &&
                  std::abs(report.expectations[k] - signs[k]) <= 1e-10;
  return report;
}

int hvm_satisfying_count(unsigned constraint_mask) {
  // v(X1) v(X2) v(X3) = +1 ; v(X)v(Y)v(Y) products = -1 for the mixed terms
  // encode the six values as bits: 0 -> +1, 1 -> -1; products become parities
  struct Constraint {
    int vars[3];  // indices into (X1, X2, X3, Y1, Y2, Y3)
    int parity;   // required product: 0 -> +1, 1 -> -1
  };
  const Constraint constraints[4] = {
      {{0, 1, 2}, 0},  //  X1 X2 X3 = +1
      {{0, 4, 5}, 1},  //  X1 Y2 Y3 = -1
      {{3, 1, 5}, 1},  //  Y1 X2 Y3 = -1
      {{3, 4, 2}, 1},  //  Y1 Y2 X3 = -1
  };
  int count = 0;
  for (unsigned assignment = 0; assignment < 64; ++assignment) {
    bool ok = true;
    for (int c = 0; c < 4 && ok; ++c) {
      if (!((constraint_mask >> c) & 1u)) continue;
      int parity = 0;
      for (int v : constraints[c].vars) parity ^= (assignment >> v) & 1u;
      ok = parity == constraints[c].parity;
    }
    if (ok) ++count;
  }
  return count;
}

namespace {

OrRun finish_run(int a, int b, const std::array<int, 3>& s, double prob) {
  OrRun run;
  run.a = a;
  run.b = b;
  run.q = {a, b, a ^ b};
  run.s = s;
  run.o = s[0] ^ s[1] ^ s[2];
  run.probability = prob;
  return run;
}

}  // namespace

OrRun mbqc_or(int a, int b, Rng& rng) {
  if ((a & ~1) || (b & ~1))
    throw std::invalid_argument("OR inputs must be bits");
  const std::array<int, 3> q = {a, b, a ^ b};
  StateVector state = ghz_state();
  std::array<int, 3> s{};
  double prob = 1.0;
  for (int i = 0; i < 3; ++i) {
    MeasureResult res = measure(state, 0, or_basis(q[i]), rng);
    s[i] = res.outcome;
    prob *= res.probability;
    state = std::move(res.post);
  }
  return finish_run(a, b, s, prob);
}

std::vector<OrRun> mbqc_or_all_branches(int a, int b) {
  if ((a & ~1) || (b & ~1))
    throw std::invalid_argument("OR inputs must be bits");
  const std::array<int, 3> q = {a, b, a ^ b};
  std::vector<OrRun> out;
  struct Frame {
    StateVector state;
    int depth;
    std::array<int, 3> s;
    double prob;
  };
  std::vector<Frame> stack{{ghz_state(), 0, {}, 1.0}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.depth == 3) {
      out.push_back(finish_run(a, b, f.s, f.prob));
      continue;
    }
    auto [lo, hi] = measure_both(f.state, 0, or_basis(q[f.depth]));
    for (auto* res : {&lo, &hi}) {
      if (res->probability < kForbiddenBranchTol) continue;
      Frame next{std::move(res->post), f.depth + 1, f.s,
                 f.prob * res->probability};
      next.s[f.depth] = res->outcome;
      stack.push_back(std::move(next));
    }
  }
  return out;
}

}  // namespace mbqc
