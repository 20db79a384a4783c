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
#include <cmath>
#include <numbers>
#include <random>

#include "mbqc/graph.hpp"
#include "mbqc/state_vector.hpp"

namespace mbqc::test {

inline constexpr double kPi = std::numbers::pi;

inline StateVector random_state(int n, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<cdouble> amps(std::size_t{1} << n);
  for (auto& a : amps) a = cdouble{gauss(rng), gauss(rng)};
  StateVector s(n, std::move(amps));
  s.renormalize();
  return s;
}

inline Graph random_graph(int n, double edge_prob, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (u(rng) < edge_prob) g.add_edge(a, b);
  return g;
}

inline Eigen::Matrix2cd mat_h() {
  return (Eigen::Matrix2cd() << 1, 1, 1, -1).finished() / std::sqrt(2.0);
}
inline Eigen::Matrix2cd mat_x() {
  return (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
}
inline Eigen::Matrix2cd mat_y() {
  return (Eigen::Matrix2cd() << 0, cdouble{0, -1}, cdouble{0, 1}, 0).finished();
}
inline Eigen::Matrix2cd mat_z() {
  return (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
}
inline Eigen::Matrix2cd mat_rx(double t) {
  const cdouble c = std::cos(t / 2), s = cdouble{0, -1} * std::sin(t / 2);
  return (Eigen::Matrix2cd() << c, s, s, c).finished();
}
inline Eigen::Matrix2cd mat_rz(double t) {
  return (Eigen::Matrix2cd() << std::exp(cdouble{0, -t / 2}), 0, 0,
          std::exp(cdouble{0, t / 2}))
      .finished();
}
/// e^{i phi Z / 2} = Rz(-phi)
inline Eigen::Matrix2cd mat_exp_iz(double phi) { return mat_rz(-phi); }

inline Eigen::Matrix2cd random_unitary(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Matrix2cd m;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m(r, c) = cdouble{gauss(rng), gauss(rng)};
  const Eigen::HouseholderQR<Eigen::Matrix2cd> qr(m);
  Eigen::Matrix2cd q = qr.householderQ();
  // fix the phases so Q is Haar distributed
  const Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < 2; ++k) {
    const cdouble d = r(k, k);
    q.col(k) *= d / std::abs(d);
  }
  return q;
}

/// Applies a dense matrix over the whole register (little-endian), test-side
/// oracle for small systems.
inline StateVector apply_dense(const Eigen::MatrixXcd& u, const StateVector& s) {
  Eigen::VectorXcd v(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) v[i] = s.amplitude(i);
  Eigen::VectorXcd w = u * v;
  std::vector<cdouble> amps(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) amps[i] = w[i];
  return StateVector(s.n_qubits(), std::move(amps));
}

}  // namespace mbqc::test
