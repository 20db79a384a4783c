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

#include "mbqc/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mbqc {

namespace {

void check_qubit(const StateVector& s, int q) {
  if (q < 0 || q >= s.n_qubits())
    throw std::invalid_argument("qubit index out of range");
}

std::size_t insert_bit(std::size_t reduced, int q, int bit) {
  const std::size_t low = reduced & ((std::size_t{1} << q) - 1);
  const std::size_t high = reduced >> q;
  return low | (static_cast<std::size_t>(bit) << q) | (high << (q + 1));
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 0 || n_qubits > kMaxQubits)
    throw std::invalid_argument("qubit count out of range");
  amps_.assign(std::size_t{1} << n_qubits, cdouble{0.0, 0.0});
  amps_[0] = 1.0;
}

StateVector::StateVector(int n_qubits, std::vector<cdouble> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  if (n_qubits < 0 || n_qubits > kMaxQubits)
    throw std::invalid_argument("qubit count out of range");
  if (amps_.size() != (std::size_t{1} << n_qubits))
    throw std::invalid_argument("amplitude count must be 2^n");
}

double StateVector::norm_sq() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

void StateVector::renormalize() {
  const double n = std::sqrt(norm_sq());
  if (n <= 0.0) throw std::runtime_error("cannot normalize a zero vector");
  for (auto& a : amps_) a /= n;
}

MeasurementBasis MeasurementBasis::equatorial(double phi) {
  // canonical representative in (-pi/2, pi/2]; O(phi + pi) = -O(phi)
  const double pi = std::numbers::pi;
  const double k = std::ceil((phi - pi / 2) / pi);
  const double canonical = phi - k * pi;
  const bool flip = std::llround(k) % 2 != 0;
  return MeasurementBasis(Axis::kEquator, canonical, flip);
}

MeasurementBasis MeasurementBasis::z() {
  return MeasurementBasis(Axis::kZ, 0.0, false);
}

StateVector new_plus_state(int n_qubits) {
  if (n_qubits < 1) throw std::invalid_argument("need at least one qubit");
  StateVector s(n_qubits);
  const double a = std::pow(2.0, -0.5 * n_qubits);
  for (auto& amp : s.mutable_amplitudes()) amp = a;
  return s;
}

void apply_cphase(StateVector& state, int i, int j) {
  check_qubit(state, i);
  check_qubit(state, j);
  if (i == j) throw std::invalid_argument("cPhase needs two distinct qubits");
  const std::size_t mask = (std::size_t{1} << i) | (std::size_t{1} << j);
  auto amps = state.mutable_amplitudes();
  for (std::size_t k = 0; k < amps.size(); ++k)
    if ((k & mask) == mask) amps[k] = -amps[k];
}

void apply_1q(StateVector& state, int q, const Eigen::Matrix2cd& u) {
  check_qubit(state, q);
  const Eigen::Matrix2cd err = u.adjoint() * u - Eigen::Matrix2cd::Identity();
  if (err.cwiseAbs().maxCoeff() > kNormTol)
    throw std::invalid_argument("apply_1q: matrix is not unitary");
  auto amps = state.mutable_amplitudes();
  const std::size_t half = amps.size() >> 1;
  for (std::size_t r = 0; r < half; ++r) {
    const std::size_t i0 = insert_bit(r, q, 0);
    const std::size_t i1 = i0 | (std::size_t{1} << q);
    const cdouble a0 = amps[i0], a1 = amps[i1];
    amps[i0] = u(0, 0) * a0 + u(0, 1) * a1;
    amps[i1] = u(1, 0) * a0 + u(1, 1) * a1;
  }
}

void evolve_ising(StateVector& state, const Graph& graph, double g, double t) {
  if (graph.n_vertices() != state.n_qubits())
    throw std::invalid_argument("evolve_ising: graph/register size mismatch");
  auto amps = state.mutable_amplitudes();
  std::vector<std::size_t> edge_masks;
  edge_masks.reserve(graph.n_edges());
  for (const auto& [a, b] : graph.edges())
    edge_masks.push_back((std::size_t{1} << a) | (std::size_t{1} << b));
  for (std::size_t k = 0; k < amps.size(); ++k) {
    int m = 0;
    for (const auto mask : edge_masks)
      if ((k & mask) == mask) ++m;
    if (m != 0) amps[k] *= std::exp(cdouble{0.0, -g * t * m});
  }
}

namespace {

// Unnormalized projection of `state` onto branch s of `basis` at qubit q,
// measured qubit removed. s refers to the canonical angle (flips already
// folded in by the caller).
std::pair<double, std::vector<cdouble>> project_branch(
    const StateVector& state, int q, const MeasurementBasis& basis, int s) {
  const std::size_t rdim = state.dim() >> 1;
  std::vector<cdouble> out(rdim);
  double prob = 0.0;
  const auto amps = state.amplitudes();
  if (basis.axis() == MeasurementBasis::Axis::kZ) {
    for (std::size_t r = 0; r < rdim; ++r) {
      out[r] = amps[insert_bit(r, q, s)];
      prob += std::norm(out[r]);
    }
  } else {
    // <phi,s| = (<0| + (-1)^s e^{-i phi} <1|) / sqrt(2)
    const cdouble w = (s == 0 ? 1.0 : -1.0) *
                      std::exp(cdouble{0.0, -basis.phi()}) / std::sqrt(2.0);
    const cdouble w0 = 1.0 / std::sqrt(2.0);
    for (std::size_t r = 0; r < rdim; ++r) {
      out[r] = w0 * amps[insert_bit(r, q, 0)] + w * amps[insert_bit(r, q, 1)];
      prob += std::norm(out[r]);
    }
  }
  return {prob, std::move(out)};
}

MeasureResult make_result(const StateVector& state, int q,
                          const MeasurementBasis& basis, int reported,
                          bool normalize) {
  const int canonical_s = reported ^ (basis.flipped() ? 1 : 0);
  auto [prob, amps] = project_branch(state, q, basis, canonical_s);
  MeasureResult res{reported, prob, StateVector{0}};
  if (normalize) {
    const double inv = 1.0 / std::sqrt(prob);
    for (auto& a : amps) a *= inv;
  }
  res.post = StateVector(state.n_qubits() - 1, std::move(amps));
  return res;
}

}  // namespace

MeasureResult measure(const StateVector& state, int q,
                      const MeasurementBasis& basis, int forced_outcome) {
  check_qubit(state, q);
  if (forced_outcome != 0 && forced_outcome != 1)
    throw std::invalid_argument("forced outcome must be 0 or 1");
  const int canonical_s = forced_outcome ^ (basis.flipped() ? 1 : 0);
  auto [prob, amps] = project_branch(state, q, basis, canonical_s);
  if (prob < kForbiddenBranchTol)
    throw ForbiddenBranchError("forced branch has probability " +
                               std::to_string(prob));
  return make_result(state, q, basis, forced_outcome, true);
}

MeasureResult measure(const StateVector& state, int q,
                      const MeasurementBasis& basis, Rng& rng) {
  check_qubit(state, q);
  const int canonical_s0 = basis.flipped() ? 1 : 0;
  auto [p0, amps0] = project_branch(state, q, basis, canonical_s0);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  const int reported = dist(rng) < p0 ? 0 : 1;
  return make_result(state, q, basis, reported, true);
}

std::pair<MeasureResult, MeasureResult> measure_both(
    const StateVector& state, int q, const MeasurementBasis& basis) {
  check_qubit(state, q);
  auto lo = make_result(state, q, basis, 0, false);
  auto hi = make_result(state, q, basis, 1, false);
  auto norm_if_possible = [](MeasureResult& r) {
    if (r.probability >= kForbiddenBranchTol) {
      const double inv = 1.0 / std::sqrt(r.probability);
      for (auto& a : r.post.mutable_amplitudes()) a *= inv;
    }
  };
  norm_if_possible(lo);
  norm_if_possible(hi);
  return {std::move(lo), std::move(hi)};
}

cdouble inner_product(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("inner_product: dimension mismatch");
  cdouble s{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i)
    s += std::conj(a.amplitude(i)) * b.amplitude(i);
  return s;
}

double fidelity(const StateVector& a, const StateVector& b) {
  return std::norm(inner_product(a, b));
}

bool equal_up_to_global_phase(const StateVector& a, const StateVector& b,
                              double tol) {
  return std::abs(inner_product(a, b)) >= 1.0 - tol;
}

StateVector tensor(const StateVector& low, const StateVector& high) {
  const int n = low.n_qubits() + high.n_qubits();
  if (n > kMaxQubits) throw std::invalid_argument("tensor: register too large");
  std::vector<cdouble> amps(std::size_t{1} << n);
  for (std::size_t j = 0; j < high.dim(); ++j)
    for (std::size_t i = 0; i < low.dim(); ++i)
      amps[(j << low.n_qubits()) | i] = high.amplitude(j) * low.amplitude(i);
  return StateVector(n, std::move(amps));
}

StateVector permute_qubits(const StateVector& state,
                           std::span<const int> new_position) {
  const int n = state.n_qubits();
  if (static_cast<int>(new_position.size()) != n)
    throw std::invalid_argument("permute_qubits: permutation size mismatch");
  std::vector<bool> seen(n, false);
  for (int q = 0; q < n; ++q) {
    if (new_position[q] < 0 || new_position[q] >= n || seen[new_position[q]])
      throw std::invalid_argument("permute_qubits: not a permutation");
    seen[new_position[q]] = true;
  }
  std::vector<cdouble> out(state.dim());
  for (std::size_t i = 0; i < state.dim(); ++i) {
    std::size_t j = 0;
    for (int q = 0; q < n; ++q)
      j |= ((i >> q) & 1) << new_position[q];
    out[j] = state.amplitude(i);
  }
  return StateVector(n, std::move(out));
}

void dump_amplitudes_csv(const StateVector& state, std::ostream& out) {
  out << "index,real,imag\n";
  char buf[80];
  for (std::size_t i = 0; i < state.dim(); ++i) {
    const cdouble a = state.amplitude(i);
    std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g\n", i, a.real(), a.imag());
    out << buf;
  }
}

StateVector load_amplitudes_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("index", 0) != 0)
    throw std::invalid_argument("amplitude CSV: missing header");
  std::vector<cdouble> amps;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::size_t idx;
    double re, im;
    if (std::sscanf(line.c_str(), "%zu,%lf,%lf", &idx, &re, &im) != 3)
      throw std::invalid_argument("amplitude CSV: bad row: " + line);
    if (idx != amps.size())
      throw std::invalid_argument("amplitude CSV: rows must be consecutive");
    amps.emplace_back(re, im);
  }
  const auto dim = amps.size();
  int n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  if ((std::size_t{1} << n) != dim)
    throw std::invalid_argument("amplitude CSV: row count must be 2^n");
  return StateVector(n, std::move(amps));
}

}  // namespace mbqc
