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
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "mbqc/common.hpp"
#include "mbqc/graph.hpp"

namespace mbqc {

/// Dense n-qubit state. Basis index convention is little-endian: qubit 0 is
/// the least significant bit of the amplitude index, and |0> is the +1
/// eigenstate of Z. Global phase is never tracked; comparisons go through
/// equal_up_to_global_phase / fidelity.
class StateVector {
 public:
  /// |0...0> on n qubits, 0 <= n <= kMaxQubits (0 = empty register, one
  /// scalar amplitude; what remains after the last qubit is measured away).
  explicit StateVector(int n_qubits);
  StateVector(int n_qubits, std::vector<cdouble> amplitudes);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  cdouble amplitude(std::size_t index) const { return amps_[index]; }
  std::span<const cdouble> amplitudes() const { return amps_; }
  std::span<cdouble> mutable_amplitudes() { return amps_; }

  double norm_sq() const;
  void renormalize();

 private:
  int n_qubits_;
  std::vector<cdouble> amps_;
};

/// Measurement basis: either the Bloch equator at angle phi (observable
/// cos(phi) X + sin(phi) Y) or the Z axis. Equatorial angles are stored in
/// canonical form phi in (-pi/2, pi/2]; construction from an arbitrary angle
/// records the sign flip O(phi + pi) = -O(phi), and reported outcomes refer
/// to the original angle.
class MeasurementBasis {
 public:
  enum class Axis { kEquator, kZ };

  static MeasurementBasis equatorial(double phi);
  static MeasurementBasis z();

  Axis axis() const { return axis_; }
  double phi() const { return phi_; }
  bool flipped() const { return flip_; }

 private:
  MeasurementBasis(Axis axis, double phi, bool flip)
      : axis_(axis), phi_(phi), flip_(flip) {}
  Axis axis_;
  double phi_;
  bool flip_;
};

/// One branch of a projective measurement. The eigenvalue is (-1)^outcome.
/// The measured qubit is removed from the register: indices above it shift
/// down by one.
struct MeasureResult {
  int outcome = 0;
  double probability = 0.0;
  StateVector post{0};
};

/// All 2^n amplitudes equal to 2^{-n/2}; 1 <= n <= kMaxQubits.
StateVector new_plus_state(int n_qubits);

/// Negates every amplitude whose basis index has bits i and j both set.
void apply_cphase(StateVector& state, int i, int j);

/// Applies a 2x2 unitary to qubit q. Throws if u is not unitary within 1e-10.
void apply_1q(StateVector& state, int q, const Eigen::Matrix2cd& u);

/// Diagonal Ising evolution: each amplitude picks up exp(-i g t m) where m is
/// the number of graph edges whose endpoints both carry bit 1. At t = pi/g
/// this reproduces the cPhase product over the edges.
void evolve_ising(StateVector& state, const Graph& graph, double g, double t);

/// Forced-branch measurement; throws ForbiddenBranchError when the requested
/// branch has probability below kForbiddenBranchTol.
MeasureResult measure(const StateVector& state, int q,
                      const MeasurementBasis& basis, int forced_outcome);

/// Sampled measurement using the provided generator.
MeasureResult measure(const StateVector& state, int q,
                      const MeasurementBasis& basis, Rng& rng);

/// Both branches at once (branch enumeration). A branch with probability
/// below kForbiddenBranchTol keeps its probability but an unnormalized post
/// state. first = outcome 0, second = outcome 1.
std::pair<MeasureResult, MeasureResult> measure_both(
    const StateVector& state, int q, const MeasurementBasis& basis);

cdouble inner_product(const StateVector& a, const StateVector& b);
double fidelity(const StateVector& a, const StateVector& b);
bool equal_up_to_global_phase(const StateVector& a, const StateVector& b,
                              double tol = kNormTol);

StateVector tensor(const StateVector& low, const StateVector& high);

/// Re-addresses qubits: old qubit q becomes qubit new_position[q].
StateVector permute_qubits(const StateVector& state,
                           std::span<const int> new_position);

/// Debug dump, CSV columns: index, real, imag.
void dump_amplitudes_csv(const StateVector& state, std::ostream& out);
StateVector load_amplitudes_csv(std::istream& in);

}  // namespace mbqc
