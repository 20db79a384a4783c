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
#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "mbqc/common.hpp"
#include "mbqc/graph.hpp"

namespace mbqc {

/// Spin species per lattice site: spin-1 sites carry two virtual qubits,
/// spin-3/2 sites three. The physical dimension is virtual count + 1
/// (symmetric subspace).
enum class SpinKind { kSpinOne, kSpinThreeHalf };

int virtual_count(SpinKind kind);

/// Dense state over qudit sites with per-site dimensions dims[s]. Site 0 is
/// the fastest-running index. Physical basis index j at a site means
/// m = S - j (j = 0 is the highest-weight state).
class SpinNetState {
 public:
  SpinNetState(std::vector<int> dims);

  int n_sites() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }
  Eigen::Index dim() const { return amps_.size(); }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Eigen::VectorXcd& amplitudes() { return amps_; }

  double norm_sq() const { return amps_.squaredNorm(); }
  void renormalize();

  /// Applies a dims[site] x dims[site] operator to one site.
  void apply_site_operator(int site, const Eigen::MatrixXcd& op);

  /// Bipartite von Neumann entropy (bits) for the given site subset.
  double site_entropy(std::span<const int> sites_a) const;

 private:
  std::vector<int> dims_;
  Eigen::VectorXcd amps_;
};

/// Spin-S operator matrix in the m = S..-S basis; axis is 'x', 'y' or 'z'.
Eigen::MatrixXcd spin_matrix(double s, char axis);

/// Valence-bond construction: one singlet per unit of edge multiplicity,
/// dangling virtual qubits fixed to |0>, per-site symmetric projection, then
/// normalization. Total virtual qubit budget is kMaxQubits; a site's degree
/// may not exceed its virtual count.
SpinNetState build_aklt(const Multigraph& lattice, SpinKind kind);

enum class Axis : std::uint8_t { kX = 0, kY = 1, kZ = 2 };
char axis_letter(Axis a);

/// Rank-two POVM element (1/sqrt6)(S_a^2 - 1/4) on the spin-3/2 space.
Eigen::Matrix4cd povm_element(Axis axis);

struct PovmSample {
  std::vector<Axis> outcomes;
  SpinNetState post;
  double probability = 1.0;
};

/// Site-by-site generalized measurement with Born-rule probabilities.
PovmSample sample_povm(const SpinNetState& state, Rng& rng);
/// Forced variant; throws ForbiddenBranchError below kForbiddenBranchTol.
PovmSample sample_povm(const SpinNetState& state, std::span<const Axis> forced);

struct PovmReduction {
  Graph graph;                      // reduced graph on merged components
  std::vector<int> site_component;  // lattice site -> reduced vertex
};

/// Post-POVM graph: contract every edge whose endpoints share an axis, then
/// drop even and keep odd edge multiplicities.
PovmReduction reduce_to_graph(const Multigraph& lattice,
                              std::span<const Axis> outcomes);
PovmReduction reduce_to_graph(const Graph& lattice,
                              std::span<const Axis> outcomes);

struct ReductionCheck {
  bool pass = false;
  int bipartitions_checked = 0;
  double max_entropy_error = 0.0;
};

/// Necessary condition for local-unitary equivalence between the post-POVM
/// state and the predicted graph state: the bipartite entropies across every
/// component bipartition must agree (within 1e-8). The rule holds exactly on
/// closed (boundary-free) patches; a z outcome at a site with dangling
/// virtuals decouples its singlets, so open patches legitimately fail it.
ReductionCheck check_reduction_consistency(const Multigraph& lattice,
                                           std::span<const Axis> outcomes);
ReductionCheck check_reduction_consistency(const Graph& lattice,
                                           std::span<const Axis> outcomes);
inline constexpr double kReductionEntropyTol = 1e-8;

/// Closed patches on which the reduction rule is exact: the two-site
/// triple-edge patch, the four-cycle with doubled opposite rungs, and the
/// complete graph on four sites.
std::vector<Multigraph> closed_test_patches();

/// Brick-wall drawing of the honeycomb lattice: all horizontal row edges,
/// vertical edges on alternating columns. Max degree 3.
Graph honeycomb_brick_wall(int rows, int cols);

/// Monte-Carlo spanning probability of the reduced graph under i.i.d.
/// uniform site axes on an L x L brick-wall lattice: fraction of trials in
/// which one reduced-graph component touches both the left and the right
/// column.
double percolation_spanning_fraction(int length, long trials,
                                     std::uint64_t seed);

/// Single-trial spanning predicate, exposed for tests.
bool lattice_spans(const Graph& lattice, int rows, int cols,
                   std::span<const Axis> outcomes);

/// Effective qubit riding the decoupled spin chain.
struct LogicalQubit {
  cdouble a0{1.0, 0.0}, a1{0.0, 0.0};
  void normalize();
  bool is_normalized(double tol = 1e-12) const;
};

/// Measurement family B(alpha) on the decoupled spin-1 site; alpha = 0 is the
/// {|x>, |y>, |z>} basis.
struct WireBasis {
  double alpha = 0.0;
  static WireBasis xyz() { return {0.0}; }
  static WireBasis rotated(double alpha) { return {alpha}; }
};

/// Per-outcome state factorization |out> = X^x Z^z Rz(rotation) |in| up to
/// global phase, with Rz(t) = diag(1, e^{it}) on (|G0>, |G1>).
struct WireOutcome {
  enum class Label { kBPlus, kBMinus, kZ };
  Label label = Label::kZ;
  double probability = 0.0;
  LogicalQubit state;
  int x_corr = 0, z_corr = 0;
  double rotation = 0.0;
};

/// Projects the decoupling expansion of the chain edge onto each basis
/// element. Outcomes b+/b- carry corrections X / XZ and rotation -alpha; the
/// z outcome carries correction Z and no rotation. All probabilities are 1/3.
std::array<WireOutcome, 3> wire_step(const LogicalQubit& q,
                                     const WireBasis& basis);

/// Adaptive basis choice: to append Rz(theta) given the accumulated X-parity
/// of earlier corrections, measure B(-(-1)^x_parity * theta).
WireBasis adapted_wire_basis(double theta, int x_parity);

}  // namespace mbqc
