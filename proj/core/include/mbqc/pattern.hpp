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
#include <map>
#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <set>
#include <span>
#include <variant>
#include <vector>

#include "mbqc/common.hpp"
#include "mbqc/state_vector.hpp"

namespace mbqc {

/// Adaptive measurement angle: effective value is
///   static_sign * (-1)^{sum of outcomes over sign_deps} * base.
/// sign_deps may only reference qubits measured earlier; dependencies are
/// structural (kept even when base == 0) so the temporal order of a pattern
/// does not depend on angle values.
struct AngleExpr {
  double base = 0.0;
  int static_sign = 1;
  std::set<int> sign_deps;

  double resolve(const std::map<int, int>& outcomes) const;
  bool operator==(const AngleExpr&) const = default;
};

struct MeasureSpec {
  enum class Kind { kEquatorial, kZ };
  Kind kind = Kind::kEquatorial;
  AngleExpr angle;  // equatorial only

  static MeasureSpec equatorial(AngleExpr a) {
    return {Kind::kEquatorial, std::move(a)};
  }
  static MeasureSpec z_basis() { return {Kind::kZ, {}}; }
  bool operator==(const MeasureSpec&) const = default;
};

/// One teleportation link on a logical wire: a measured qubit implementing
/// H e^{i phi Z / 2} on the wire.
struct LinkElem {
  int wire = 0;
  int qubit = 0;
  bool operator==(const LinkElem&) const = default;
};

/// The four-qubit CNOT primitive: control wire passes through the unmeasured
/// control qubit, target wire runs input -> middle -> output with the input
/// and middle qubits measured in X.
struct CnotElem {
  int control_wire = 0;
  int target_wire = 0;
  int m_target_in = 0;  // measured target-input qubit (outcome s2)
  int m_mid = 0;        // measured middle qubit (outcome s3)
  bool operator==(const CnotElem&) const = default;
};

/// Gate-structured view of the simulated unitary, in temporal order. The
/// trace determines, by a single forward walk, every angle dependency and
/// every byproduct parity set; composition concatenates traces and re-walks.
using TraceElem = std::variant<LinkElem, CnotElem>;

struct ByproductRule {
  std::set<int> z_deps, x_deps;
  bool operator==(const ByproductRule&) const = default;
};

/// Accumulated correction Z^z X^x per output wire; exponents add mod 2.
/// The raw pattern output relates to the simulated one by
///   |raw> = (prod_k Z_k^{z_k} X_k^{x_k}) U_ref |in>   (up to global phase).
struct ByproductOperator {
  std::vector<std::uint8_t> z, x;  // index = output wire

  ByproductOperator() = default;
  explicit ByproductOperator(int wires) : z(wires, 0), x(wires, 0) {}
  ByproductOperator& operator^=(const ByproductOperator& rhs);
  bool operator==(const ByproductOperator&) const = default;
};

struct OutcomeRecord {
  std::map<int, int> bits;               // measured qubit id -> outcome
  std::map<int, double> executed_angles; // equatorial qubits: resolved angle
};

/// A measurement pattern: resource edges, per-qubit adaptive measurement
/// specs, byproduct parity rules and the unitary it simulates. Input wire k
/// enters at qubit inputs[k]; output wire k leaves at outputs[k]. A qubit may
/// be both (a wire that is never measured). Immutable after construction.
struct MeasurementPattern {
  std::vector<int> qubits;  // sorted ids
  std::vector<int> inputs;  // wire order
  std::vector<int> outputs; // wire order
  std::vector<std::pair<int, int>> edges;
  std::map<int, MeasureSpec> measures;      // every non-output qubit
  std::map<int, ByproductRule> byproducts;  // keyed by output qubit id
  std::vector<TraceElem> trace;
  Eigen::MatrixXcd reference;  // 2^wires x 2^wires

  int wire_count() const { return static_cast<int>(inputs.size()); }
  int measured_count() const { return static_cast<int>(measures.size()); }

  /// Structural checks: ids consistent, measures cover exactly the non-output
  /// qubits, trace references measured equatorial qubits, dependencies
  /// acyclic. Throws std::invalid_argument.
  void validate() const;
};

/// Rebuilds sign_deps and byproduct rules from the trace (forward walk with
/// per-wire parity sets). Builders and compose() both go through this.
void derive_dependencies(MeasurementPattern& p);

/// Chain of links on one wire: k measured qubits with the given base angles,
/// simulating prod_j H e^{i a_j Z/2} (applied left factor last).
MeasurementPattern wire_chain_pattern(std::span<const double> base_angles);

/// Five-qubit Euler rotation: simulates
///   e^{-i zeta X/2} e^{-i eta Z/2} e^{-i xi X/2}
/// with angle chain {0, -xi, -eta, -zeta} and byproduct Z^{s1+s3} X^{s2+s4}.
MeasurementPattern rotation_pattern(double zeta, double eta, double xi);

/// Three-link chain without the leading fixed angle: a general one-qubit
/// unitary, not in Euler normal form. Three measured qubits, angles as given.
MeasurementPattern rotation_pattern_three_link(double phi1, double phi2,
                                               double phi3);

/// Four-qubit CNOT on wires (control, target) with byproduct
/// Z_c^{s2} X_t^{s3} Z_t^{s2}; both measured qubits are X-basis and
/// dependency-free.
MeasurementPattern cnot_pattern();

/// w wires, no qubits measured (every input is the matching output).
MeasurementPattern identity_pattern(int wires);

/// Sequential composition: p1 then p2. wiring maps each p1 output qubit to
/// the p2 input qubit it feeds and must be position-consistent
/// (wiring[p1.outputs[k]] == p2.inputs[k] for every wire k); other bijections
/// must be expressed by reordering p2's inputs. Identified qubits keep p1's
/// id and take p2's measurement spec (or output role). Byproduct rules of p1
/// propagate through p2's trace at the parity level; reference = p2 * p1.
MeasurementPattern compose(const MeasurementPattern& p1,
                           const MeasurementPattern& p2,
                           const std::map<int, int>& wiring);

/// Topological layering of the measured qubits: round 0 holds every
/// dependency-free qubit. Throws on cyclic dependencies.
std::vector<std::vector<int>> temporal_rounds(const MeasurementPattern& p);

/// Measurement order used by execution: rounds flattened, ascending id within
/// a round.
std::vector<int> measurement_order(const MeasurementPattern& p);

struct PatternRun {
  OutcomeRecord outcomes;
  StateVector raw_output{1};  // output wires in declared order
  ByproductOperator byproduct;
  double probability = 0.0;
};

/// Entangles the input with fresh |+> qubits over the pattern edges, then
/// measures in dependency order. Branch mode forces the outcome bits in
/// measurement order (throws ForbiddenBranchError on a forbidden branch).
PatternRun run_pattern(const MeasurementPattern& p, const StateVector& input,
                       std::span<const int> forced_bits);
PatternRun run_pattern(const MeasurementPattern& p, const StateVector& input,
                       Rng& rng);

/// All outcome branches with probability >= kForbiddenBranchTol, depth-first
/// in measurement order. Branch probabilities sum to 1.
std::vector<PatternRun> enumerate_branches(const MeasurementPattern& p,
                                           const StateVector& input);

/// Applies Z^z then X^x per output wire (inverse of the byproduct, up to
/// global phase).
void apply_byproduct_correction(StateVector& state,
                                const ByproductOperator& b);
StateVector corrected_output(const PatternRun& run);

nlohmann::json pattern_to_json(const MeasurementPattern& p);
MeasurementPattern pattern_from_json(const nlohmann::json& j);

}  // namespace mbqc
