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

#include <iosfwd>
#include <nlohmann/json_fwd.hpp>
#include <string>
#include <variant>
#include <vector>

#include "mbqc/pattern.hpp"
#include "mbqc/state_vector.hpp"

namespace mbqc {

struct RotGate {
  int q = 0;
  double zeta = 0, eta = 0, xi = 0;
};
struct CnotGate {
  int c = 0, t = 0;
};
struct HGate {
  int q = 0;
};
using Gate = std::variant<RotGate, CnotGate, HGate>;

/// Small circuit over the universal set {Rot, CNOT, H}. Width is capped at 3
/// so every compiled pattern stays branch-exhaustible.
struct Circuit {
  int width = 1;
  std::vector<Gate> gates;
};

inline constexpr int kMaxCircuitWidth = 3;
inline constexpr int kMaxExhaustiveMeasured = 16;

/// Text format, one gate per line ('#' starts a comment):
///   ROT q zeta eta xi
///   CNOT c t
///   H q
/// The first non-comment line is "WIDTH w".
Circuit parse_circuit(std::istream& in);
Circuit parse_circuit_file(const std::string& path);

/// Lowers the circuit to one composed pattern: per-gate slices composed in
/// order, idle wires passed through untouched. H is lowered as the Euler
/// triple (pi/2, pi/2, pi/2), equal to H up to global phase (checked by the
/// verification oracle, not assumed).
MeasurementPattern compile_circuit(const Circuit& c);

/// Circuit-model oracle: applies the gate matrices in order.
StateVector reference_simulate(const Circuit& c, StateVector input);

struct VerifyOptions {
  bool exhaustive = true;
  long sampled_trials = 0;     // used when !exhaustive
  int n_random_inputs = 2;
  std::uint64_t seed = 0;
  double min_branch_fidelity = 1.0 - 1e-9;
};

struct BranchByproduct {
  std::vector<int> outcomes;  // in measurement order
  std::vector<std::uint8_t> z, x;
};

/// Cap on fully serialized per-branch byproducts; larger runs only report
/// summary counts (byproducts_truncated = true).
inline constexpr std::size_t kMaxReportedBranches = 256;

struct CompilationReport {
  int pattern_qubits = 0;
  int measurement_rounds = 0;
  long branches_verified = 0;
  int inputs_checked = 0;
  double min_fidelity = 0.0;
  bool passed = false;
  std::vector<BranchByproduct> per_branch_byproducts;  // first input only
  bool byproducts_truncated = false;
};

/// Runs the compiled pattern against reference_simulate over random inputs,
/// branch-exhaustively or sampled. Low fidelity is a report outcome, not an
/// error.
CompilationReport verify_circuit(const Circuit& c, const VerifyOptions& opts);

nlohmann::json report_to_json(const CompilationReport& r);

/// Worked example of the two-dimensional story: the compiled CNOT circuit
/// embedded in a 3x3 rectangular cluster, unused sites removed by Z
/// measurements (with neighbor corrections), then the pattern branches run
/// exhaustively against the circuit oracle.
struct GridDemoResult {
  int grid_qubits = 0;
  int removed_sites = 0;
  long branches = 0;
  double min_fidelity = 0.0;
  bool passed = false;
};
GridDemoResult run_grid_demo(std::uint64_t seed);

}  // namespace mbqc
