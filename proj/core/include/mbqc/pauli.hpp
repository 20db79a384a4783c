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
#include <string>

#include "mbqc/common.hpp"
#include "mbqc/state_vector.hpp"

namespace mbqc {

/// n-qubit Pauli operator i^phase_pow * prod_a X_a^{x_a} Z_a^{z_a}, with the
/// X factor before the Z factor on every site. Y_a = i X_a Z_a, so a Y
/// contributes one power of i.
///
/// Phase bookkeeping under multiplication is the symplectic rule: moving the
/// left operand's Z block past the right operand's X block costs
/// (-1)^{|z_left & x_right|}. Worked example:
///   (X0 Z1) * (Z0 X1) : z_left = {1}, x_right = {1}, overlap 1
///   => product = - X0 Z0 X1 Z1 = (i^2) * X0X1 Z0Z1 = -(iX0Z0)(iX1Z1)/(i^2)
///   i.e. exactly -Y0Y1 * i^2 ... = Y0 Y1. The sign matters: it is what makes
///   byproduct corrections land on the right branch.
struct PauliOperator {
  int n_qubits = 0;
  std::uint8_t phase_pow = 0;  // i^phase_pow, 0..3
  std::uint64_t x_mask = 0;
  std::uint64_t z_mask = 0;

  static PauliOperator identity(int n);
  /// One letter per qubit over IXYZ, qubit 0 first; optional leading '-'.
  /// e.g. from_string("XYY") or from_string("-XZI").
  static PauliOperator from_string(const std::string& letters);
  static PauliOperator single(int n, int qubit, char letter);

  PauliOperator operator*(const PauliOperator& rhs) const;
  bool operator==(const PauliOperator&) const = default;

  cdouble phase() const;
  bool is_identity_mask() const { return x_mask == 0 && z_mask == 0; }
  bool is_hermitian() const;
  std::string to_string() const;
};

/// Rewrites p under conjugation by cPhase on edge (a, b):
/// X_a -> X_a Z_b, X_b -> X_b Z_a, Z unchanged; when both X_a and X_b are
/// present the reordering into canonical form contributes a -1.
PauliOperator conjugate_by_cphase(const PauliOperator& p, int a, int b);

/// <state| p |state> (real part; imaginary part is < 1e-10 for Hermitian p).
double expectation(const StateVector& state, const PauliOperator& p);

/// state <- p state, exact phase included.
void apply_pauli(StateVector& state, const PauliOperator& p);

/// Dense 2^n x 2^n matrix; guarded to n <= 10.
Eigen::MatrixXcd pauli_to_matrix(const PauliOperator& p);

}  // namespace mbqc
