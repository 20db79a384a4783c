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

#include "mbqc/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace mbqc {

namespace {
void check_n(int n) {
  if (n < 1 || n > kMaxQubits)
    throw std::invalid_argument("pauli qubit count out of range");
}
constexpr cdouble kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
}  // namespace

PauliOperator PauliOperator::identity(int n) {
  check_n(n);
  return {n, 0, 0, 0};
}

PauliOperator PauliOperator::single(int n, int qubit, char letter) {
  check_n(n);
  if (qubit < 0 || qubit >= n)
    throw std::invalid_argument("pauli qubit index out of range");
  PauliOperator p = identity(n);
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  switch (letter) {
    case 'I': break;
    case 'X': p.x_mask = bit; break;
    case 'Z': p.z_mask = bit; break;
    case 'Y': p.x_mask = bit; p.z_mask = bit; p.phase_pow = 1; break;
    default: throw std::invalid_argument("pauli letter must be one of IXYZ");
  }
  return p;
}

PauliOperator PauliOperator::from_string(const std::string& letters) {
  std::size_t start = 0;
  std::uint8_t phase = 0;
  if (!letters.empty() && letters[0] == '-') {
    phase = 2;
    start = 1;
  } else if (!letters.empty() && letters[0] == '+') {
    start = 1;
  }
  const int n = static_cast<int>(letters.size() - start);
  check_n(n);
  PauliOperator p = identity(n);
  p.phase_pow = phase;
  for (int q = 0; q < n; ++q) {
    const PauliOperator site = single(n, q, letters[start + q]);
    p.x_mask |= site.x_mask;
    p.z_mask |= site.z_mask;
    p.phase_pow = static_cast<std::uint8_t>((p.phase_pow + site.phase_pow) & 3);
  }
  return p;
}

PauliOperator PauliOperator::operator*(const PauliOperator& rhs) const {
  if (n_qubits != rhs.n_qubits)
    throw std::invalid_argument("pauli product: size mismatch");
  PauliOperator out;
  out.n_qubits = n_qubits;
  // Z-block of the left operand crosses the X-block of the right one.
  const int crossings = std::popcount(z_mask & rhs.x_mask);
  out.phase_pow = static_cast<std::uint8_t>(
      (phase_pow + rhs.phase_pow + 2 * (crossings & 1)) & 3);
  out.x_mask = x_mask ^ rhs.x_mask;
  out.z_mask = z_mask ^ rhs.z_mask;
  return out;
}

cdouble PauliOperator::phase() const { return kPhases[phase_pow & 3]; }

bool PauliOperator::is_hermitian() const {
  return ((phase_pow & 1) ^ (std::popcount(x_mask & z_mask) & 1)) == 0;
}

std::string PauliOperator::to_string() const {
  // each displayed Y absorbs one i from the canonical X-before-Z form
  const int y_count = std::popcount(x_mask & z_mask);
  std::string s;
  switch ((phase_pow - y_count) & 3) {
    case 0: s = "+"; break;
    case 1: s = "+i"; break;
    case 2: s = "-"; break;
    case 3: s = "-i"; break;
  }
  for (int q = 0; q < n_qubits; ++q) {
    const bool x = (x_mask >> q) & 1, z = (z_mask >> q) & 1;
    s += x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }
  return s;
}

PauliOperator conjugate_by_cphase(const PauliOperator& p, int a, int b) {
  if (a == b) throw std::invalid_argument("cPhase needs two distinct qubits");
  if (a < 0 || b < 0 || a >= p.n_qubits || b >= p.n_qubits)
    throw std::invalid_argument("cPhase qubit out of range");
  const std::uint64_t bit_a = std::uint64_t{1} << a;
  const std::uint64_t bit_b = std::uint64_t{1} << b;
  const bool xa = p.x_mask & bit_a, xb = p.x_mask & bit_b;
  PauliOperator out = p;
  if (xa) out.z_mask ^= bit_b;
  if (xb) out.z_mask ^= bit_a;
  // X_a Z_b and X_b Z_a reorder into canonical site form with one crossing
  if (xa && xb) out.phase_pow = static_cast<std::uint8_t>((out.phase_pow + 2) & 3);
  return out;
}

double expectation(const StateVector& state, const PauliOperator& p) {
  if (state.n_qubits() != p.n_qubits)
    throw std::invalid_argument("expectation: size mismatch");
  cdouble acc{0.0, 0.0};
  const auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const cdouble term = amps[i] *
        ((std::popcount(i & p.z_mask) & 1) ? -1.0 : 1.0);
    acc += std::conj(amps[i ^ p.x_mask]) * term;
  }
  acc *= p.phase();
  return acc.real();
}

void apply_pauli(StateVector& state, const PauliOperator& p) {
  if (state.n_qubits() != p.n_qubits)
    throw std::invalid_argument("apply_pauli: size mismatch");
  const auto in = state.amplitudes();
  std::vector<cdouble> out(in.size());
  const cdouble ph = p.phase();
  for (std::size_t i = 0; i < in.size(); ++i) {
    const double sign = (std::popcount(i & p.z_mask) & 1) ? -1.0 : 1.0;
    out[i ^ p.x_mask] = ph * sign * in[i];
  }
  state = StateVector(state.n_qubits(), std::move(out));
}

Eigen::MatrixXcd pauli_to_matrix(const PauliOperator& p) {
  if (p.n_qubits > 10)
    throw std::invalid_argument("pauli_to_matrix: too many qubits");
  const std::size_t dim = std::size_t{1} << p.n_qubits;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  const cdouble ph = p.phase();
  for (std::size_t i = 0; i < dim; ++i) {
    const double sign = (std::popcount(i & p.z_mask) & 1) ? -1.0 : 1.0;
    m(i ^ p.x_mask, i) = ph * sign;
  }
  return m;
}

}  // namespace mbqc
