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

#include <catch2/catch_amalgamated.hpp>
#include <sstream>

#include "mbqc/pauli.hpp"
#include "mbqc/state_vector.hpp"
#include "test_util.hpp"

using namespace mbqc;
using namespace mbqc::test;

namespace {

// (|+0+> + |-1->)/sqrt2, the 3-qubit linear cluster
StateVector phi3_expected() {
  std::vector<cdouble> amps(8);
  for (std::size_t i = 0; i < 8; ++i) {
    const int b0 = i & 1, b1 = (i >> 1) & 1, b2 = (i >> 2) & 1;
    amps[i] = b1 == 0 ? 1.0 : ((b0 + b2) % 2 ? -1.0 : 1.0);
    amps[i] /= 2.0 * std::sqrt(2.0);
  }
  return StateVector(3, std::move(amps));
}

}  // namespace

TEST_CASE("plus state preparation", "[statevec]") {
  const StateVector one = new_plus_state(1);
  CHECK(std::abs(one.amplitude(0) - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(one.amplitude(1) - 1.0 / std::sqrt(2.0)) < 1e-15);

  const StateVector two = new_plus_state(2);
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(std::abs(two.amplitude(i) - 0.5) < 1e-15);

  CHECK_THROWS_AS(new_plus_state(0), std::invalid_argument);
  CHECK_THROWS_AS(new_plus_state(kMaxQubits + 1), std::invalid_argument);
}

TEST_CASE("cPhase chain builds the three-qubit cluster", "[statevec]") {
  StateVector s = new_plus_state(3);
  apply_cphase(s, 1, 0);
  apply_cphase(s, 1, 2);
  CHECK(fidelity(s, phi3_expected()) == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("cPhase basics", "[statevec]") {
  SECTION("two-qubit cluster") {
    StateVector s = new_plus_state(2);
    apply_cphase(s, 0, 1);
    // (|0+> + |1->)/sqrt2
    CHECK(std::abs(s.amplitude(0) - 0.5) < 1e-15);
    CHECK(std::abs(s.amplitude(1) - 0.5) < 1e-15);
    CHECK(std::abs(s.amplitude(2) - 0.5) < 1e-15);
    CHECK(std::abs(s.amplitude(3) + 0.5) < 1e-15);
  }
  SECTION("involution") {
    Rng rng(11);
    StateVector s = random_state(4, rng);
    StateVector t = s;
    apply_cphase(t, 1, 3);
    apply_cphase(t, 3, 1);  // symmetric in (i, j)
    CHECK(fidelity(s, t) == Catch::Approx(1.0).margin(1e-12));
  }
  SECTION("|00> untouched") {
    StateVector s(2);
    apply_cphase(s, 0, 1);
    CHECK(std::abs(s.amplitude(0) - 1.0) < 1e-15);
  }
  SECTION("errors") {
    StateVector s(2);
    CHECK_THROWS_AS(apply_cphase(s, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(apply_cphase(s, 0, 2), std::invalid_argument);
  }
}

TEST_CASE("single-qubit gates", "[statevec]") {
  SECTION("H|0> = |+>") {
    StateVector s(1);
    apply_1q(s, 0, mat_h());
    CHECK(fidelity(s, new_plus_state(1)) == Catch::Approx(1.0).margin(1e-12));
  }
  SECTION("Z|+> = |->") {
    StateVector s = new_plus_state(1);
    apply_1q(s, 0, mat_z());
    CHECK(std::abs(s.amplitude(0) - 1.0 / std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(s.amplitude(1) + 1.0 / std::sqrt(2.0)) < 1e-12);
  }
  SECTION("H1 H3 |GHZ> = |phi3>") {
    std::vector<cdouble> amps(8, cdouble{0, 0});
    amps[0] = amps[7] = 1.0 / std::sqrt(2.0);
    StateVector ghz(3, std::move(amps));
    apply_1q(ghz, 0, mat_h());
    apply_1q(ghz, 2, mat_h());
    CHECK(fidelity(ghz, phi3_expected()) == Catch::Approx(1.0).margin(1e-12));
  }
  SECTION("non-unitary rejected") {
    StateVector s(1);
    Eigen::Matrix2cd bad;
    bad << 1, 0, 0, 2;
    CHECK_THROWS_AS(apply_1q(s, 0, bad), std::invalid_argument);
    CHECK_THROWS_AS(apply_1q(s, 1, mat_h()), std::invalid_argument);
  }
}

TEST_CASE("Ising evolution reproduces the cPhase construction", "[statevec]") {
  Rng rng(23);
  const double g = 1.7;
  SECTION("t = pi/g equals the edge-wise cPhase product, n <= 6") {
    for (int n = 2; n <= 6; ++n) {
      for (int rep = 0; rep < 5; ++rep) {
        const Graph graph = random_graph(n, 0.5, rng);
        StateVector ising = new_plus_state(n);
        evolve_ising(ising, graph, g, kPi / g);
        StateVector prod = new_plus_state(n);
        for (const auto& [a, b] : graph.edges()) apply_cphase(prod, a, b);
        CHECK(equal_up_to_global_phase(ising, prod, 1e-10));
      }
    }
  }
  SECTION("t = 0 is the identity") {
    StateVector s = random_state(3, rng);
    StateVector t = s;
    evolve_ising(t, Graph::path(3), g, 0.0);
    CHECK(fidelity(s, t) == Catch::Approx(1.0).margin(1e-12));
  }
  SECTION("diagonal phases add: two half-times equal one full time") {
    const Graph graph = Graph::cycle(4);
    StateVector a = random_state(4, rng);
    StateVector b = a;
    evolve_ising(a, graph, g, kPi / (2 * g));
    evolve_ising(a, graph, g, kPi / (2 * g));
    evolve_ising(b, graph, g, kPi / g);
    CHECK(fidelity(a, b) == Catch::Approx(1.0).margin(1e-12));
  }
}

TEST_CASE("measurement on the three-qubit cluster is correlated", "[statevec]") {
  // Z on 1, X on 2, Z on 3: individually random, product of eigenvalues +1
  int valid_branches = 0;
  for (int bits = 0; bits < 8; ++bits) {
    const int s1 = bits & 1, s2 = (bits >> 1) & 1, s3 = (bits >> 2) & 1;
    try {
      MeasureResult r1 = measure(phi3_expected(), 0, MeasurementBasis::z(), s1);
      MeasureResult r2 =
          measure(r1.post, 0, MeasurementBasis::equatorial(0.0), s2);
      MeasureResult r3 = measure(r2.post, 0, MeasurementBasis::z(), s3);
      (void)r3;
      ++valid_branches;
      CHECK((s1 ^ s2 ^ s3) == 0);
    } catch (const ForbiddenBranchError&) {
    }
  }
  CHECK(valid_branches == 4);
}

TEST_CASE("measurement basics", "[statevec]") {
  SECTION("X on |+> is deterministic") {
    MeasureResult r =
        measure(new_plus_state(1), 0, MeasurementBasis::equatorial(0.0), 0);
    CHECK(r.probability == Catch::Approx(1.0).margin(1e-12));
    CHECK_THROWS_AS(
        measure(new_plus_state(1), 0, MeasurementBasis::equatorial(0.0), 1),
        ForbiddenBranchError);
  }
  SECTION("teleportation link: |out> = H e^{i phi Z/2} Z^s |in>") {
    Rng rng(5);
    for (int rep = 0; rep < 20; ++rep) {
      const StateVector in = random_state(1, rng);
      std::uniform_real_distribution<double> u(-kPi, kPi);
      const double phi = u(rng);
      StateVector joint = tensor(in, new_plus_state(1));
      apply_cphase(joint, 0, 1);
      for (int s = 0; s < 2; ++s) {
        MeasureResult r = measure(joint, 0, MeasurementBasis::equatorial(phi), s);
        CHECK(r.probability == Catch::Approx(0.5).margin(1e-10));
        StateVector expect = in;
        if (s == 1) apply_1q(expect, 0, mat_z());
        apply_1q(expect, 0, mat_exp_iz(phi));
        apply_1q(expect, 0, mat_h());
        CHECK(equal_up_to_global_phase(r.post, expect, 1e-10));
      }
    }
  }
  SECTION("branch completeness") {
    Rng rng(17);
    std::uniform_real_distribution<double> u(-kPi, kPi);
    for (int rep = 0; rep < 25; ++rep) {
      const StateVector s = random_state(4, rng);
      const auto basis = MeasurementBasis::equatorial(u(rng));
      auto [lo, hi] = measure_both(s, rep % 4, basis);
      CHECK(lo.probability + hi.probability ==
            Catch::Approx(1.0).margin(1e-10));
    }
  }
  SECTION("sampled measurement is reproducible") {
    Rng rng1(99), rng2(99);
    const StateVector s = phi3_expected();
    MeasureResult a = measure(s, 1, MeasurementBasis::equatorial(0.3), rng1);
    MeasureResult b = measure(s, 1, MeasurementBasis::equatorial(0.3), rng2);
    CHECK(a.outcome == b.outcome);
  }
}

TEST_CASE("equatorial angles canonicalize into (-pi/2, pi/2]", "[statevec]") {
  const auto a = MeasurementBasis::equatorial(2.0);
  CHECK(a.phi() > -kPi / 2);
  CHECK(a.phi() <= kPi / 2 + 1e-15);
  CHECK(a.flipped());

  CHECK(MeasurementBasis::equatorial(kPi / 2).phi() ==
        Catch::Approx(kPi / 2));
  CHECK_FALSE(MeasurementBasis::equatorial(kPi / 2).flipped());

  // O(phi + pi) = -O(phi): same projectors, outcome labels swapped
  Rng rng(3);
  const StateVector s = random_state(2, rng);
  const double phi = 0.7;
  MeasureResult direct = measure(s, 0, MeasurementBasis::equatorial(phi), 0);
  MeasureResult flipped =
      measure(s, 0, MeasurementBasis::equatorial(phi + kPi), 1);
  CHECK(direct.probability == Catch::Approx(flipped.probability).margin(1e-12));
  CHECK(fidelity(direct.post, flipped.post) ==
        Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("global-phase comparison", "[statevec]") {
  Rng rng(7);
  const StateVector psi = random_state(3, rng);
  StateVector shifted = psi;
  const cdouble phase = std::exp(cdouble{0, kPi / 7});
  for (auto& a : shifted.mutable_amplitudes()) a *= phase;
  CHECK(equal_up_to_global_phase(psi, shifted, 1e-12));

  StateVector zero(1), one(1, {cdouble{0, 0}, cdouble{1, 0}});
  CHECK_FALSE(equal_up_to_global_phase(zero, one, 1e-10));
  CHECK_THROWS_AS(equal_up_to_global_phase(psi, zero, 1e-10),
                  std::invalid_argument);

  // the two expansions of the two-qubit cluster agree
  StateVector c12 = new_plus_state(2);
  apply_cphase(c12, 0, 1);
  StateVector c21 = new_plus_state(2);
  apply_cphase(c21, 1, 0);
  CHECK(equal_up_to_global_phase(c12, c21, 1e-12));
}

TEST_CASE("norm is preserved by public operations", "[statevec]") {
  Rng rng(31);
  StateVector s = random_state(5, rng);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (int step = 0; step < 30; ++step) {
    switch (step % 4) {
      case 0: apply_cphase(s, step % 5, (step + 1) % 5); break;
      case 1: apply_1q(s, step % 5, random_unitary(rng)); break;
      case 2: evolve_ising(s, random_graph(5, 0.4, rng), 1.0, u(rng)); break;
      case 3: {
        MeasureResult r =
            measure(s, 0, MeasurementBasis::equatorial(u(rng)), rng);
        s = tensor(r.post, new_plus_state(1));
        break;
      }
    }
    CHECK(std::abs(s.norm_sq() - 1.0) < 1e-10);
  }
}

TEST_CASE("cPhase conjugation matches the Pauli rewrite rules", "[statevec]") {
  Rng rng(41);
  std::uniform_int_distribution<int> letter(0, 3);
  const char letters[] = "IXYZ";
  for (int rep = 0; rep < 40; ++rep) {
    const int n = 3;
    std::string word;
    for (int q = 0; q < n; ++q) word += letters[letter(rng)];
    const PauliOperator p = PauliOperator::from_string(word);
    const int a = rep % n;
    const int b = (a + 1 + rep % (n - 1)) % n;
    if (a == b) continue;

    const StateVector psi = random_state(n, rng);
    StateVector lhs = psi;
    apply_cphase(lhs, a, b);
    apply_pauli(lhs, p);
    apply_cphase(lhs, a, b);
    StateVector rhs = psi;
    apply_pauli(rhs, conjugate_by_cphase(p, a, b));
    // exact equality including phase, not just up to a global factor
    for (std::size_t i = 0; i < lhs.dim(); ++i)
      CHECK(std::abs(lhs.amplitude(i) - rhs.amplitude(i)) < 1e-12);
  }
}

TEST_CASE("tensor and permute", "[statevec]") {
  Rng rng(13);
  const StateVector a = random_state(2, rng);
  const StateVector b = random_state(1, rng);
  const StateVector ab = tensor(a, b);
  CHECK(ab.n_qubits() == 3);
  CHECK(std::abs(ab.amplitude(5) - a.amplitude(1) * b.amplitude(1)) < 1e-12);

  // moving the high qubit to the bottom
  const std::vector<int> perm = {1, 2, 0};
  const StateVector moved = permute_qubits(ab, perm);
  CHECK(std::abs(moved.amplitude(0b011) - ab.amplitude(0b101)) < 1e-12);

  CHECK_THROWS_AS(permute_qubits(ab, std::vector<int>{0, 0, 1}),
                  std::invalid_argument);
}

TEST_CASE("amplitude CSV round trip", "[statevec]") {
  Rng rng(19);
  const StateVector s = random_state(3, rng);
  std::stringstream buf;
  dump_amplitudes_csv(s, buf);
  const StateVector back = load_amplitudes_csv(buf);
  REQUIRE(back.n_qubits() == 3);
  CHECK(fidelity(s, back) == Catch::Approx(1.0).margin(1e-12));
}
