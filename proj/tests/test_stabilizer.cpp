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

#include <algorithm>
#include <bit>
#include <catch2/catch_amalgamated.hpp>
#include <numeric>

#include "mbqc/stabilizer.hpp"
#include "test_util.hpp"

using namespace mbqc;
using namespace mbqc::test;

TEST_CASE("graph states from small graphs", "[stabilizer]") {
  SECTION("two-vertex path") {
    const StateVector s = graph_state(Graph::path(2));
    CHECK(std::abs(s.amplitude(3) + 0.5) < 1e-12);
  }
  SECTION("edgeless graph is a plus product") {
    const StateVector s = graph_state(Graph(4));
    CHECK(fidelity(s, new_plus_state(4)) == Catch::Approx(1.0).margin(1e-12));
  }
  SECTION("three-vertex path") {
    const StateVector s = graph_state(Graph::path(3));
    StateVector direct = new_plus_state(3);
    apply_cphase(direct, 1, 0);
    apply_cphase(direct, 1, 2);
    CHECK(fidelity(s, direct) == Catch::Approx(1.0).margin(1e-12));
  }
}

TEST_CASE("stabilizer generators", "[stabilizer]") {
  SECTION("path on three vertices") {
    const auto gens = stabilizer_generators(Graph::path(3));
    REQUIRE(gens.size() == 3);
    CHECK(gens[0].to_string() == "+XZI");
    CHECK(gens[1].to_string() == "+ZXZ");
    CHECK(gens[2].to_string() == "+IZX");
  }
  SECTION("isolated vertex") {
    const auto gens = stabilizer_generators(Graph(1));
    REQUIRE(gens.size() == 1);
    CHECK(gens[0].to_string() == "+X");
  }
  SECTION("2x2 grid: X plus Z on both neighbors") {
    const auto gens = stabilizer_generators(Graph::grid(2, 2));
    for (const auto& k : gens) {
      CHECK(std::popcount(k.x_mask) == 1);
      CHECK(std::popcount(k.z_mask) == 2);
      CHECK(k.phase_pow == 0);
    }
  }
}

TEST_CASE("every generator stabilizes the graph state", "[stabilizer]") {
  Rng rng(101);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 7);  // up to 8
    const Graph g = random_graph(n, 0.45, rng);
    const StateVector s = graph_state(g);
    for (const auto& k : stabilizer_generators(g))
      CHECK(expectation(s, k) == Catch::Approx(1.0).margin(1e-10));
  }
}

TEST_CASE("stabilizer group closure", "[stabilizer]") {
  Rng rng(103);
  for (int rep = 0; rep < 10; ++rep) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const Graph g = random_graph(n, 0.5, rng);
    const StateVector s = graph_state(g);
    const auto gens = stabilizer_generators(g);
    const unsigned subset = static_cast<unsigned>(rng() % (1u << n));
    PauliOperator prod = PauliOperator::identity(n);
    for (int a = 0; a < n; ++a)
      if ((subset >> a) & 1) prod = prod * gens[a];
    CHECK(expectation(s, prod) == Catch::Approx(1.0).margin(1e-10));
  }
}

TEST_CASE("GHZ expectations", "[stabilizer]") {
  std::vector<cdouble> amps(8, cdouble{0, 0});
  amps[0] = amps[7] = 1.0 / std::sqrt(2.0);
  const StateVector ghz(3, std::move(amps));
  CHECK(expectation(ghz, PauliOperator::from_string("XXX")) ==
        Catch::Approx(1.0).margin(1e-12));
  CHECK(expectation(ghz, PauliOperator::from_string("XYY")) ==
        Catch::Approx(-1.0).margin(1e-12));
}

TEST_CASE("pauli algebra", "[stabilizer]") {
  SECTION("product phase bookkeeping") {
    const auto x = PauliOperator::from_string("XI");
    const auto z = PauliOperator::from_string("ZI");
    const auto y = PauliOperator::from_string("YI");
    CHECK((x * z).to_string() == "-iYI");  // XZ = -iY
    CHECK((x * z).phase_pow == 0);         // canonical X-before-Z, no crossing
    CHECK((z * x).to_string() == "+iYI");  // ZX = +iY, one crossing
    CHECK((z * x).phase_pow == 2);
    CHECK((y * y).to_string() == "+II");
    CHECK((x * y).to_string() == "+iZI");
  }
  SECTION("squares to +-identity") {
    Rng rng(5);
    const char letters[] = "IXYZ";
    for (int rep = 0; rep < 20; ++rep) {
      std::string word;
      for (int q = 0; q < 4; ++q) word += letters[rng() % 4];
      const auto p = PauliOperator::from_string(word);
      const auto sq = p * p;
      CHECK(sq.is_identity_mask());
      CHECK((sq.phase_pow == 0 || sq.phase_pow == 2));
      // Hermitian single words square to +I
      CHECK(sq.phase_pow == 0);
      CHECK(p.is_hermitian());
    }
  }
}

TEST_CASE("cPhase conjugation rules", "[stabilizer]") {
  const auto xa = PauliOperator::from_string("XI");
  CHECK(conjugate_by_cphase(xa, 0, 1).to_string() == "+XZ");
  const auto za = PauliOperator::from_string("ZI");
  CHECK(conjugate_by_cphase(za, 0, 1).to_string() == "+ZI");

  // X_a X_b maps to the product (X_a Z_b)(Z_a X_b), sign included
  const auto xx = PauliOperator::from_string("XX");
  const auto composed = PauliOperator::from_string("XZ") *
                        PauliOperator::from_string("ZX");
  CHECK(conjugate_by_cphase(xx, 0, 1) == composed);
}

TEST_CASE("conjugation agrees with dense matrix conjugation", "[stabilizer]") {
  Rng rng(7);
  const char letters[] = "IXYZ";
  for (int n = 2; n <= 4; ++n) {
    for (int rep = 0; rep < 10; ++rep) {
      std::string word;
      for (int q = 0; q < n; ++q) word += letters[rng() % 4];
      const auto p = PauliOperator::from_string(word);
      const int a = static_cast<int>(rng() % n);
      int b = static_cast<int>(rng() % n);
      if (a == b) b = (b + 1) % n;

      const auto conj = conjugate_by_cphase(p, a, b);
      Eigen::MatrixXcd cp =
          Eigen::MatrixXcd::Identity(std::size_t{1} << n, std::size_t{1} << n);
      const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
      for (std::size_t i = 0; i < (std::size_t{1} << n); ++i)
        if ((i & mask) == mask) cp(i, i) = -1;
      const Eigen::MatrixXcd expect = cp * pauli_to_matrix(p) * cp;
      CHECK((pauli_to_matrix(conj) - expect).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("Z deletion of a vertex", "[stabilizer]") {
  SECTION("middle of a path, outcome 0") {
    const auto del = delete_vertex_z(Graph::path(3), 1, 0);
    CHECK(del.graph.n_vertices() == 2);
    CHECK(del.graph.n_edges() == 0);
    CHECK(del.correction.is_identity_mask());
  }
  SECTION("middle of a path, outcome 1") {
    const auto del = delete_vertex_z(Graph::path(3), 1, 1);
    CHECK(del.correction.to_string() == "+ZZ");
  }
  SECTION("vertex absent") {
    CHECK_THROWS_AS(delete_vertex_z(Graph::path(3), 3, 0),
                    std::invalid_argument);
  }
}

TEST_CASE("Z deletion end to end on graph states", "[stabilizer]") {
  Rng rng(113);
  for (int rep = 0; rep < 12; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 5);  // up to 6
    const Graph g = random_graph(n, 0.5, rng);
    const StateVector gs = graph_state(g);
    for (int v = 0; v < n; ++v) {
      for (int s = 0; s < 2; ++s) {
        const MeasureResult res = measure(gs, v, MeasurementBasis::z(), s);
        const auto del = delete_vertex_z(g, v, s);
        StateVector corrected = res.post;
        apply_pauli(corrected, del.correction);
        CHECK(fidelity(corrected, graph_state(del.graph)) >= 1.0 - 1e-10);
      }
    }
  }
}

TEST_CASE("multigraph mod-2 reduction", "[stabilizer]") {
  Multigraph mg(3);
  mg.add_edge(0, 1, 2);  // even: deleted
  mg.add_edge(1, 2, 3);  // odd: kept
  const Graph g = reduce_multigraph(mg);
  CHECK_FALSE(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));

  const Multigraph simple(Graph::cycle(4));
  CHECK(reduce_multigraph(simple) == Graph::cycle(4));
}

TEST_CASE("edge contraction", "[stabilizer]") {
  SECTION("triangle edge becomes a double edge") {
    const Multigraph tri(Graph::cycle(3));
    const Multigraph out = contract_edges(tri, {{0, 1}});
    CHECK(out.n_vertices() == 2);
    CHECK(out.multiplicity(0, 1) == 2);
  }
  SECTION("contracting nothing is the identity") {
    const Multigraph mg(Graph::grid(2, 3));
    CHECK(contract_edges(mg, {}) == mg);
  }
  SECTION("hexagon with one adjacent pair merged gives a 5-cycle") {
    const Multigraph hex(Graph::cycle(6));
    const Multigraph out = contract_edges(hex, {{0, 1}});
    CHECK(reduce_multigraph(out) == Graph::cycle(5));
  }
  SECTION("disconnected merge set is rejected") {
    const Multigraph path(Graph::path(3));
    CHECK_THROWS_AS(contract_edges(path, {{0, 2}}), std::invalid_argument);
  }
}

namespace {

// sequential pairwise contraction of the same edge set, in a shuffled order
Graph contract_sequentially(const Multigraph& mg,
                            std::vector<std::pair<int, int>> to_contract,
                            Rng& rng) {
  std::shuffle(to_contract.begin(), to_contract.end(), rng);
  Multigraph current = mg;
  std::vector<int> where(mg.n_vertices());
  std::iota(where.begin(), where.end(), 0);
  for (const auto& [a, b] : to_contract) {
    const int ca = where[a], cb = where[b];
    if (ca == cb) continue;  // already merged through earlier contractions
    const auto map = contraction_vertex_map(current.n_vertices(), {{ca, cb}});
    current = contract_edges(current, {{ca, cb}});
    for (auto& w : where) w = map[w];
  }
  return reduce_multigraph(current);
}

}  // namespace

TEST_CASE("contraction is order independent", "[stabilizer]") {
  Rng rng(211);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 4 + static_cast<int>(rng() % 5);
    Multigraph mg(n);
    std::vector<std::pair<int, int>> all_edges;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng() % 3 == 0) {
          mg.add_edge(a, b, 1 + static_cast<int>(rng() % 3));
          all_edges.emplace_back(a, b);
        }
    if (all_edges.empty()) continue;

    // pick a subset of edges to contract
    std::vector<std::pair<int, int>> chosen;
    for (const auto& e : all_edges)
      if (rng() % 2 == 0) chosen.push_back(e);
    if (chosen.empty()) chosen.push_back(all_edges.front());

    // one-shot contraction over the connected components of the chosen set
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& [a, b] : chosen) parent[find(a)] = find(b);
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < n; ++v) groups[find(v)].push_back(v);
    std::vector<std::vector<int>> merge_sets;
    for (auto& [root, members] : groups)
      if (members.size() > 1) merge_sets.push_back(members);

    const Graph one_shot =
        reduce_multigraph(contract_edges(mg, merge_sets));
    const Graph seq1 = contract_sequentially(mg, chosen, rng);
    const Graph seq2 = contract_sequentially(mg, chosen, rng);
    CHECK(one_shot == seq1);
    CHECK(one_shot == seq2);
  }
}
