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
#include <nlohmann/json.hpp>
#include <sstream>

#include "mbqc/compiler.hpp"
#include "mbqc/graph.hpp"
#include "mbqc/pattern.hpp"
#include "test_util.hpp"

using namespace mbqc;
using namespace mbqc::test;

TEST_CASE("graph edge-list format", "[formats]") {
  SECTION("parses a path") {
    std::istringstream in("3 2\n0 1\n1 2\n");
    CHECK(load_graph(in) == Graph::path(3));
  }
  SECTION("rejects self-loops with the offending line") {
    std::istringstream in("2 1\n0 0\n");
    CHECK_THROWS_WITH(load_graph(in),
                      Catch::Matchers::ContainsSubstring("line 2"));
  }
  SECTION("rejects duplicate edges") {
    std::istringstream in("3 2\n0 1\n1 0\n");
    CHECK_THROWS_AS(load_graph(in), std::invalid_argument);
  }
  SECTION("rejects truncated files") {
    std::istringstream in("3 2\n0 1\n");
    CHECK_THROWS_AS(load_graph(in), std::invalid_argument);
  }
  SECTION("canonical save/load round trip is byte identical") {
    Rng rng(3);
    const Graph g = random_graph(6, 0.5, rng);
    const std::string once = graph_to_string(g);
    std::istringstream in(once);
    const std::string twice = graph_to_string(load_graph(in));
    CHECK(once == twice);
  }
  SECTION("missing file") {
    CHECK_THROWS_AS(load_graph_file("/nonexistent/graph.txt"),
                    std::invalid_argument);
  }
}

TEST_CASE("pattern JSON round trip", "[formats]") {
  Rng rng(5);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  const MeasurementPattern patterns[] = {
      rotation_pattern(u(rng), u(rng), u(rng)),
      cnot_pattern(),
      compile_circuit(
          Circuit{2, {RotGate{0, 0.4, -0.2, 1.0}, CnotGate{0, 1}}}),
  };
  for (const auto& p : patterns) {
    const nlohmann::json doc = pattern_to_json(p);
    const MeasurementPattern back = pattern_from_json(doc);
    CHECK(back.qubits == p.qubits);
    CHECK(back.inputs == p.inputs);
    CHECK(back.outputs == p.outputs);
    CHECK(back.edges == p.edges);
    CHECK(back.measures == p.measures);
    CHECK(back.byproducts == p.byproducts);
    CHECK((back.reference - p.reference).cwiseAbs().maxCoeff() < 1e-15);

    // behavioral equality on a forced branch
    const StateVector in = random_state(p.wire_count(), rng);
    const std::vector<int> bits(p.measured_count(), 0);
    const PatternRun r1 = run_pattern(p, in, bits);
    const PatternRun r2 = run_pattern(back, in, bits);
    CHECK(fidelity(r1.raw_output, r2.raw_output) >= 1.0 - 1e-12);
  }
}

TEST_CASE("tampered pattern files are rejected", "[formats]") {
  nlohmann::json doc = pattern_to_json(rotation_pattern(0.1, 0.2, 0.3));
  SECTION("wrong format marker") {
    doc["format"] = "something-else";
    CHECK_THROWS_AS(pattern_from_json(doc), std::invalid_argument);
  }
  SECTION("stored dependencies disagree with the trace") {
    doc["measurements"]["3"]["angle"]["sign_deps"] = std::vector<int>{1};
    CHECK_THROWS_AS(pattern_from_json(doc), std::invalid_argument);
  }
  SECTION("stored byproducts disagree with the trace") {
    doc["byproducts"]["4"]["x_deps"] = std::vector<int>{0};
    CHECK_THROWS_AS(pattern_from_json(doc), std::invalid_argument);
  }
}

TEST_CASE("compilation report serializes", "[formats]") {
  const Circuit c{1, {RotGate{0, 0.5, 0.5, 0.5}}};
  const CompilationReport r =
      verify_circuit(c, {.exhaustive = true, .n_random_inputs = 1, .seed = 1});
  const nlohmann::json j = report_to_json(r);
  CHECK(j.at("pattern_qubits").get<int>() == 5);
  CHECK(j.at("min_fidelity").get<double>() >= 1.0 - 1e-10);
  CHECK(j.at("passed").get<bool>());
  CHECK(j.at("per_branch_byproducts").size() == 16);
}
