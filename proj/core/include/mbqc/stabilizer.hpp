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

#include <vector>

#include "mbqc/graph.hpp"
#include "mbqc/pauli.hpp"
#include "mbqc/state_vector.hpp"

namespace mbqc {

/// |G> = prod_{(a,b) in E} cPhase_{a,b} |+>^n.
StateVector graph_state(const Graph& g);

/// One generator K_a = X_a prod_{b in Nb(a)} Z_b per vertex, phase +1.
std::vector<PauliOperator> stabilizer_generators(const Graph& g);

struct VertexDeletion {
  Graph graph;              // g minus v; vertices above v shift down by one
  PauliOperator correction; // on the reduced register: identity for outcome 0,
                            // prod Z over the former neighbors for outcome 1
};

/// Effect of a Z measurement with outcome s on vertex v of a graph state.
VertexDeletion delete_vertex_z(const Graph& g, int v, int outcome);

}  // namespace mbqc
