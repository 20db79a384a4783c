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

#include "mbqc/stabilizer.hpp"

#include <stdexcept>

namespace mbqc {

StateVector graph_state(const Graph& g) {
  if (g.n_vertices() < 1 || g.n_vertices() > kMaxQubits)
    throw std::invalid_argument("graph_state: vertex count out of range");
  StateVector s = new_plus_state(g.n_vertices());
  for (const auto& [a, b] : g.edges()) apply_cphase(s, a, b);
  return s;
}

std::vector<PauliOperator> stabilizer_generators(const Graph& g) {
  std::vector<PauliOperator> out;
  out.reserve(g.n_vertices());
  for (int a = 0; a < g.n_vertices(); ++a) {
    PauliOperator k = PauliOperator::identity(g.n_vertices());
    k.x_mask = std::uint64_t{1} << a;
    for (int b : g.neighbors(a)) k.z_mask |= std::uint64_t{1} << b;
    out.push_back(k);
  }
  return out;
}

VertexDeletion delete_vertex_z(const Graph& g, int v, int outcome) {
  if (v < 0 || v >= g.n_vertices())
    throw std::invalid_argument("delete_vertex_z: vertex out of range");
  if (outcome != 0 && outcome != 1)
    throw std::invalid_argument("delete_vertex_z: outcome must be 0 or 1");
  if (g.n_vertices() < 2)
    throw std::invalid_argument("delete_vertex_z: nothing would remain");
  const int n = g.n_vertices();
  auto shift = [v](int w) { return w > v ? w - 1 : w; };
  Graph reduced(n - 1);
  for (const auto& [a, b] : g.edges())
    if (a != v && b != v) reduced.add_edge(shift(a), shift(b));
  PauliOperator corr = PauliOperator::identity(n - 1);
  if (outcome == 1)
    for (int w : g.neighbors(v))
      corr.z_mask |= std::uint64_t{1} << shift(w);
  return {std::move(reduced), corr};
}

}  // namespace mbqc
