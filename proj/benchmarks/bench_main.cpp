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

#include <benchmark/benchmark.h>

#include "mbqc/aklt.hpp"
#include "mbqc/entanglement.hpp"
#include "mbqc/pattern.hpp"
#include "mbqc/stabilizer.hpp"

namespace {

using namespace mbqc;

void BM_cphase_kernel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  StateVector s = new_plus_state(n);
  for (auto _ : state) {
    apply_cphase(s, 0, n - 1);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(s.dim()));
}
BENCHMARK(BM_cphase_kernel)->Arg(12)->Arg(16)->Arg(20);

void BM_single_qubit_gate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  StateVector s = new_plus_state(n);
  const Eigen::Matrix2cd h =
      (Eigen::Matrix2cd() << 1, 1, 1, -1).finished() / std::sqrt(2.0);
  for (auto _ : state) {
    apply_1q(s, n / 2, h);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(s.dim()));
}
BENCHMARK(BM_single_qubit_gate)->Arg(12)->Arg(16)->Arg(20);

void BM_graph_state(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = Graph::path(n);
  for (auto _ : state) {
    StateVector s = graph_state(g);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
}
BENCHMARK(BM_graph_state)->Arg(10)->Arg(16);

void BM_rotation_branch_enumeration(benchmark::State& state) {
  const MeasurementPattern p = rotation_pattern(0.3, -0.8, 1.1);
  const StateVector in = new_plus_state(1);
  for (auto _ : state) {
    auto branches = enumerate_branches(p, in);
    benchmark::DoNotOptimize(branches.data());
  }
}
BENCHMARK(BM_rotation_branch_enumeration);

void BM_percolation_trial(benchmark::State& state) {
  const int length = static_cast<int>(state.range(0));
  const Graph lattice = honeycomb_brick_wall(length, length);
  Rng rng(7);
  std::uniform_int_distribution<int> dist(0, 2);
  std::vector<Axis> outcomes(lattice.n_vertices());
  for (auto _ : state) {
    for (auto& a : outcomes) a = static_cast<Axis>(dist(rng));
    benchmark::DoNotOptimize(
        lattice_spans(lattice, length, length, outcomes));
  }
}
BENCHMARK(BM_percolation_trial)->Arg(10)->Arg(20);

void BM_vn_entropy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const StateVector s = graph_state(Graph::path(n));
  std::uint32_t mask = 0;
  for (int q = 0; q < n; q += 2) mask |= 1u << q;
  for (auto _ : state)
    benchmark::DoNotOptimize(vn_entropy(s, mask));
}
BENCHMARK(BM_vn_entropy)->Arg(6)->Arg(8);

void BM_entanglement_width(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const StateVector s = graph_state(Graph::path(n));
  for (auto _ : state)
    benchmark::DoNotOptimize(entanglement_width(s));
}
BENCHMARK(BM_entanglement_width)->Arg(5)->Arg(6)->Arg(7);

void BM_aklt_build(benchmark::State& state) {
  std::vector<Multigraph> patches = closed_test_patches();
  for (auto _ : state) {
    SpinNetState s = build_aklt(patches[2], SpinKind::kSpinThreeHalf);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
}
BENCHMARK(BM_aklt_build);

}  // namespace

BENCHMARK_MAIN();
