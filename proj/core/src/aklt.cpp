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

#include "mbqc/aklt.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "mbqc/entanglement.hpp"
#include "mbqc/stabilizer.hpp"
#include "mbqc/state_vector.hpp"

namespace mbqc {

int virtual_count(SpinKind kind) {
  return kind == SpinKind::kSpinOne ? 2 : 3;
}

SpinNetState::SpinNetState(std::vector<int> dims) : dims_(std::move(dims)) {
  Eigen::Index total = 1;
  for (int d : dims_) {
    if (d < 2) throw std::invalid_argument("site dimension must be >= 2");
    total *= d;
  }
  amps_ = Eigen::VectorXcd::Zero(total);
  amps_[0] = 1.0;
}

void SpinNetState::renormalize() {
  const double n = amps_.norm();
  if (n <= 0.0) throw std::runtime_error("cannot normalize a zero vector");
  amps_ /= n;
}

void SpinNetState::apply_site_operator(int site, const Eigen::MatrixXcd& op) {
  if (site < 0 || site >= n_sites())
    throw std::invalid_argument("site index out of range");
  const int d = dims_[site];
  if (op.rows() != d || op.cols() != d)
    throw std::invalid_argument("site operator dimension mismatch");
  Eigen::Index stride = 1;
  for (int s = 0; s < site; ++s) stride *= dims_[s];
  const Eigen::Index block = stride * d;
  Eigen::VectorXcd next = Eigen::VectorXcd::Zero(amps_.size());
  for (Eigen::Index base = 0; base < amps_.size(); base += block)
    for (Eigen::Index low = 0; low < stride; ++low)
      for (int r = 0; r < d; ++r) {
        cdouble acc{0, 0};
        for (int c = 0; c < d; ++c)
          acc += op(r, c) * amps_[base + c * stride + low];
        next[base + r * stride + low] = acc;
      }
  amps_ = std::move(next);
}

double SpinNetState::site_entropy(std::span<const int> sites_a) const {
  std::vector<bool> in_a(dims_.size(), false);
  for (int s : sites_a) {
    if (s < 0 || s >= n_sites())
      throw std::invalid_argument("bipartition site out of range");
    in_a[s] = true;
  }
  Eigen::Index dim_a = 1, dim_b = 1;
  for (int s = 0; s < n_sites(); ++s) (in_a[s] ? dim_a : dim_b) *= dims_[s];
  if (dim_a == 1 || dim_b == 1)
    throw std::invalid_argument("bipartition must be proper");
  Eigen::MatrixXcd m(dim_a, dim_b);
  for (Eigen::Index i = 0; i < amps_.size(); ++i) {
    Eigen::Index rest = i, ia = 0, ib = 0, sa = 1, sb = 1;
    for (int s = 0; s < n_sites(); ++s) {
      const int digit = static_cast<int>(rest % dims_[s]);
      rest /= dims_[s];
      if (in_a[s]) {
        ia += digit * sa;
        sa *= dims_[s];
      } else {
        ib += digit * sb;
        sb *= dims_[s];
      }
    }
    m(ia, ib) = amps_[i];
  }
  const auto svals = m.jacobiSvd().singularValues();
  double entropy = 0.0;
  for (Eigen::Index k = 0; k < svals.size(); ++k) {
    const double p = svals[k] * svals[k];
    if (p > 1e-12) entropy -= p * std::log2(p);
  }
  return entropy;
}

Eigen::MatrixXcd spin_matrix(double s, char axis) {
  const int d = static_cast<int>(std::lround(2 * s)) + 1;
  Eigen::MatrixXcd sp = Eigen::MatrixXcd::Zero(d, d);
  for (int j = 1; j < d; ++j) {
    const double m = s - j;
    sp(j - 1, j) = std::sqrt(s * (s + 1) - m * (m + 1));
  }
  const Eigen::MatrixXcd sm = sp.adjoint();
  switch (axis) {
    case 'x': return (sp + sm) / 2.0;
    case 'y': return (sp - sm) / cdouble{0, 2};
    case 'z': {
      Eigen::MatrixXcd sz = Eigen::MatrixXcd::Zero(d, d);
      for (int j = 0; j < d; ++j) sz(j, j) = s - j;
      return sz;
    }
    default: throw std::invalid_argument("axis must be x, y or z");
  }
}

namespace {

double log_binom(int n, int k) {
  return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
}

}  // namespace

SpinNetState build_aklt(const Multigraph& lattice, SpinKind kind) {
  const int sites = lattice.n_vertices();
  if (sites < 1) throw std::invalid_argument("empty lattice");
  const int v = virtual_count(kind);
  const int total_virtual = sites * v;
  if (total_virtual > kMaxQubits)
    throw std::invalid_argument("virtual qubit budget exceeded");

  // one singlet per unit of multiplicity; slots allocated per site in edge
  // order, leftovers dangle in |0>
  std::vector<int> used(sites, 0);
  std::vector<std::pair<int, int>> pairs;  // global virtual qubit ids
  for (const auto& [e, m] : lattice.edge_multiplicities()) {
    for (int rep = 0; rep < m; ++rep) {
      if (used[e.first] >= v || used[e.second] >= v)
        throw std::invalid_argument("site degree exceeds its virtual count");
      pairs.emplace_back(e.first * v + used[e.first]++,
                         e.second * v + used[e.second]++);
    }
  }

  SpinNetState state(std::vector<int>(sites, v + 1));
  state.amplitudes().setZero();

  // enumerate singlet configurations: bit k picks |01> vs |10> on pair k
  const double singlet_amp = std::pow(2.0, -0.5 * pairs.size());
  std::vector<double> proj_weight(v + 1);
  for (int w = 0; w <= v; ++w)
    proj_weight[w] = std::exp(-0.5 * log_binom(v, w));

  std::vector<int> weight(sites);
  for (std::uint64_t cfg = 0; cfg < (std::uint64_t{1} << pairs.size()); ++cfg) {
    std::fill(weight.begin(), weight.end(), 0);
    // singlet (|01> - |10>)/sqrt2: bit 0 -> first member up (0), second down (1)
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const bool swap = (cfg >> k) & 1;
      const int down = swap ? pairs[k].first : pairs[k].second;
      ++weight[down / v];
    }
    const double sign = std::popcount(cfg) % 2 ? -1.0 : 1.0;
    double amp = sign * singlet_amp;
    Eigen::Index index = 0, stride = 1;
    for (int s = 0; s < sites; ++s) {
      amp *= proj_weight[weight[s]];
      index += weight[s] * stride;
      stride *= v + 1;
    }
    state.amplitudes()[index] += amp;
  }
  state.renormalize();
  return state;
}

char axis_letter(Axis a) {
  switch (a) {
    case Axis::kX: return 'x';
    case Axis::kY: return 'y';
    default: return 'z';
  }
}

Eigen::Matrix4cd povm_element(Axis axis) {
  const Eigen::MatrixXcd s = spin_matrix(1.5, axis_letter(axis));
  const Eigen::MatrixXcd f =
      (s * s - 0.25 * Eigen::MatrixXcd::Identity(4, 4)) / std::sqrt(6.0);
  return Eigen::Matrix4cd(f);
}

namespace {

PovmSample run_povm(const SpinNetState& state, Rng* rng,
                    std::span<const Axis> forced) {
  for (int d : state.dims())
    if (d != 4)
      throw std::invalid_argument("POVM requires spin-3/2 sites");
  PovmSample sample{.outcomes = {}, .post = state, .probability = 1.0};
  const Eigen::Matrix4cd fx = povm_element(Axis::kX);
  const Eigen::Matrix4cd fy = povm_element(Axis::kY);
  const Eigen::Matrix4cd fz = povm_element(Axis::kZ);
  const Eigen::Matrix4cd* f[3] = {&fx, &fy, &fz};
  for (int site = 0; site < state.n_sites(); ++site) {
    double p[3];
    SpinNetState cand[3] = {sample.post, sample.post, sample.post};
    for (int a = 0; a < 3; ++a) {
      cand[a].apply_site_operator(site, *f[a]);
      p[a] = cand[a].norm_sq();
    }
    int pick;
    if (rng) {
      std::uniform_real_distribution<double> dist(0.0, 1.0);
      const double r = dist(*rng) * (p[0] + p[1] + p[2]);
      pick = r < p[0] ? 0 : (r < p[0] + p[1] ? 1 : 2);
    } else {
      pick = static_cast<int>(forced[site]);
      if (p[pick] < kForbiddenBranchTol)
        throw ForbiddenBranchError("forced POVM outcome has probability " +
                                   std::to_string(p[pick]));
    }
    sample.outcomes.push_back(static_cast<Axis>(pick));
    sample.probability *= p[pick];
    sample.post = std::move(cand[pick]);
    sample.post.renormalize();
  }
  return sample;
}

}  // namespace

PovmSample sample_povm(const SpinNetState& state, Rng& rng) {
  return run_povm(state, &rng, {});
}

PovmSample sample_povm(const SpinNetState& state, std::span<const Axis> forced) {
  if (forced.size() != static_cast<std::size_t>(state.n_sites()))
    throw std::invalid_argument("need one forced outcome per site");
  return run_povm(state, nullptr, forced);
}

PovmReduction reduce_to_graph(const Multigraph& lattice,
                              std::span<const Axis> outcomes) {
  if (outcomes.size() != static_cast<std::size_t>(lattice.n_vertices()))
    throw std::invalid_argument("need one outcome per lattice site");
  // same-axis connected components via union-find
  std::vector<int> parent(lattice.n_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [e, m] : lattice.edge_multiplicities())
    if (outcomes[e.first] == outcomes[e.second])
      parent[find(e.first)] = find(e.second);

  std::map<int, std::vector<int>> groups;
  for (int s = 0; s < lattice.n_vertices(); ++s)
    groups[find(s)].push_back(s);
  std::vector<std::vector<int>> merge_sets;
  for (auto& [root, members] : groups)
    if (members.size() > 1) merge_sets.push_back(std::move(members));

  const Multigraph contracted = contract_edges(lattice, merge_sets);
  PovmReduction red;
  red.graph = reduce_multigraph(contracted);
  red.site_component = contraction_vertex_map(lattice.n_vertices(), merge_sets);
  return red;
}

PovmReduction reduce_to_graph(const Graph& lattice,
                              std::span<const Axis> outcomes) {
  return reduce_to_graph(Multigraph(lattice), outcomes);
}

ReductionCheck check_reduction_consistency(const Multigraph& lattice,
                                           std::span<const Axis> outcomes) {
  const SpinNetState aklt = build_aklt(lattice, SpinKind::kSpinThreeHalf);
  const PovmSample post = sample_povm(aklt, outcomes);
  const PovmReduction red = reduce_to_graph(lattice, outcomes);
  const StateVector predicted = graph_state(red.graph);

  ReductionCheck check;
  check.pass = true;
  const int k = red.graph.n_vertices();
  for (std::uint32_t mask = 1; k >= 2 && mask < (1u << (k - 1)); ++mask) {
    std::vector<int> sites_a;
    for (int s = 0; s < lattice.n_vertices(); ++s)
      if ((mask >> red.site_component[s]) & 1) sites_a.push_back(s);
    const double s_phys = post.post.site_entropy(sites_a);
    const double s_graph = vn_entropy(predicted, mask);
    const double err = std::abs(s_phys - s_graph);
    check.max_entropy_error = std::max(check.max_entropy_error, err);
    ++check.bipartitions_checked;
    if (err > kReductionEntropyTol) check.pass = false;
  }
  return check;
}

ReductionCheck check_reduction_consistency(const Graph& lattice,
                                           std::span<const Axis> outcomes) {
  return check_reduction_consistency(Multigraph(lattice), outcomes);
}

std::vector<Multigraph> closed_test_patches() {
  Multigraph theta(2);
  theta.add_edge(0, 1, 3);
  Multigraph ring4(Graph::cycle(4));
  ring4.add_edge(0, 1);
  ring4.add_edge(2, 3);
  Multigraph k4(4);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) k4.add_edge(a, b);
  return {theta, ring4, k4};
}

Graph honeycomb_brick_wall(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("empty lattice");
  Graph g(rows * cols);
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
      if (r + 1 < rows && (r + c) % 2 == 0) g.add_edge(id(r, c), id(r + 1, c));
    }
  return g;
}

bool lattice_spans(const Graph& lattice, int rows, int cols,
                   std::span<const Axis> outcomes) {
  const PovmReduction red = reduce_to_graph(lattice, outcomes);
  std::vector<int> parent(red.graph.n_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [a, b] : red.graph.edges()) parent[find(a)] = find(b);
  std::set<int> left, right;
  for (int r = 0; r < rows; ++r) {
    left.insert(find(red.site_component[r * cols]));
    right.insert(find(red.site_component[r * cols + cols - 1]));
  }
  for (int root : left)
    if (right.count(root)) return true;
  return false;
}

double percolation_spanning_fraction(int length, long trials,
                                     std::uint64_t seed) {
  if (length < 2) throw std::invalid_argument("lattice too small");
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  const Graph lattice = honeycomb_brick_wall(length, length);
  std::vector<std::uint8_t> spans(trials);
  parallel_chunks(trials, [&](long lo, long hi) {
    for (long t = lo; t < hi; ++t) {
      Rng rng(derive_subseed(seed, static_cast<std::uint64_t>(t)));
      std::uniform_int_distribution<int> dist(0, 2);
      std::vector<Axis> outcomes(lattice.n_vertices());
      for (auto& a : outcomes) a = static_cast<Axis>(dist(rng));
      spans[t] = lattice_spans(lattice, length, length, outcomes) ? 1 : 0;
    }
  });
  long count = 0;
  for (long t = 0; t < trials; ++t) count += spans[t];
  return static_cast<double>(count) / static_cast<double>(trials);
}

void LogicalQubit::normalize() {
  const double n = std::sqrt(std::norm(a0) + std::norm(a1));
  if (n <= 0.0) throw std::runtime_error("cannot normalize a zero vector");
  a0 /= n;
  a1 /= n;
}

bool LogicalQubit::is_normalized(double tol) const {
  return std::abs(std::norm(a0) + std::norm(a1) - 1.0) <= tol;
}

std::array<WireOutcome, 3> wire_step(const LogicalQubit& q,
                                     const WireBasis& basis) {
  if (!q.is_normalized())
    throw std::invalid_argument("wire_step: input not normalized");
  // Clebsch-Gordan expansion of the decoupled end spin against the rest of
  // the chain, site basis (|+1>, |0>, |-1>):
  //   sqrt(2/3) [ (a0/sqrt2 |0> + a1 |-1>) (x) |G0>
  //             - (a0 |+1> + a1/sqrt2 |0>) (x) |G1> ]
  const double r23 = std::sqrt(2.0 / 3.0);
  const double r2 = std::sqrt(2.0);
  const Eigen::Vector3cd v0{cdouble{0, 0}, q.a0 / r2, q.a1};
  const Eigen::Vector3cd v1{q.a0, q.a1 / r2, cdouble{0, 0}};

  const Eigen::Vector3cd x_vec{-1 / r2, 0, 1 / r2};
  const Eigen::Vector3cd y_vec{1 / r2, 0, 1 / r2};
  const Eigen::Vector3cd z_vec{0, 1, 0};
  const cdouble ea = std::exp(cdouble{0, -basis.alpha});
  const Eigen::Vector3cd b_plus = (1.0 + ea) / 2.0 * x_vec + (1.0 - ea) / 2.0 * y_vec;
  const Eigen::Vector3cd b_minus = (1.0 - ea) / 2.0 * x_vec + (1.0 + ea) / 2.0 * y_vec;

  std::array<WireOutcome, 3> out;
  const Eigen::Vector3cd* beta[3] = {&b_plus, &b_minus, &z_vec};
  const WireOutcome::Label labels[3] = {WireOutcome::Label::kBPlus,
                                        WireOutcome::Label::kBMinus,
                                        WireOutcome::Label::kZ};
  for (int k = 0; k < 3; ++k) {
    const cdouble c0 = r23 * beta[k]->dot(v0);   // dot conjugates the left arg
    const cdouble c1 = -r23 * beta[k]->dot(v1);
    WireOutcome& o = out[k];
    o.label = labels[k];
    o.probability = std::norm(c0) + std::norm(c1);
    const double n = std::sqrt(o.probability);
    o.state = {c0 / n, c1 / n};
    switch (o.label) {
      case WireOutcome::Label::kBPlus:
        o.x_corr = 1; o.z_corr = 0; o.rotation = -basis.alpha; break;
      case WireOutcome::Label::kBMinus:
        o.x_corr = 1; o.z_corr = 1; o.rotation = -basis.alpha; break;
      case WireOutcome::Label::kZ:
        o.x_corr = 0; o.z_corr = 1; o.rotation = 0.0; break;
    }
  }
  return out;
}

WireBasis adapted_wire_basis(double theta, int x_parity) {
  return WireBasis::rotated((x_parity & 1) ? theta : -theta);
}

}  // namespace mbqc
