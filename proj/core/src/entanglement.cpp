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

#include "mbqc/entanglement.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace mbqc {

namespace {

constexpr double kSchmidtCutoff = 1e-12;

double entropy_from_singular_values(const Eigen::VectorXd& svals) {
  double entropy = 0.0;
  for (Eigen::Index k = 0; k < svals.size(); ++k) {
    const double p = svals[k] * svals[k];
    if (p > kSchmidtCutoff) entropy -= p * std::log2(p);
  }
  return entropy;
}

Eigen::MatrixXcd cut_matrix(const StateVector& state, std::uint32_t mask_a) {
  const int n = state.n_qubits();
  std::vector<int> qa, qb;
  for (int q = 0; q < n; ++q)
    ((mask_a >> q) & 1 ? qa : qb).push_back(q);
  Eigen::MatrixXcd m(Eigen::Index{1} << qa.size(), Eigen::Index{1} << qb.size());
  for (std::size_t i = 0; i < state.dim(); ++i) {
    std::size_t ia = 0, ib = 0;
    for (std::size_t k = 0; k < qa.size(); ++k) ia |= ((i >> qa[k]) & 1) << k;
    for (std::size_t k = 0; k < qb.size(); ++k) ib |= ((i >> qb[k]) & 1) << k;
    m(ia, ib) = state.amplitude(i);
  }
  return m;
}

}  // namespace

double vn_entropy(const StateVector& state, std::uint32_t mask_a) {
  const int n = state.n_qubits();
  if (n < 2) throw std::invalid_argument("vn_entropy: need at least 2 qubits");
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  if (mask_a == 0 || (mask_a & full) == full || (mask_a & ~full) != 0)
    throw std::invalid_argument("vn_entropy: cut must be a proper subset");
  const Eigen::MatrixXcd m = cut_matrix(state, mask_a);
  return entropy_from_singular_values(m.jacobiSvd().singularValues());
}

namespace {

struct TreeBuild {
  // adjacency over vertices: 0..n-1 leaves, >= n internal
  std::vector<std::pair<int, int>> edges;
  int next_internal;
};

void cuts_of_tree(const TreeBuild& t, int n,
                  std::vector<std::uint32_t>& out) {
  std::map<int, std::vector<int>> adj;
  for (const auto& [u, v] : t.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  out.clear();
  for (const auto& [u, v] : t.edges) {
    // leaves reachable from u avoiding edge (u, v)
    std::uint32_t mask = 0;
    std::vector<int> stack{u};
    std::map<int, bool> seen{{u, true}, {v, true}};
    if (u < n) mask |= 1u << u;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : adj.at(x)) {
        if (seen[y]) continue;
        seen[y] = true;
        if (y < n) mask |= 1u << y;
        stack.push_back(y);
      }
    }
    out.push_back(mask);
  }
}

}  // namespace

std::vector<std::vector<std::uint32_t>> subcubic_tree_cuts(int n) {
  if (n < 2 || n > kMaxEwdQubits)
    throw std::invalid_argument("subcubic tree enumeration capped at 8 leaves");
  std::vector<TreeBuild> trees{{{{0, 1}}, n}};
  for (int leaf = 2; leaf < n; ++leaf) {
    std::vector<TreeBuild> grown;
    for (const auto& t : trees) {
      for (std::size_t e = 0; e < t.edges.size(); ++e) {
        TreeBuild g = t;
        const auto [u, v] = g.edges[e];
        const int w = g.next_internal++;
        g.edges.erase(g.edges.begin() + static_cast<std::ptrdiff_t>(e));
        g.edges.emplace_back(u, w);
        g.edges.emplace_back(w, v);
        g.edges.emplace_back(w, leaf);
        grown.push_back(std::move(g));
      }
    }
    trees = std::move(grown);
  }
  std::vector<std::vector<std::uint32_t>> cuts(trees.size());
  for (std::size_t i = 0; i < trees.size(); ++i)
    cuts_of_tree(trees[i], n, cuts[i]);
  return cuts;
}

double entanglement_width(const StateVector& state) {
  const int n = state.n_qubits();
  if (n > kMaxEwdQubits)
    throw std::invalid_argument("entanglement_width capped at 8 qubits");
  if (n < 2) return 0.0;
  const std::uint32_t full = (1u << n) - 1;
  std::unordered_map<std::uint32_t, double> cache;
  auto cut_entropy = [&](std::uint32_t mask) {
    const std::uint32_t key = std::min(mask, full ^ mask);
    if (key == 0) return 0.0;
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const double s = vn_entropy(state, key);
    cache.emplace(key, s);
    return s;
  };
  double best = std::numeric_limits<double>::infinity();
  for (const auto& tree : subcubic_tree_cuts(n)) {
    double worst = 0.0;
    for (std::uint32_t mask : tree) worst = std::max(worst, cut_entropy(mask));
    best = std::min(best, worst);
  }
  return best;
}

namespace {

using ProductState = std::vector<Eigen::Vector2cd>;

// Partial overlap <phi_1 .. phi_{k-1}, e_b, phi_{k+1} ..|psi> for b = 0, 1.
Eigen::Vector2cd partial_overlap(const StateVector& psi,
                                 const ProductState& phi, int site) {
  Eigen::Vector2cd v = Eigen::Vector2cd::Zero();
  const int n = psi.n_qubits();
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    cdouble w = psi.amplitude(i);
    for (int q = 0; q < n; ++q) {
      if (q == site) continue;
      w *= std::conj(phi[q][(i >> q) & 1]);
    }
    v[(i >> site) & 1] += w;
  }
  return v;
}

}  // namespace

GEResult geometric_entanglement(const StateVector& state, int restarts,
                                std::uint64_t seed) {
  if (state.n_qubits() > 12)
    throw std::invalid_argument("geometric_entanglement capped at 12 qubits");
  if (restarts < 1) throw std::invalid_argument("need at least one restart");
  const int n = state.n_qubits();
  GEResult result;
  constexpr double kGainTol = 1e-12;
  constexpr int kMaxSweeps = 10000;

  for (int r = 0; r < restarts; ++r) {
    Rng rng(derive_subseed(seed, static_cast<std::uint64_t>(r)));
    std::normal_distribution<double> gauss(0.0, 1.0);
    ProductState phi(n);
    for (auto& site : phi) {
      site = Eigen::Vector2cd{cdouble{gauss(rng), gauss(rng)},
                              cdouble{gauss(rng), gauss(rng)}};
      site.normalize();
    }
    double overlap = 0.0;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
      double before = overlap;
      for (int site = 0; site < n; ++site) {
        const Eigen::Vector2cd v = partial_overlap(state, phi, site);
        const double norm = v.norm();
        if (norm > 0.0) phi[site] = v / norm;
        overlap = norm;
      }
      ++result.iterations;
      if (overlap - before < kGainTol) break;
    }
    result.restart_overlaps.push_back(overlap);
    result.lambda_max = std::max(result.lambda_max, overlap);
  }
  const double lam2 = std::min(1.0, result.lambda_max * result.lambda_max);
  result.e_g = std::max(0.0, -std::log2(lam2));
  return result;
}

namespace {

double largest_singular_value_2x2(const Eigen::Matrix2cd& m) {
  const double f = m.squaredNorm();
  const double d = std::norm(m.determinant());
  const double disc = std::max(0.0, f * f - 4.0 * d);
  return std::sqrt((f + std::sqrt(disc)) / 2.0);
}

}  // namespace

GEBracket ge_grid_oracle(const StateVector& state, double resolution) {
  const int n = state.n_qubits();
  if (n < 1 || n > 3)
    throw std::invalid_argument("grid oracle covers 1 to 3 qubits");
  if (resolution <= 0.0) throw std::invalid_argument("bad resolution");
  GEBracket out;
  if (n == 1) {
    out.lambda_lo = out.lambda_hi = 1.0;
  } else if (n == 2) {
    // exact: the best product overlap of a two-qubit state is its largest
    // Schmidt coefficient
    Eigen::Matrix2cd m;
    for (int i = 0; i < 4; ++i) m(i & 1, i >> 1) = state.amplitude(i);
    out.lambda_lo = out.lambda_hi = largest_singular_value_2x2(m);
  } else {
    // grid the last qubit; inner 2-qubit optimum is again exact
    const double pi = std::numbers::pi;
    const int theta_steps = static_cast<int>(std::ceil(pi / resolution)) + 1;
    const int phi_steps = static_cast<int>(std::ceil(2 * pi / resolution));
    double best = 0.0;
    for (int it = 0; it < theta_steps; ++it) {
      const double theta =
          pi * static_cast<double>(it) / static_cast<double>(theta_steps - 1);
      const cdouble c0 = std::cos(theta / 2);
      for (int ip = 0; ip < phi_steps; ++ip) {
        const double ph =
            2 * pi * static_cast<double>(ip) / static_cast<double>(phi_steps);
        const cdouble c1 = std::exp(cdouble{0, ph}) * std::sin(theta / 2);
        Eigen::Matrix2cd m;
        for (int i = 0; i < 4; ++i)
          m(i & 1, (i >> 1) & 1) =
              std::conj(c0) * state.amplitude(i) +
              std::conj(c1) * state.amplitude(i | 4);
        best = std::max(best, largest_singular_value_2x2(m));
        if (it == 0) break;  // theta = 0: phi is degenerate
      }
    }
    out.lambda_lo = best;
    // conservative Lipschitz margin: the contracted vector moves by at most
    // ~1.5 * resolution between grid neighbors, sigma_max is 1-Lipschitz
    out.lambda_hi = std::min(1.0, best + 1.5 * resolution);
  }
  out.eg_lo = -std::log2(std::min(1.0, out.lambda_hi * out.lambda_hi));
  out.eg_hi = -std::log2(out.lambda_lo * out.lambda_lo);
  out.eg_lo = std::max(0.0, out.eg_lo);
  return out;
}

double max_outcome_probability(const StateVector& state,
                               std::span<const Eigen::Matrix2cd> bases) {
  if (bases.size() != static_cast<std::size_t>(state.n_qubits()))
    throw std::invalid_argument("need one basis per qubit");
  StateVector rotated = state;
  for (int q = 0; q < state.n_qubits(); ++q) {
    const Eigen::Matrix2cd err =
        bases[q].adjoint() * bases[q] - Eigen::Matrix2cd::Identity();
    if (err.cwiseAbs().maxCoeff() > kNormTol)
      throw std::invalid_argument("measurement basis is not orthonormal");
    apply_1q(rotated, q, Eigen::Matrix2cd(bases[q].adjoint()));
  }
  double best = 0.0;
  for (std::size_t i = 0; i < rotated.dim(); ++i)
    best = std::max(best, std::norm(rotated.amplitude(i)));
  return best;
}

}  // namespace mbqc
