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

#include "mbqc/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mbqc {

namespace {
std::pair<int, int> norm_edge(int a, int b) {
  return {std::min(a, b), std::max(a, b)};
}
}  // namespace

Graph::Graph(int n_vertices) : n_(n_vertices) {
  if (n_vertices < 0) throw std::invalid_argument("negative vertex count");
}

Graph::Graph(int n_vertices, std::initializer_list<std::pair<int, int>> edges)
    : Graph(n_vertices) {
  for (const auto& [a, b] : edges) add_edge(a, b);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
}

void Graph::add_edge(int a, int b) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw std::invalid_argument("self-loops are not allowed");
  if (!edges_.insert(norm_edge(a, b)).second)
    throw std::invalid_argument("duplicate edge");
}

bool Graph::has_edge(int a, int b) const {
  return edges_.count(norm_edge(a, b)) != 0;
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (const auto& [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int Graph::degree(int v) const {
  return static_cast<int>(neighbors(v).size());
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph Graph::grid(int rows, int cols) {
  Graph g(rows * cols);
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
      if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
    }
  return g;
}

Multigraph::Multigraph(int n_vertices) : n_(n_vertices) {
  if (n_vertices < 0) throw std::invalid_argument("negative vertex count");
}

Multigraph::Multigraph(const Graph& g) : Multigraph(g.n_vertices()) {
  for (const auto& [a, b] : g.edges()) add_edge(a, b);
}

Multigraph::Multigraph(
    int n_vertices,
    std::initializer_list<std::pair<std::pair<int, int>, int>> edges)
    : Multigraph(n_vertices) {
  for (const auto& [e, m] : edges) add_edge(e.first, e.second, m);
}

void Multigraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
}

void Multigraph::add_edge(int a, int b, int multiplicity) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw std::invalid_argument("self-loops are not allowed");
  if (multiplicity < 1) throw std::invalid_argument("multiplicity must be >= 1");
  mult_[norm_edge(a, b)] += multiplicity;
}

int Multigraph::multiplicity(int a, int b) const {
  auto it = mult_.find(norm_edge(a, b));
  return it == mult_.end() ? 0 : it->second;
}

Graph reduce_multigraph(const Multigraph& mg) {
  Graph g(mg.n_vertices());
  for (const auto& [e, m] : mg.edge_multiplicities())
    if (m % 2 == 1) g.add_edge(e.first, e.second);
  return g;
}

std::vector<int> contraction_vertex_map(
    int n_vertices, const std::vector<std::vector<int>>& merge_sets) {
  std::vector<int> owner(n_vertices, -1);
  for (std::size_t s = 0; s < merge_sets.size(); ++s) {
    if (merge_sets[s].empty())
      throw std::invalid_argument("empty merge set");
    for (int v : merge_sets[s]) {
      if (v < 0 || v >= n_vertices)
        throw std::invalid_argument("merge set vertex out of range");
      if (owner[v] != -1)
        throw std::invalid_argument("merge sets must be disjoint");
      owner[v] = static_cast<int>(s);
    }
  }
  // representative = min vertex of the group (singletons for the unmentioned)
  std::vector<int> rep(n_vertices);
  for (int v = 0; v < n_vertices; ++v) {
    if (owner[v] == -1) {
      rep[v] = v;
    } else {
      rep[v] = *std::min_element(merge_sets[owner[v]].begin(),
                                 merge_sets[owner[v]].end());
    }
  }
  // compact representatives to 0..k-1 in ascending order
  std::vector<int> reps_sorted;
  for (int v = 0; v < n_vertices; ++v)
    if (rep[v] == v) reps_sorted.push_back(v);
  std::vector<int> index(n_vertices, -1);
  for (std::size_t i = 0; i < reps_sorted.size(); ++i)
    index[reps_sorted[i]] = static_cast<int>(i);
  std::vector<int> out(n_vertices);
  for (int v = 0; v < n_vertices; ++v) out[v] = index[rep[v]];
  return out;
}

Multigraph contract_edges(const Multigraph& mg,
                          const std::vector<std::vector<int>>& merge_sets) {
  const int n = mg.n_vertices();
  const auto comp = contraction_vertex_map(n, merge_sets);

  // each merge set must be connected through edges of the multigraph
  for (const auto& set : merge_sets) {
    if (set.size() <= 1) continue;
    std::set<int> members(set.begin(), set.end());
    std::set<int> seen{*set.begin()};
    std::vector<int> stack{*set.begin()};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : members) {
        if (!seen.count(w) && mg.multiplicity(v, w) > 0) {
          seen.insert(w);
          stack.push_back(w);
        }
      }
    }
    if (seen.size() != members.size())
      throw std::invalid_argument(
          "merge set is not connected by contracted edges");
  }

  const int k = 1 + *std::max_element(comp.begin(), comp.end());
  Multigraph out(k);
  for (const auto& [e, m] : mg.edge_multiplicities()) {
    const int cu = comp[e.first], cv = comp[e.second];
    if (cu == cv) continue;  // self-loop after merging: discarded
    out.add_edge(cu, cv, m);
  }
  return out;
}

Graph load_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos)
        return true;
    }
    return false;
  };
  if (!next_line()) throw std::invalid_argument("graph file: empty input");
  int n = 0, m = 0;
  {
    std::istringstream hdr(line);
    if (!(hdr >> n >> m) || n < 0 || m < 0)
      throw std::invalid_argument("graph file line " + std::to_string(lineno) +
                                  ": expected header \"n m\"");
  }
  Graph g(n);
  for (int i = 0; i < m; ++i) {
    if (!next_line())
      throw std::invalid_argument("graph file: expected " + std::to_string(m) +
                                  " edges, got " + std::to_string(i));
    std::istringstream row(line);
    int u = 0, v = 0;
    if (!(row >> u >> v))
      throw std::invalid_argument("graph file line " + std::to_string(lineno) +
                                  ": expected \"u v\"");
    try {
      g.add_edge(u, v);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("graph file line " + std::to_string(lineno) +
                                  ": " + e.what());
    }
  }
  return g;
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  return load_graph(in);
}

void save_graph(const Graph& g, std::ostream& out) {
  out << g.n_vertices() << ' ' << g.n_edges() << '\n';
  for (const auto& [a, b] : g.edges()) out << a << ' ' << b << '\n';
}

std::string graph_to_string(const Graph& g) {
  std::ostringstream out;
  save_graph(g, out);
  return out.str();
}

}  // namespace mbqc
