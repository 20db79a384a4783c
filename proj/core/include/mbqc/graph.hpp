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

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace mbqc {

/// Simple undirected graph: no self-loops, no duplicate edges. Vertices are
/// 0..n-1. Immutable value semantics once built; edge iteration is sorted.
class Graph {
 public:
  explicit Graph(int n_vertices = 0);
  Graph(int n_vertices, std::initializer_list<std::pair<int, int>> edges);

  void add_edge(int a, int b);
  bool has_edge(int a, int b) const;

  int n_vertices() const { return n_; }
  int n_edges() const { return static_cast<int>(edges_.size()); }
  const std::set<std::pair<int, int>>& edges() const { return edges_; }
  std::vector<int> neighbors(int v) const;
  int degree(int v) const;

  bool operator==(const Graph&) const = default;

  static Graph path(int n);
  static Graph cycle(int n);
  static Graph grid(int rows, int cols);

 private:
  void check_vertex(int v) const;
  int n_;
  std::set<std::pair<int, int>> edges_;  // normalized a < b
};

/// Undirected multigraph: unordered edges with multiplicity >= 1, self-loops
/// forbidden.
class Multigraph {
 public:
  explicit Multigraph(int n_vertices = 0);
  explicit Multigraph(const Graph& g);
  Multigraph(int n_vertices,
             std::initializer_list<std::pair<std::pair<int, int>, int>> edges);

  void add_edge(int a, int b, int multiplicity = 1);
  int multiplicity(int a, int b) const;

  int n_vertices() const { return n_; }
  const std::map<std::pair<int, int>, int>& edge_multiplicities() const {
    return mult_;
  }

  bool operator==(const Multigraph&) const = default;

 private:
  void check_vertex(int v) const;
  int n_;
  std::map<std::pair<int, int>, int> mult_;  // normalized a < b -> count
};

/// Simple graph keeping exactly the odd-multiplicity edges.
Graph reduce_multigraph(const Multigraph& mg);

/// Merge each set of merge_sets into a single vertex. Vertices not mentioned
/// stay as singletons. Edges inside a merged set become self-loops and are
/// discarded; all other incidences keep their multiplicity. Each merge set
/// must be connected through edges of the multigraph. Resulting vertices are
/// numbered by ascending minimum original vertex.
Multigraph contract_edges(const Multigraph& mg,
                          const std::vector<std::vector<int>>& merge_sets);

/// The old-vertex -> new-vertex map induced by contract_edges with the same
/// partition (after singleton completion and min-vertex ordering).
std::vector<int> contraction_vertex_map(
    int n_vertices, const std::vector<std::vector<int>>& merge_sets);

/// Edge-list text format: header "n m", then m lines "u v", 0-indexed.
/// Rejects self-loops and duplicate edges with a line-numbered error.
Graph load_graph(std::istream& in);
Graph load_graph_file(const std::string& path);
void save_graph(const Graph& g, std::ostream& out);
std::string graph_to_string(const Graph& g);

}  // namespace mbqc
