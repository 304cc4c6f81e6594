// Copyright 2026 The jcontainers Authors
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

#ifndef JC_GRAPH_HPP_
#define JC_GRAPH_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jc/vertex_set.hpp"

namespace jc {

// Simple undirected graph on [0, n), n <= 64, stored as neighbourhood rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  static Graph complete(int n);
  static Graph empty(int n) { return Graph(n); }
  static Graph path(int n);
  static Graph cycle(int n);
  // Names like "K6", "E2" (edgeless), "P3", "C5".
  static std::optional<Graph> named(const std::string& name);

  int num_vertices() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  bool has_edge(int u, int v) const { return adj_[u].contains(v); }
  VertexSet neighbours(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].size(); }
  int num_edges() const;
  // Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;
  int edges_within(VertexSet s) const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  // True if every edge of *this is an edge of `other` (same n).
  bool is_subgraph_of(const Graph& other) const;
  // this[L] == other[L] as labelled graphs.
  bool agrees_on(const Graph& other, VertexSet l) const;
  // The graph induced on `s`, relabelled to [0, |s|) in increasing order.
  Graph induced(VertexSet s) const;
  // The graph with vertex `w` deleted and later vertices shifted down.
  Graph without_vertex(int w) const;

  bool operator==(const Graph& other) const = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

// Lexicographically least bijection phi: sorted(L) -> V(pattern) such that
// phi is an isomorphism from host[L] onto pattern. phi[j] is the image of the
// j-th smallest vertex of L. Patterns up to 8 vertices.
std::optional<std::vector<int>> least_isomorphism(const Graph& pattern,
                                                  const Graph& host,
                                                  VertexSet l);

bool isomorphic(const Graph& a, const Graph& b);

// Canonical code: lexicographically least adjacency bit string over all
// relabellings. Graphs up to 8 vertices.
std::uint64_t canonical_code(const Graph& g);

// One representative per isomorphism class on exactly k vertices (k <= 5).
std::vector<Graph> graphs_up_to_isomorphism(int k);

}  // namespace jc

#endif  // JC_GRAPH_HPP_
