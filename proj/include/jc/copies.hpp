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

#ifndef JC_COPIES_HPP_
#define JC_COPIES_HPP_

#include <vector>

#include "jc/graph.hpp"
#include "jc/hypergraph.hpp"

namespace jc {

// Vertex sets L with pattern ~ G'[L] = G[L], plus one isomorphism per edge.
struct CopyHypergraph {
  Hypergraph hypergraph;
  Graph pattern;
  // isomorphisms[e][j] is the pattern vertex assigned to the j-th smallest
  // vertex of edge e; lexicographically least among all isomorphisms.
  std::vector<std::vector<int>> isomorphisms;
};

CopyHypergraph induced_copy_hypergraph(const Graph& pattern, const Graph& gprime,
                                       const Graph& g);

// Encoding of U x {0,1} for |U| = m: (u, i) -> u + i m.
inline int pair_vertex(int u, int side, int m) { return u + side * m; }

// Hypergraph on U x {0,1} recording which neighbourhood patterns of a new
// vertex turn a copy of pattern - w into a copy of pattern.
struct ExtensionHypergraph {
  Hypergraph hypergraph;
  Graph pattern;
  int removed = 0;                // w
  Graph reduced;                  // pattern - w, relabelled
  VertexSet removed_neighbourhood;  // N(w) in the labels of `reduced`
  int base_size = 0;              // m = |U|
  std::vector<VertexSet> copies;  // L for each edge, in U
  std::vector<std::vector<int>> bijections;  // phi_L for each edge
  VertexMap projection;           // first coordinate
};

ExtensionHypergraph extension_hypergraph(const Graph& pattern, int w,
                                         const Graph& gprime_tilde,
                                         const Graph& g_tilde);

// {(u,0) : u not adjacent to v in G} + {(u,1) : u adjacent to v in G'},
// encoded by the rank of u inside U.
VertexSet iota(const Graph& gprime, const Graph& g, VertexSet u, int v);

// Project the part of the extension hypergraph inside I and add v to every
// edge. The result lives on [0, v+1).
Hypergraph extend_copies(const ExtensionHypergraph& ext, VertexSet i, int v);

}  // namespace jc

#endif  // JC_COPIES_HPP_
