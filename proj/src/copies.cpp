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

#include "jc/copies.hpp"

#include <string>

#include "jc/error.hpp"

namespace jc {
namespace {

void require_subgraph(const Graph& gprime, const Graph& g) {
  if (gprime.num_vertices() != g.num_vertices()) {
    throw InputError("G' and G must share a vertex set");
  }
  if (!gprime.is_subgraph_of(g)) throw InputError("G' is not a subgraph of G");
}

}  // namespace

CopyHypergraph induced_copy_hypergraph(const Graph& pattern, const Graph& gprime,
                                       const Graph& g) {
  require_subgraph(gprime, g);
  if (pattern.num_vertices() > 8) throw InputError("patterns are capped at 8 vertices");
  CopyHypergraph out;
  out.pattern = pattern;
  std::vector<VertexSet> edges;
  for_each_k_subset(g.num_vertices(), pattern.num_vertices(), [&](VertexSet l) {
    if (!gprime.agrees_on(g, l)) return true;
    if (auto phi = least_isomorphism(pattern, gprime, l)) {
      edges.push_back(l);
      out.isomorphisms.push_back(std::move(*phi));
    }
    return true;
  });
  out.hypergraph = Hypergraph(g.num_vertices(), std::move(edges));
  return out;
}

ExtensionHypergraph extension_hypergraph(const Graph& pattern, int w,
                                         const Graph& gprime_tilde,
                                         const Graph& g_tilde) {
  if (w < 0 || w >= pattern.num_vertices()) {
    throw InputError("removed vertex " + std::to_string(w) + " is not in the pattern");
  }
  const int m = g_tilde.num_vertices();
  if (2 * m > kMaxVertices) throw InputError("U x {0,1} exceeds 64 vertices");
  ExtensionHypergraph ext;
  ext.pattern = pattern;
  ext.removed = w;
  ext.reduced = pattern.without_vertex(w);
  for (int u : pattern.neighbours(w)) {
    ext.removed_neighbourhood = ext.removed_neighbourhood.with(u < w ? u : u - 1);
  }
  ext.base_size = m;
  const CopyHypergraph base = induced_copy_hypergraph(ext.reduced, gprime_tilde, g_tilde);
  std::vector<VertexSet> edges;
  for (std::size_t e = 0; e < base.hypergraph.num_edges(); ++e) {
    const VertexSet l = base.hypergraph.edge(e);
    const std::vector<int>& phi = base.isomorphisms[e];
    VertexSet edge;
    std::size_t j = 0;
    for (int u : l) {
      const int side = ext.removed_neighbourhood.contains(phi[j++]) ? 1 : 0;
      edge = edge.with(pair_vertex(u, side, m));
    }
    edges.push_back(edge);
    ext.copies.push_back(l);
    ext.bijections.push_back(phi);
  }
  // Distinct copies project to distinct L, so no two edges can coincide.
  ext.hypergraph = Hypergraph(2 * m, std::move(edges));
  ext.projection.source_size = 2 * m;
  ext.projection.target_size = m;
  for (int x = 0; x < 2 * m; ++x) ext.projection.table.push_back(x % m);
  for (VertexSet e : ext.hypergraph.edges()) {
    if (ext.projection.image(e).size() != e.size()) {
      throw std::logic_error("projection collapsed an edge");
    }
  }
  return ext;
}

VertexSet iota(const Graph& gprime, const Graph& g, VertexSet u, int v) {
  require_subgraph(gprime, g);
  if (v < 0 || v >= g.num_vertices()) throw InputError("vertex v is not in G");
  if (u.contains(v)) throw InputError("v must lie outside U");
  if (!u.is_subset_of(g.vertices())) throw InputError("U leaves the vertex set of G");
  const int m = u.size();
  if (2 * m > kMaxVertices) throw InputError("U x {0,1} exceeds 64 vertices");
  VertexSet out;
  int rank = 0;
  for (int x : u) {
    if (!g.has_edge(x, v)) out = out.with(pair_vertex(rank, 0, m));
    if (gprime.has_edge(x, v)) out = out.with(pair_vertex(rank, 1, m));
    ++rank;
  }
  return out;
}

Hypergraph extend_copies(const ExtensionHypergraph& ext, VertexSet i, int v) {
  if (!i.is_subset_of(ext.hypergraph.universe())) {
    throw InputError("I leaves U x {0,1}");
  }
  const Hypergraph inside = ext.hypergraph.edges_within(i);
  return edgewise_include(project(inside, ext.projection).image, v);
}

}  // namespace jc
