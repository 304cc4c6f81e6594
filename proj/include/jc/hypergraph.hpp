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

#ifndef JC_HYPERGRAPH_HPP_
#define JC_HYPERGRAPH_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "jc/vertex_set.hpp"

namespace jc {

// Vertex universe [0, n) plus a duplicate-free, ordered edge list.
class Hypergraph {
 public:
  Hypergraph() = default;
  // Throws InputError on duplicates or out-of-range vertices.
  Hypergraph(int n, std::vector<VertexSet> edges);
  // Keeps the first occurrence of every repeated edge.
  static Hypergraph deduplicated(int n, const std::vector<VertexSet>& edges);

  int num_vertices() const { return n_; }
  VertexSet universe() const { return VertexSet::range(n_); }
  const std::vector<VertexSet>& edges() const { return edges_; }
  std::size_t num_edges() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const VertexSet& edge(std::size_t i) const { return edges_[i]; }
  std::optional<std::size_t> index_of(VertexSet e) const;
  bool contains_edge(VertexSet e) const { return index_of(e).has_value(); }

  // Common edge size, if all edges share one (nullopt for the empty list).
  std::optional<int> uniformity() const;
  int max_edge_size() const;
  int min_edge_size() const;
  // Edges E with E contained in `s`, same universe, original order.
  Hypergraph edges_within(VertexSet s) const;
  // True if some edge is a subset of `s`.
  bool spans_edge_in(VertexSet s) const;
  bool is_independent(VertexSet s) const { return !spans_edge_in(s); }

  bool operator==(const Hypergraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }
  // Equality of edge sets, ignoring order.
  bool same_edge_set(const Hypergraph& other) const;
  bool is_subhypergraph_of(const Hypergraph& other) const;

 private:
  int n_ = 0;
  std::vector<VertexSet> edges_;
  std::unordered_map<VertexSet, std::size_t, VertexSetHash> index_;
};

// Total map from a source universe into a target universe.
struct VertexMap {
  int source_size = 0;
  int target_size = 0;
  std::vector<int> table;

  static VertexMap identity(int n);
  int operator()(int v) const { return table[static_cast<std::size_t>(v)]; }
  VertexSet image(VertexSet s) const;
  VertexSet preimage(VertexSet s) const;
  void validate() const;
};

struct InducedSub {
  Hypergraph hypergraph;      // on [0, |W|)
  std::vector<int> to_parent; // local index -> parent vertex
};

struct Projection {
  Hypergraph image;
  std::vector<std::size_t> preimage_count;  // per image edge
  std::vector<std::size_t> image_of_edge;   // per source edge
};

// Edges contained in W, relabelled onto [0, |W|).
InducedSub induced_sub(const Hypergraph& h, VertexSet w);
// The s-subsets of the universe containing some edge of h.
Hypergraph upset_slice(const Hypergraph& h, int s);
// {E - T}, deduplicated; may contain the empty edge.
Hypergraph nonstrict_link(const Hypergraph& h, VertexSet t);
// {E + v} on universe v+1; v must lie outside the universe of h.
Hypergraph edgewise_include(const Hypergraph& h, int v);
Projection project(const Hypergraph& h, const VertexMap& pi);

struct IndependentSetOptions {
  int max_universe = 25;
  std::optional<std::uint64_t> budget;
};

// Visits every independent set of h in increasing numeric order of the bit
// pattern. Returns the number visited. Visitor may return false to stop.
std::uint64_t for_each_independent_set(
    const Hypergraph& h, const std::function<bool(VertexSet)>& visit,
    const IndependentSetOptions& options = {});
std::vector<VertexSet> independent_sets(const Hypergraph& h,
                                        const IndependentSetOptions& options = {});

// Independent sets containing `forced`, counted by size: out[k] is the number
// of independent S with forced <= S and |S| = k.
std::vector<std::uint64_t> count_independent_supersets(
    const Hypergraph& h, VertexSet forced,
    const IndependentSetOptions& options = {});

// Minimal edges of h (no other edge is a proper subset), original order.
Hypergraph minimal_edges(const Hypergraph& h);

}  // namespace jc

#endif  // JC_HYPERGRAPH_HPP_
