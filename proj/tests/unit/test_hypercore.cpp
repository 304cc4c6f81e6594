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

#include <doctest.h>

#include "jc/error.hpp"
#include "jc/hypergraph.hpp"
#include "jc/rng.hpp"

using namespace jc;

namespace {

Hypergraph all_pairs(int n) {
  std::vector<VertexSet> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Hypergraph(n, edges);
}

Hypergraph random_hypergraph(Rng& rng, int n, int edges) {
  std::vector<VertexSet> out;
  for (int i = 0; i < edges; ++i) {
    VertexSet e;
    const int size = 1 + static_cast<int>(rng.below(3));
    while (e.size() < std::min(size, n)) e = e.with(static_cast<int>(rng.below(n)));
    out.push_back(e);
  }
  return Hypergraph::deduplicated(n, out);
}

}  // namespace

TEST_CASE("vertex sets") {
  const VertexSet s{0, 3, 5};
  CHECK(s.size() == 3);
  CHECK(s.to_vector() == std::vector<int>{0, 3, 5});
  CHECK(s.to_string() == "{0,3,5}");
  CHECK(VertexSet().to_string() == "{}");
  int count = 0;
  for_each_subset(s, [&](VertexSet) { ++count; });
  CHECK(count == 8);
  count = 0;
  for_each_k_subset(6, 3, [&](VertexSet x) {
    CHECK(x.size() == 3);
    ++count;
    return true;
  });
  CHECK(count == 20);
}

TEST_CASE("hypergraph construction rejects bad input") {
  CHECK_THROWS_AS(Hypergraph(2, {{0, 1}, {0, 1}}), InputError);
  CHECK_THROWS_AS(Hypergraph(2, {{0, 2}}), InputError);
  const Hypergraph d = Hypergraph::deduplicated(3, {{0, 1}, {1, 2}, {0, 1}});
  CHECK(d.num_edges() == 2);
  CHECK(d.uniformity() == 2);
}

TEST_CASE("induced_sub") {
  const Hypergraph h(3, {{0, 1}, {1, 2}});
  const InducedSub sub = induced_sub(h, {0, 1});
  CHECK(sub.hypergraph.edges() == std::vector<VertexSet>{{0, 1}});
  CHECK(sub.to_parent == std::vector<int>{0, 1});
  CHECK(induced_sub(h, h.universe()).hypergraph == h);
  CHECK(induced_sub(all_pairs(4), {0, 1, 2}).hypergraph.num_edges() == 3);
}

TEST_CASE("upset_slice") {
  CHECK(upset_slice(Hypergraph(3, {{0}}), 2).same_edge_set(Hypergraph(3, {{0, 1}, {0, 2}})));
  CHECK(upset_slice(Hypergraph(2, {{0, 1}}), 2).same_edge_set(Hypergraph(2, {{0, 1}})));
  CHECK(upset_slice(Hypergraph(3, {{0}, {1, 2}}), 2)
            .same_edge_set(Hypergraph(3, {{0, 1}, {0, 2}, {1, 2}})));
}

TEST_CASE("nonstrict_link") {
  CHECK(nonstrict_link(Hypergraph(4, {{0, 1}, {2, 3}}), {1})
            .same_edge_set(Hypergraph(4, {{0}, {2, 3}})));
  const Hypergraph h(4, {{0, 1}, {2, 3}});
  CHECK(nonstrict_link(h, {}) == h);
  const Hypergraph absorbed = nonstrict_link(Hypergraph(2, {{0, 1}}), {0, 1});
  CHECK(absorbed.edges() == std::vector<VertexSet>{VertexSet()});
}

TEST_CASE("edgewise_include") {
  CHECK(edgewise_include(Hypergraph(2, {{0, 1}}), 2).edges() == std::vector<VertexSet>{{0, 1, 2}});
  const Hypergraph none = edgewise_include(Hypergraph(2, {}), 2);
  CHECK(none.empty());
  CHECK(none.num_vertices() == 3);
  CHECK(edgewise_include(Hypergraph(2, {{0}, {1}}), 2).same_edge_set(Hypergraph(3, {{0, 2}, {1, 2}})));
  CHECK_THROWS_AS(edgewise_include(Hypergraph(3, {{0}}), 1), InputError);
}

TEST_CASE("project") {
  const Hypergraph h(4, {{0, 1}, {2, 3}});
  CHECK(project(h, VertexMap::identity(4)).image == h);
  VertexMap collapse{4, 2, {0, 1, 0, 1}};
  const Projection p = project(h, collapse);
  CHECK(p.image.edges() == std::vector<VertexSet>{{0, 1}});
  CHECK(p.preimage_count == std::vector<std::size_t>{2});
  CHECK(p.image_of_edge == std::vector<std::size_t>{0, 0});
}

TEST_CASE("independent_sets") {
  CHECK(independent_sets(Hypergraph(2, {{0, 1}})) ==
        std::vector<VertexSet>{VertexSet(), {0}, {1}});
  CHECK(independent_sets(Hypergraph(3, {})).size() == 8);
  CHECK(independent_sets(all_pairs(4)).size() == 5);
  IndependentSetOptions capped;
  capped.budget = 3;
  CHECK_THROWS_AS(independent_sets(Hypergraph(3, {}), capped), BudgetError);
}

TEST_CASE("property: up-set slices and links preserve independence") {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(6));
    const Hypergraph h = random_hypergraph(rng, n, 1 + static_cast<int>(rng.below(6)));
    const std::vector<VertexSet> indep = independent_sets(h);
    for (int s = 1; s <= n; ++s) {
      const Hypergraph slice = upset_slice(h, s);
      for (VertexSet e : slice.edges()) CHECK(h.spans_edge_in(e));
      // Brute-force closure: every s-set containing an edge is present.
      for_each_k_subset(n, s, [&](VertexSet x) {
        CHECK(slice.contains_edge(x) == h.spans_edge_in(x));
        return true;
      });
      for (VertexSet i : indep) CHECK(slice.is_independent(i));
    }
    VertexSet t;
    for (int v = 0; v < n; ++v) {
      if (rng.below(3) == 0) t = t.with(v);
    }
    const Hypergraph link = nonstrict_link(h, t);
    for (VertexSet i : independent_sets(link)) CHECK(h.is_independent(i));
  }
}

TEST_CASE("property: projection never grows an edge") {
  Rng rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(6));
    const Hypergraph h = random_hypergraph(rng, n, 1 + static_cast<int>(rng.below(6)));
    VertexMap pi;
    pi.source_size = n;
    pi.target_size = 1 + static_cast<int>(rng.below(n));
    for (int v = 0; v < n; ++v) pi.table.push_back(static_cast<int>(rng.below(pi.target_size)));
    const Projection p = project(h, pi);
    for (std::size_t i = 0; i < h.num_edges(); ++i) {
      const VertexSet img = p.image.edge(p.image_of_edge[i]);
      CHECK(img.size() <= h.edge(i).size());
      CHECK(img == pi.image(h.edge(i)));
    }
  }
}

TEST_CASE("minimal edges and superset counts") {
  const Hypergraph h(4, {{0, 1, 2}, {0, 1}, {2, 3}});
  CHECK(minimal_edges(h).same_edge_set(Hypergraph(4, {{0, 1}, {2, 3}})));
  const std::vector<std::uint64_t> counts = count_independent_supersets(Hypergraph(3, {{0, 1}}), {0});
  // Independent sets containing 0: {0}, {0,2}.
  CHECK(counts[1] == 1);
  CHECK(counts[2] == 1);
  CHECK(counts[3] == 0);
}
