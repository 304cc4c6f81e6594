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

#include <algorithm>

#include <doctest.h>

#include "jc/containers.hpp"
#include "jc/copies.hpp"
#include "jc/error.hpp"
#include "jc/rng.hpp"

using namespace jc;

namespace {

Rational frac(long a, long b) {
  Rational x(a, b);
  x.canonicalize();
  return x;
}

Hypergraph random_hypergraph(Rng& rng, int n, int edges, int lo, int hi) {
  std::vector<VertexSet> out;
  for (int i = 0; i < edges; ++i) {
    VertexSet e;
    const int size = lo + static_cast<int>(rng.below(hi - lo + 1));
    while (e.size() < std::min(size, n)) e = e.with(static_cast<int>(rng.below(n)));
    out.push_back(e);
  }
  return Hypergraph::deduplicated(n, out);
}

Hypergraph disjoint_pairs(int k) {
  std::vector<VertexSet> edges;
  for (int i = 0; i < k; ++i) edges.push_back({2 * i, 2 * i + 1});
  return Hypergraph(2 * k, edges);
}

}  // namespace

TEST_CASE("conditional_prob") {
  const Rational q = frac(1, 3);
  const Hypergraph edgeless(4, {});
  CHECK(conditional_prob(edgeless, {0, 2}, q) == q * q);
  CHECK(conditional_prob(edgeless, {}, q) == 1);
  CHECK(conditional_prob(Hypergraph(2, {{0, 1}}), {0}, frac(1, 2)) == frac(1, 3));
  CHECK(conditional_prob(Hypergraph(2, {{0, 1}}), {0, 1}, frac(1, 2)) == 0);

  Rng rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    const Hypergraph h = random_hypergraph(rng, 7, 4, 2, 3);
    const ConditionalTable table(h, frac(1, 8));
    for_each_subset(h.universe(), [&](VertexSet a) {
      if (a.size() <= 2) CHECK(table.prob(a) == conditional_prob(h, a, frac(1, 8)));
    });
  }
}

TEST_CASE("fingerprint") {
  const Rational q = frac(1, 4);
  const Rational alpha = frac(1, 2);
  CHECK(fingerprint(Hypergraph(3, {{0, 1}}), VertexSet(), q, alpha).empty());
  CHECK(fingerprint(Hypergraph(4, {}), VertexSet{0, 1, 3}, q, alpha).empty());

  const Hypergraph h(3, {{0, 1}});
  const VertexSet i{0, 2};
  const VertexSet t = fingerprint(h, i, q, alpha);
  CHECK(t.is_subset_of(i));
  CHECK(t.size() <= 1);
  auto below = [&](VertexSet a) {
    return conditional_prob(h, a, q) <= pow(Rational((1 - alpha) * q), a.size());
  };
  CHECK(below(t));
  // Inclusion-maximal within I.
  for_each_subset(i, [&](VertexSet sup) {
    if (t.is_subset_of(sup) && sup != t) CHECK_FALSE(below(sup));
  });
}

TEST_CASE("hardcover_family examples") {
  const Rational q = frac(1, 8);
  const Rational alpha = frac(1, 2);
  const ContainerFamily edgeless = hardcover_family(Hypergraph(5, {}), q, alpha);
  REQUIRE(edgeless.fingerprints.size() == 1);
  CHECK(edgeless.fingerprints[0].empty());
  CHECK(edgeless.covers[0].empty());
  CHECK(edgeless.report.ok());

  const Hypergraph single(2, {{0, 1}});
  const ContainerFamily one = hardcover_family(single, q, alpha);
  for (const Hypergraph& cover : one.covers) CHECK(cover.contains_edge({0, 1}));
  CHECK(one.report.ok());

  Rng rng(52);
  for (int trial = 0; trial < 5; ++trial) {
    const ContainerFamily fam = hardcover_family(random_hypergraph(rng, 10, 6, 2, 3), q, alpha);
    CHECK(fam.report.ok());
    CHECK(fam.report.checks > 0);
  }
}

TEST_CASE("paper-literal convention reports the empty-set failures") {
  HardcoverOptions literal;
  literal.paper_literal = true;
  const ContainerFamily fam = hardcover_family(Hypergraph(3, {{0, 1}}), frac(1, 8), frac(1, 2), literal);
  for (const Hypergraph& cover : fam.covers) CHECK(cover.contains_edge(VertexSet()));
  CHECK_FALSE(fam.report.theorem_violations.empty());
}

TEST_CASE("cover_certificate") {
  const Rational p = frac(1, 3);
  const Hypergraph triangle(3, {{0, 1}, {0, 2}, {1, 2}});
  const CoverCertificate self = cover_certificate(triangle, triangle, p);
  CHECK(self.weight == 3 * p * p);
  CHECK(janson_threshold(triangle, p).estimate == doctest::Approx(self.weight.get_d()).epsilon(1e-6));

  const Hypergraph pairs(5, {{0, 1}, {1, 2}, {3, 4}, {0, 4}});
  CHECK(cover_certificate(pairs, pairs, p).weight == 4 * p * p);

  const Hypergraph triple(3, {{0, 1, 2}});
  const CoverCertificate sub = cover_certificate(triple, Hypergraph(3, {{0, 1}}), p);
  CHECK(sub.weight == p * p);
  CHECK(janson_threshold(triple, p).estimate <= sub.weight.get_d());

  try {
    cover_certificate(triple, Hypergraph(3, {{1}}), p);
    FAIL("size-1 cover edge accepted");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("{1}") != std::string::npos);
  }
  CHECK_THROWS_AS(cover_certificate(triple, Hypergraph(3, {{0, 1}, {2}}), p), InputError);
  CHECK_THROWS_AS(cover_certificate(Hypergraph(3, {{0, 2}}), Hypergraph(3, {{0, 1}}), p), InputError);
}

TEST_CASE("uniform container oracle") {
  const Rational p = frac(1, 1 << 14);
  const ContainerFamily edgeless = uniform_container_oracle(Hypergraph(4, {}), p);
  REQUIRE(edgeless.fingerprints.size() == 1);
  CHECK(edgeless.fingerprints[0].empty());
  CHECK(edgeless.containers[0] == VertexSet::range(4));
  CHECK(edgeless.assignment.size() == 16);
  CHECK(edgeless.report.ok());

  const Hypergraph single(2, {{0, 1}});
  const bool whole_is_container =
      is_janson(single, p, p * 2 / 256).answer == JansonAnswer::kNo;
  CHECK(whole_is_container);
  const ContainerFamily one = uniform_container_oracle(single, p);
  REQUIRE(one.fingerprints.size() == 1);
  CHECK(one.fingerprints[0].empty());
  CHECK(one.containers[0] == VertexSet::range(2));

  Rng rng(53);
  const Rational p3 = frac(1, 2048 * 9);
  const ContainerFamily fam = uniform_container_oracle(random_hypergraph(rng, 10, 8, 3, 3), p3);
  CHECK(fam.report.ok());
  CHECK(fam.report.oracle_incomplete.empty());
  CHECK(verify_uniform_family(random_hypergraph(rng, 10, 8, 3, 3), p3, fam).checks > 0);
}

TEST_CASE("non_janson_containers") {
  const Rational q = frac(1, 16);
  const Rational p = q / 1024 / 4;
  const ContainerFamily edgeless = non_janson_containers(Hypergraph(6, {}), q / 1024, q, q);
  CHECK(edgeless.report.ok());

  const Hypergraph h = disjoint_pairs(4);
  const ContainerFamily fam = non_janson_containers(h, p, q, p * 8 / 64 * 4096);
  CHECK(fam.report.ok());
  for (VertexSet x : fam.containers) CHECK(x.is_subset_of(h.universe()));

  CHECK_THROWS_AS(non_janson_containers(h, p, frac(1, 8), p), InputError);
  CHECK_THROWS_AS(non_janson_containers(h, q, q, q), InputError);
  CHECK_THROWS_AS(non_janson_containers(h, p, q, p / 1000), InputError);
}

TEST_CASE("extension_containers") {
  const Rational q = frac(1, 16);
  ExtensionParams params;
  params.q = q;
  params.p = q / (1024 * 4 * 4);

  // No extension edges and an extra hypergraph that is Janson at R' = 0.
  const Graph g = Graph::empty(5);
  const ExtensionHypergraph empty_ext = extension_hypergraph(Graph::complete(3), 0, g, g);
  CHECK(empty_ext.hypergraph.empty());
  const ContainerFamily none = extension_containers(empty_ext, Hypergraph(6, {{0, 1, 5}}), 5, params);
  CHECK(none.containers.empty());
  CHECK(none.report.ok());

  // Built from copies data on a 6-vertex graph.
  Rng rng(54);
  Graph big(6);
  for (int u = 0; u < 6; ++u) {
    for (int v = u + 1; v < 6; ++v) {
      if (rng.next() >> 63) big.add_edge(u, v);
    }
  }
  const ExtensionHypergraph ext = extension_hypergraph(Graph::path(3), 0, big, big);
  const Hypergraph inside = induced_copy_hypergraph(Graph::path(3), big, big).hypergraph;
  const ContainerFamily fam = extension_containers(ext, Hypergraph(7, inside.edges()), 6, params);
  CHECK(fam.report.ok());

  ExtensionParams wrong = params;
  wrong.r_value = Rational(1);
  CHECK_THROWS_AS(extension_containers(ext, Hypergraph(7, {}), 6, wrong), InputError);
  ExtensionParams loose = params;
  loose.q = frac(1, 8);
  CHECK_THROWS_AS(extension_containers(ext, Hypergraph(7, {}), 6, loose), InputError);
}

TEST_CASE("property: Janson sets form an up-set") {
  Rng rng(55);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 5 + static_cast<int>(rng.below(4));
    const Hypergraph h = random_hypergraph(rng, n, 2 + static_cast<int>(rng.below(6)), 2, 2);
    const Rational p = frac(1, 2);
    const Rational r = frac(1 + static_cast<long>(rng.below(4)), 4);
    auto member = [&](VertexSet l) { return janson_or_throw(h.edges_within(l), p, r, "test"); };
    const UpsetResult up = build_upset(n, member);
    for_each_subset(h.universe(), [&](VertexSet l) {
      const bool spanned = up.minimal.spans_edge_in(l);
      CHECK(spanned == member(l));
    });
  }
}

TEST_CASE("property: intersection of large Janson sets") {
  // With one colour the hypothesis concerns sets of size n/8, so all pairs
  // must be edges for it to hold at this scale.
  Rng rng(56);
  int decided = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 9 + static_cast<int>(rng.below(4));
    std::vector<VertexSet> edges;
    for_each_k_subset(n, 2, [&](VertexSet e) {
      edges.push_back(e);
      return true;
    });
    for (int i = 0; i < 6; ++i) {
      VertexSet e;
      while (e.size() < 3) e = e.with(static_cast<int>(rng.below(n)));
      edges.push_back(e);
    }
    const Hypergraph h = Hypergraph::deduplicated(n, edges);
    VertexSet s, t;
    for (int v = 0; v < n; ++v) {
      if (rng.below(6) != 0) s = s.with(v);
      if (rng.below(6) != 0) t = t.with(v);
    }
    const auto result = check_intersection_property(h, frac(1, 2), frac(1, 5), 1, s, t);
    if (result) {
      ++decided;
      CHECK(*result);
    }
  }
  CHECK(decided > 0);
  // A hypergraph without edges fails the hypothesis.
  CHECK_FALSE(check_intersection_property(Hypergraph(8, {}), frac(1, 2), frac(1, 5), 1,
                                          VertexSet::range(8), VertexSet::range(8)));
}

TEST_CASE("family size bound") {
  CHECK(log_family_bound(frac(1, 16), 8, 0) == doctest::Approx(std::log(4.0)));
  CHECK(log_family_bound(frac(1, 16), 8, 32) ==
        doctest::Approx(std::log(4.0) + 8.0 / 16 * 32 * std::log(32.0)));
}
