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

#include <cmath>

#include <doctest.h>

#include "jc/error.hpp"
#include "jc/measure.hpp"
#include "jc/rng.hpp"

using namespace jc;

namespace {

Rational frac(long a, long b) {
  Rational x(a, b);
  x.canonicalize();
  return x;
}

Hypergraph random_hypergraph(Rng& rng, int n, int edges, int max_size) {
  std::vector<VertexSet> out;
  for (int i = 0; i < edges; ++i) {
    VertexSet e;
    const int size = 1 + static_cast<int>(rng.below(max_size));
    while (e.size() < std::min(size, n)) e = e.with(static_cast<int>(rng.below(n)));
    out.push_back(e);
  }
  return Hypergraph::deduplicated(n, out);
}

ExactMeasure random_exact(Rng& rng, const Hypergraph& h) {
  std::vector<Rational> w;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    w.push_back(frac(static_cast<long>(rng.below(9)), 1 + static_cast<long>(rng.below(5))));
  }
  return ExactMeasure(h, w);
}

}  // namespace

TEST_CASE("mass and degree") {
  const Hypergraph one(2, {{0, 1}});
  CHECK(mass(ExactMeasure(one, {Rational(1)})) == 1);
  CHECK(mass(ExactMeasure::zero(std::make_shared<const Hypergraph>(one))) == 0);
  const Hypergraph three(6, {{0, 1}, {2, 3}, {4, 5}});
  CHECK(mass(ExactMeasure(three, {frac(1, 3), frac(1, 3), frac(1, 3)})) == 1);

  const ExactMeasure m(Hypergraph(3, {{0, 1}, {0, 2}}), {Rational(2), Rational(3)});
  CHECK(degree(m, {}) == 5);
  CHECK(degree(m, {1, 2}) == 0);
  CHECK(degree(m, {0}) == 5);
  CHECK(vertex_degrees(m) == std::vector<Rational>{5, 2, 3});
}

TEST_CASE("lambda closed forms") {
  const Hypergraph one(2, {{0, 1}});
  CHECK(lambda_p(ExactMeasure(one, {Rational(1)}), frac(1, 2)) == 4);
  const Hypergraph two(4, {{0, 1}, {2, 3}});
  for (const Rational a : {frac(1, 3), frac(1, 2), frac(5, 7)}) {
    const ExactMeasure m(two, {a, 1 - a});
    CHECK(lambda_p(m, frac(1, 2)) == 4 * a * a + 4 * (1 - a) * (1 - a));
    CHECK(lambda_subsets(m, frac(1, 2)) == lambda_pairwise(m, frac(1, 2)));
  }
  CHECK(lambda_p(ExactMeasure::zero(std::make_shared<const Hypergraph>(two)), frac(1, 2)) == 0);
  // Only sets of size at least two count, so singleton edges contribute nothing.
  CHECK(lambda_p(ExactMeasure(Hypergraph(1, {{0}}), {Rational(7)}), frac(1, 3)) == 0);
}

TEST_CASE("probability validation") {
  const ExactMeasure m(Hypergraph(2, {{0, 1}}), {Rational(1)});
  CHECK_THROWS_AS(lambda_p(m, Rational(0)), InputError);
  CHECK_THROWS_AS(lambda_p(m, Rational(3, 2)), InputError);
  CHECK_THROWS_AS(ExactMeasure(Hypergraph(2, {{0, 1}}), {Rational(-1)}), InputError);
  CHECK_THROWS_AS(ExactMeasure(Hypergraph(2, {{0, 1}}), {}), InputError);
}

TEST_CASE("pullback") {
  const Hypergraph h(4, {{0, 1}, {2, 3}});
  VertexMap collapse{4, 2, {0, 1, 0, 1}};
  const Hypergraph image(2, {{0, 1}});
  const ExactMeasure back = pullback(ExactMeasure(image, {Rational(1)}), h, collapse);
  CHECK(back.weights() == std::vector<Rational>{frac(1, 2), frac(1, 2)});
  const ExactMeasure zero = pullback(ExactMeasure(image, {Rational(0)}), h, collapse);
  CHECK(mass(zero) == 0);
  const ExactMeasure direct(h, {frac(2, 3), frac(1, 3)});
  CHECK(pullback(direct, h, VertexMap::identity(4)).weights() == direct.weights());
}

TEST_CASE("extend_by_vertex") {
  const ExactMeasure m(Hypergraph(2, {{0, 1}}), {Rational(1)});
  const ExactMeasure e = extend_by_vertex(m, 2);
  CHECK(e.host().edges() == std::vector<VertexSet>{{0, 1, 2}});
  CHECK(e.weights() == std::vector<Rational>{1});
  // 20 = 3 * 4 + 4 * (1 + 1).
  CHECK(lambda_p(e, frac(1, 2)) == 20);
}

TEST_CASE("reweight_restrict") {
  const Hypergraph h(3, {{0, 1}, {1, 2}});
  const ExactMeasure m(h, {Rational(1), Rational(2)});
  CHECK(reweight_restrict(m, h.universe(), {Rational(1), Rational(1)}).weights() == m.weights());
  CHECK(mass(reweight_restrict(m, VertexSet(), {Rational(1), Rational(1)})) == 0);
  const Rational q = frac(1, 4);
  const ExactMeasure r = reweight_restrict(m, {0, 1}, {q * q, q * q});
  CHECK(r.weights() == std::vector<Rational>{16, 0});
}

TEST_CASE("linear operations") {
  Rng rng(21);
  const Hypergraph h(5, {{0, 1}, {1, 2, 3}, {3, 4}});
  const ExactMeasure a = random_exact(rng, h);
  const ExactMeasure zero = ExactMeasure::zero(a.host_ptr());
  CHECK(add(a, zero).weights() == a.weights());
  const Rational y = 7;
  if (mass(a) > 0) CHECK(mass(scale(a, Rational(y / mass(a)))) == y);
  const Hypergraph keep(5, {{0, 1}, {3, 4}});
  const ExactMeasure in = restrict_to(a, keep);
  const ExactMeasure out = restrict_outside(a, keep);
  CHECK(add(in, out).weights() == a.weights());
  const ExactMeasure other(Hypergraph(5, {{0, 1}}), {Rational(1)});
  CHECK_THROWS_AS(add(a, other), InputError);
}

TEST_CASE("property: lambda algorithms, homogeneity and linearity") {
  Rng rng(22);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(8));
    const Hypergraph h = random_hypergraph(rng, n, 1 + static_cast<int>(rng.below(7)), 4);
    const ExactMeasure a = random_exact(rng, h);
    const ExactMeasure b = random_exact(rng, h);
    const Rational p = frac(1 + static_cast<long>(rng.below(7)), 8);
    CHECK(lambda_subsets(a, p) == lambda_pairwise(a, p));
    const Rational t = frac(1 + static_cast<long>(rng.below(9)), 1 + static_cast<long>(rng.below(4)));
    CHECK(mass(scale(a, t)) == t * mass(a));
    CHECK(lambda_p(scale(a, t), p) == t * t * lambda_p(a, p));
    for_each_subset(h.universe(), [&](VertexSet l) {
      if (l.size() <= 2) CHECK(degree(add(a, b), l) == degree(a, l) + degree(b, l));
    });
    // Pointwise domination implies domination of Lambda.
    CHECK(lambda_p(a, p) <= lambda_p(add(a, b), p));
    // Extension identity.
    CHECK(lambda_p(extend_by_vertex(a, n), p) ==
          (1 + 1 / p) * lambda_p(a, p) + sum_squared_vertex_degrees(a) / (p * p));
    // Float mode tracks exact mode.
    const double pd = p.get_d();
    const double exact = lambda_p(a, p).get_d();
    CHECK(std::abs(lambda_p(to_float(a), pd) - exact) <= 1e-12 * std::max(1.0, exact));
  }
}

TEST_CASE("property: pullback keeps mass and does not raise Lambda") {
  Rng rng(23);
  int done = 0;
  while (done < 60) {
    const int target = 3 + static_cast<int>(rng.below(3));
    const int source = target + 1 + static_cast<int>(rng.below(3));
    VertexMap pi{source, target, {}};
    for (int v = 0; v < source; ++v) pi.table.push_back(v < target ? v : static_cast<int>(rng.below(target)));
    std::vector<VertexSet> kept;
    const Hypergraph raw = random_hypergraph(rng, source, 6, 3);
    for (VertexSet e : raw.edges()) {
      if (e.size() >= 2 && pi.image(e).size() == e.size()) kept.push_back(e);
    }
    if (kept.empty()) continue;
    const Hypergraph h(source, kept);
    const ExactMeasure theta = random_exact(rng, project(h, pi).image);
    const ExactMeasure back = pullback(theta, h, pi);
    CHECK(mass(back) == mass(theta));
    CHECK(lambda_p(back, frac(1, 3)) <= lambda_p(theta, frac(1, 3)));
    ++done;
  }
}
