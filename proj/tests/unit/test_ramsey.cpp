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
#include <string>

#include <doctest.h>

#include "jc/copies.hpp"
#include "jc/error.hpp"
#include "jc/io.hpp"
#include "jc/ramsey.hpp"

using namespace jc;

namespace {

const std::string kData = JC_TEST_DATA_DIR;

Rational frac(long a, long b) {
  Rational x(a, b);
  x.canonicalize();
  return x;
}

// No colour i holds an induced copy of targets[i] coloured entirely i.
bool colouring_is_bad(const Graph& g, const std::vector<Graph>& targets, const Coloring& c) {
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const Graph cls = colour_class(g, c, static_cast<int>(i));
    if (!induced_copy_hypergraph(targets[i], cls, g).hypergraph.empty()) return false;
  }
  return true;
}

EventSpec bad_spec(EventKind kind, std::vector<Graph> targets, Rational p, Rational delta) {
  EventSpec spec;
  spec.kind = kind;
  spec.targets = std::move(targets);
  spec.p = std::move(p);
  spec.delta = std::move(delta);
  return spec;
}

}  // namespace

TEST_CASE("sample_gnhalf") {
  CHECK(sample_gnhalf(1, 7).num_edges() == 0);
  CHECK(sample_gnhalf(12, 3) == sample_gnhalf(12, 3));
  CHECK(format_graph(sample_gnhalf(10, 42)) == read_file(kData + "/gnhalf_n10_seed42.graph"));

  // Edge density at n = 20 over many samples.
  const int samples = 10000;
  const double pairs = 190.0 * samples;
  double edges = 0;
  for (int s = 0; s < samples; ++s) edges += sample_gnhalf(20, 1000 + s).num_edges();
  CHECK(std::abs(edges / pairs - 0.5) <= 3 * std::sqrt(0.25 / pairs));
}

TEST_CASE("find_bad_coloring and arrows") {
  const Graph k3 = Graph::complete(3);
  const auto bad = find_bad_coloring(Graph::complete(5), {k3, k3});
  REQUIRE(bad.has_value());
  CHECK(bad->size() == 10);
  CHECK(colouring_is_bad(Graph::complete(5), {k3, k3}, *bad));

  CHECK_FALSE(find_bad_coloring(Graph::complete(6), {k3, k3}).has_value());
  CHECK(arrows_induced(Graph::complete(6), k3, 2));
  CHECK_FALSE(arrows_induced(Graph::complete(5), k3, 2));

  // Any edge is a monochromatic K2.
  const Graph k2 = Graph::complete(2);
  CHECK_FALSE(find_bad_coloring(Graph::cycle(5), {k2, k2}).has_value());
  CHECK(arrows_induced(Graph::complete(7), k2, 2));

  // K3 is never induced in C5, so any colouring avoids it.
  CHECK(find_bad_coloring(Graph::cycle(5), {k3, k3}).has_value());

  std::uint64_t explored = 0;
  CHECK_THROWS_AS(find_bad_coloring(Graph::complete(6), {k3, k3}, 50, &explored), BudgetError);
  CHECK(explored <= 51);
}

TEST_CASE("events on small hosts") {
  const Graph k1 = Graph::complete(1), k2 = Graph::complete(2);

  SUBCASE("B fails when a target has one vertex") {
    for (int n = 2; n <= 6; ++n) {
      const auto rep = check_event(Graph::complete(n),
                                   bad_spec(EventKind::kBad, {k1, k2}, frac(1, 2), frac(1, 8)));
      REQUIRE(rep.holds.has_value());
      CHECK_FALSE(*rep.holds);
    }
  }

  SUBCASE("E fails on an edgeless host") {
    EventSpec spec;
    spec.kind = EventKind::kSupersaturated;
    // With sizes (2, 2) every admissible tuple has a graph on at most one
    // vertex, whose class is always Janson; (3, 3) admits (K2, K2).
    spec.sizes = {3, 3};
    spec.p = frac(1, 2);
    spec.delta = frac(1, 8);
    const Graph g = Graph::empty(6);
    const auto rep = check_event(g, spec);
    REQUIRE(rep.holds.has_value());
    CHECK_FALSE(*rep.holds);
    CHECK(rep.colouring.has_value());
    CHECK(verify_event_witness(g, spec, rep));
  }

  SUBCASE("B implies B' inside the delta regime") {
    const Rational delta = Rational(1) / pow(Rational(2), 36);
    int b_count = 0;
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
      const Graph g = sample_gnhalf(6, seed);
      const auto b = check_event(g, bad_spec(EventKind::kBad, {k2, k2}, frac(1, 2), delta));
      const auto bp = check_event(g, bad_spec(EventKind::kBadPrime, {k2, k2}, frac(1, 2), delta));
      REQUIRE(b.holds.has_value());
      REQUIRE(bp.holds.has_value());
      CHECK(b.exhaustive);
      if (*b.holds) {
        ++b_count;
        CHECK(*bp.holds);
        CHECK(verify_event_witness(g, bad_spec(EventKind::kBad, {k2, k2}, frac(1, 2), delta), b));
      }
    }
    CHECK(b_count > 0);
  }

  SUBCASE("K7 has B without B' outside the delta regime") {
    EventSpec b = bad_spec(EventKind::kBad, {k2, k2}, frac(1, 2), frac(1, 8));
    b.colouring_budget = std::uint64_t{1} << 21;
    EventSpec bp = b;
    bp.kind = EventKind::kBadPrime;
    const Graph k7 = Graph::complete(7);
    const auto rb = check_event(k7, b);
    const auto rbp = check_event(k7, bp);
    CHECK(rb.exhaustive);
    CHECK(rbp.exhaustive);
    CHECK(rb.holds == std::optional<bool>(true));
    CHECK(rbp.holds == std::optional<bool>(false));
    CHECK(verify_event_witness(k7, b, rb));
  }

  CHECK_THROWS_AS(check_event(Graph::complete(3), bad_spec(EventKind::kBad, {}, frac(1, 2),
                                                           frac(1, 8))),
                  InputError);
  CHECK_THROWS_AS(check_event(Graph::complete(3), bad_spec(EventKind::kBad, {k2}, frac(1, 2),
                                                           Rational(0))),
                  InputError);
  CHECK(parse_event_kind(to_string(EventKind::kBadPrime)) == EventKind::kBadPrime);
  CHECK_THROWS_AS(parse_event_kind("nope"), InputError);
}

TEST_CASE("find_maximal_tuple") {
  const Graph k2 = Graph::complete(2);
  SUBCASE("edgeless host stays at zero") {
    const Graph g = Graph::empty(8);
    const auto t = find_maximal_tuple(g, g.vertices(), {}, {k2, k2}, frac(1, 2), frac(1, 2));
    CHECK(t.initial_size == 4);
    CHECK(t.u.size() == 4);
    CHECK(t.r_values == std::vector<int>{0, 0});
    CHECK(t.janson_ok);
    CHECK(t.maximal_ok);
    CHECK(t.scaled_parameters);
  }
  SUBCASE("dense host grows the monochromatic colour") {
    const Graph g = Graph::complete(8);
    const Coloring all_zero(g.num_edges(), 0);
    const auto t = find_maximal_tuple(g, g.vertices(), all_zero, {k2, k2}, frac(1, 2), frac(1, 2));
    CHECK(t.r_values[1] == 0);
    CHECK(t.r_values[0] >= 1);
    CHECK(t.janson_ok);
    CHECK(t.maximal_ok);
    CHECK(t.u.is_subset_of(g.vertices()));
  }
  CHECK_THROWS_AS(find_maximal_tuple(Graph::empty(4), VertexSet{0}, {}, {k2}, frac(1, 2),
                                     frac(1, 2)),
                  InputError);
}

TEST_CASE("config parsing") {
  const ExperimentConfig d = default_config(3, 2);
  CHECK(d.p == Rational(1) / (Rational(Integer(1) << 25) * 9 * 16));
  CHECK(d.delta == Rational(1) / pow(Rational(2), 50));

  const ExperimentConfig empty = parse_config("# nothing\n\n");
  CHECK(empty.k == 3);
  CHECK(empty.r == 2);
  CHECK_FALSE(empty.k_given);
  CHECK_FALSE(empty.p_overridden);

  const ExperimentConfig c = parse_config("k = 4\nr = 3  # three colours\np = 1/8\nN=10\n");
  CHECK(c.k == 4);
  CHECK(c.r == 3);
  CHECK(c.n == 10);
  CHECK(c.p == frac(1, 8));
  CHECK(c.p_overridden);
  CHECK(parse_config(format_config(c)).p == c.p);

  auto message = [](const std::string& text) {
    try {
      parse_config(text);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("k = 3\nbogus\n").find("line 2") != std::string::npos);
  CHECK(message("k = 3\n\ncolour = 2\n").find("line 3") != std::string::npos);
  CHECK(message("k = 3\nk = 4\n").find("line 2") != std::string::npos);
  CHECK(message("k = 3\ndelta = 2\n").find("line 2") != std::string::npos);
  CHECK(message("F = nosuch\n").find("line 1") != std::string::npos);
  CHECK(message("trials =\n").find("line 1") != std::string::npos);
  CHECK(load_config(kData + "/extension_p3.cfg").pattern == "P3");
  CHECK_THROWS_AS(load_config(kData + "/missing.cfg"), InputError);
}

TEST_CASE("chernoff experiment") {
  CHECK(chernoff_experiment(8, 1, 4, 10, 1).per_vertex_exact == frac(1, 2));

  const auto four = chernoff_experiment(16, 4, 16, 2000, 5);
  CHECK(four.per_vertex_exact == frac(11, 16));
  const double samples = 2000.0 * 12;
  CHECK(std::abs(four.per_vertex_frequency - 11.0 / 16) <=
        3 * std::sqrt((11.0 / 16) * (5.0 / 16) / samples));
  CHECK(four.rows.size() == 2000);
  CHECK_FALSE(four.hypothesis_met);

  const auto big = chernoff_experiment(64, 32, 64, 10000, 9, 4);
  CHECK(big.failures == 0);

  CHECK(trials_csv(chernoff_experiment(20, 4, 16, 30, 11, 1).rows) ==
        trials_csv(chernoff_experiment(20, 4, 16, 30, 11, 4).rows));
  CHECK_THROWS_AS(chernoff_experiment(8, 5, 4, 1, 1), InputError);
}

TEST_CASE("extension experiment") {
  const Rational p = default_config(3, 2).p;
  const auto k2 = extension_experiment(Graph::complete(2), 0, 8, 2, 40, 3, p, 0);
  CHECK(k2.gamma_hits == 0);

  const auto none = extension_experiment(*Graph::named("P3"), 0, 8, 2, 0, 3, p, 0);
  CHECK(none.rows.empty());
  CHECK(none.gamma_frequency == 0);

  const ExperimentConfig cfg = load_config(kData + "/extension_p3.cfg");
  const auto rep = extension_experiment(*Graph::named(cfg.pattern), cfg.removed, cfg.m, cfg.r,
                                        cfg.trials, 42, cfg.p, cfg.r_prime);
  CHECK(trials_csv(rep.rows) == read_file(kData + "/extension_p3_m8.csv"));
  const auto par = extension_experiment(*Graph::named(cfg.pattern), cfg.removed, cfg.m, cfg.r,
                                        cfg.trials, 42, cfg.p, cfg.r_prime, 4);
  CHECK(trials_csv(par.rows) == trials_csv(rep.rows));

  CHECK_THROWS_AS(extension_experiment(Graph::complete(2), 2, 8, 2, 1, 1, p, 0), InputError);
  CHECK_THROWS_AS(extension_experiment(Graph::complete(2), 0, 17, 2, 1, 1, p, 0), InputError);
}

TEST_CASE("arrowing all small targets is rare at n = 8") {
  // Observational only: arrowing K3 needs K6 or similar dense structure.
  Graph edge_plus_vertex(3);
  edge_plus_vertex.add_edge(0, 1);
  const std::vector<Graph> targets = {Graph::complete(3), Graph::path(3), Graph::empty(3),
                                      edge_plus_vertex};
  int all = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = sample_gnhalf(8, seed);
    bool every = true;
    for (const Graph& h : targets) every = every && arrows_induced(g, h, 2, std::uint64_t{1} << 16);
    all += every;
  }
  MESSAGE("G(8, 1/2) samples arrowing every 3-vertex target: " << all << "/20");
}
