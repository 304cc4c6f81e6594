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

#include <cstdio>
#include <string>

#include <doctest.h>

#include "jc/copies.hpp"
#include "jc/error.hpp"
#include "jc/io.hpp"
#include "jc/rng.hpp"

using namespace jc;

namespace {

std::string error_of(auto&& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "no error";
}

}  // namespace

TEST_CASE("graph round trip") {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(12));
    Graph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng.below(2)) g.add_edge(u, v);
      }
    }
    CHECK(parse_graph(format_graph(g)) == g);
  }
  const Graph c = parse_graph("# a path\ngraph 3\n\ne 0 1   # first\ne 1 2\n");
  CHECK(c == Graph::path(3));
}

TEST_CASE("graph errors carry line numbers") {
  CHECK(error_of([] { parse_graph(""); }).find("expected 'graph <n>'") != std::string::npos);
  CHECK(error_of([] { parse_graph("graph 3\ne 0 1\ne 1 1\n"); }).find("line 3") !=
        std::string::npos);
  CHECK(error_of([] { parse_graph("graph 3\n\ne 0 1\ne 0 1\n"); }).find("line 4") !=
        std::string::npos);
  CHECK(error_of([] { parse_graph("graph x\n"); }).find("line 1") != std::string::npos);
  CHECK(error_of([] { parse_graph("graph 65\n"); }).find("line 1") != std::string::npos);
  CHECK(error_of([] { parse_graph("graph 3\nf 0 1\n"); }).find("line 2") != std::string::npos);
  CHECK_THROWS_AS(read_graph("/nonexistent/graph.txt"), InputError);
}

TEST_CASE("hypergraph round trip") {
  const Hypergraph h(6, {{0, 1, 2}, {2, 5}, {}, {4}});
  const Hypergraph back = parse_hypergraph(format_hypergraph(h));
  CHECK(back.num_vertices() == 6);
  CHECK(back.edges() == h.edges());
  CHECK(format_hypergraph(back) == "hypergraph 6\nE 0 1 2\nE 2 5\nE\nE 4\n");
}

TEST_CASE("hypergraph errors") {
  CHECK(error_of([] { parse_hypergraph("hypergraph 3\nE 0 3\n"); }).find("line 2") !=
        std::string::npos);
  CHECK(error_of([] { parse_hypergraph("hypergraph 3\nE 1 0\n"); }).find("increasing") !=
        std::string::npos);
  CHECK(error_of([] { parse_hypergraph("graph 3\n"); }).find("line 1") != std::string::npos);
  CHECK(error_of([] { parse_hypergraph("hypergraph 3\nE 0\n\nX 1\n"); }).find("line 4") !=
        std::string::npos);
}

TEST_CASE("measure round trip") {
  const Hypergraph h(4, {{0, 1}, {1, 2}, {2, 3}});
  const ExactMeasure m = parse_measure("w 0 1/3\n# skip\nw 2 2/3\n", h);
  CHECK(m.weight(0) == Rational(1, 3));
  CHECK(m.weight(1) == 0);
  CHECK(format_measure(m) == "w 0 1/3\nw 2 2/3\n");
  CHECK(format_measure(parse_measure(format_measure(m), h)) == format_measure(m));

  // Doubles are written exactly.
  const FloatMeasure f(h, {0.5, 0.25, 0.1});
  const ExactMeasure e = parse_measure(format_measure(f), h);
  CHECK(e.weight(0) == Rational(1, 2));
  CHECK(e.weight(2).get_d() == 0.1);

  CHECK(error_of([&] { parse_measure("w 3 1\n", h); }).find("line 1") != std::string::npos);
  CHECK(error_of([&] { parse_measure("w 0 1\nw 0 2\n", h); }).find("line 2") !=
        std::string::npos);
  CHECK(error_of([&] { parse_measure("\nw 1 -1/2\n", h); }).find("line 2") !=
        std::string::npos);
  CHECK(error_of([&] { parse_measure("w 1 abc\n", h); }).find("line 1") != std::string::npos);
}

TEST_CASE("provenance round trip") {
  const CopyHypergraph copies =
      induced_copy_hypergraph(Graph::path(3), Graph::cycle(5), Graph::cycle(5));
  REQUIRE(copies.hypergraph.num_edges() == 5);
  const auto back = parse_provenance(format_provenance(copies), copies.hypergraph.num_edges());
  CHECK(back == copies.isomorphisms);
  CHECK(error_of([] { parse_provenance("p 0 1\np 0 2\n", 2); }).find("line 2") !=
        std::string::npos);
  CHECK(error_of([] { parse_provenance("p 5 1\n", 2); }).find("line 1") != std::string::npos);
}

TEST_CASE("file helpers") {
  const std::string path = "jc_io_test.tmp";
  write_file(path, "graph 2\ne 0 1\n");
  CHECK(read_graph(path) == Graph::complete(2));
  std::remove(path.c_str());
  CHECK_THROWS_AS(write_file("/nonexistent/dir/x", "y"), InputError);
}
