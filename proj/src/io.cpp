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

#include "jc/io.hpp"

#include <fstream>
#include <sstream>

#include "jc/error.hpp"

namespace jc {
namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(w);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
  throw InputError("line " + std::to_string(line.number) + ": " + what);
}

long to_int(const Line& line, const std::string& token) {
  try {
    std::size_t used = 0;
    const long x = std::stol(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return x;
  } catch (const std::logic_error&) {
    fail(line, "expected an integer, got '" + token + "'");
  }
}

int header(const std::vector<Line>& lines, const std::string& keyword) {
  if (lines.empty()) throw InputError("empty input; expected '" + keyword + " <n>'");
  const Line& h = lines.front();
  if (h.tokens.size() != 2 || h.tokens[0] != keyword) fail(h, "expected '" + keyword + " <n>'");
  const long n = to_int(h, h.tokens[1]);
  if (n < 0 || n > kMaxVertices) fail(h, "universe size must lie in [0, 64]");
  return static_cast<int>(n);
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

Graph parse_graph(const std::string& text) {
  const auto lines = tokenize(text);
  const int n = header(lines, "graph");
  Graph g(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() != 3 || l.tokens[0] != "e") fail(l, "expected 'e <u> <v>'");
    const long u = to_int(l, l.tokens[1]);
    const long v = to_int(l, l.tokens[2]);
    if (!(0 <= u && u < v && v < n)) fail(l, "need 0 <= u < v < n");
    if (g.has_edge(u, v)) fail(l, "duplicate edge");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "graph " << g.num_vertices() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

Graph read_graph(const std::string& path) { return parse_graph(read_file(path)); }

Hypergraph parse_hypergraph(const std::string& text) {
  const auto lines = tokenize(text);
  const int n = header(lines, "hypergraph");
  std::vector<VertexSet> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens[0] != "E") fail(l, "expected 'E <v1> ... <vk>'");
    VertexSet e;
    long prev = -1;
    for (std::size_t j = 1; j < l.tokens.size(); ++j) {
      const long v = to_int(l, l.tokens[j]);
      if (v <= prev) fail(l, "vertices must be strictly increasing");
      if (v >= n) fail(l, "vertex " + std::to_string(v) + " outside the universe");
      e = e.with(static_cast<int>(v));
      prev = v;
    }
    edges.push_back(e);
  }
  try {
    return Hypergraph(n, std::move(edges));
  } catch (const InputError& e) {
    throw InputError(std::string("hypergraph: ") + e.what());
  }
}

std::string format_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  out << "hypergraph " << h.num_vertices() << '\n';
  for (VertexSet e : h.edges()) {
    out << 'E';
    for (int v : e) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

Hypergraph read_hypergraph(const std::string& path) { return parse_hypergraph(read_file(path)); }

ExactMeasure parse_measure(const std::string& text, const Hypergraph& host) {
  std::vector<Rational> weights(host.num_edges(), 0);
  std::vector<bool> seen(host.num_edges(), false);
  for (const Line& l : tokenize(text)) {
    if (l.tokens.size() != 3 || l.tokens[0] != "w") fail(l, "expected 'w <edge-index> <value>'");
    const long i = to_int(l, l.tokens[1]);
    if (i < 0 || static_cast<std::size_t>(i) >= host.num_edges()) {
      fail(l, "edge index " + std::to_string(i) + " out of range");
    }
    if (seen[i]) fail(l, "edge index repeated");
    seen[i] = true;
    Rational w;
    try {
      w = parse_rational(l.tokens[2]);
    } catch (const InputError& e) {
      fail(l, e.what());
    }
    if (w < 0) fail(l, "weights must be nonnegative");
    weights[i] = w;
  }
  return ExactMeasure(host, std::move(weights));
}

std::string format_measure(const ExactMeasure& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m.weight(i) > 0) out << "w " << i << ' ' << to_string(m.weight(i)) << '\n';
  }
  return out.str();
}

std::string format_measure(const FloatMeasure& m) { return format_measure(to_exact(m)); }

std::string format_provenance(const CopyHypergraph& copies) {
  std::ostringstream out;
  for (std::size_t e = 0; e < copies.isomorphisms.size(); ++e) {
    out << "p " << e;
    for (int x : copies.isomorphisms[e]) out << ' ' << x;
    out << '\n';
  }
  return out.str();
}

std::vector<std::vector<int>> parse_provenance(const std::string& text, std::size_t edges) {
  std::vector<std::vector<int>> out(edges);
  std::vector<bool> seen(edges, false);
  for (const Line& l : tokenize(text)) {
    if (l.tokens.size() < 2 || l.tokens[0] != "p") fail(l, "expected 'p <edge-index> <image...>'");
    const long e = to_int(l, l.tokens[1]);
    if (e < 0 || static_cast<std::size_t>(e) >= edges || seen[e]) fail(l, "bad edge index");
    seen[e] = true;
    for (std::size_t j = 2; j < l.tokens.size(); ++j) {
      out[e].push_back(static_cast<int>(to_int(l, l.tokens[j])));
    }
  }
  return out;
}

}  // namespace jc
