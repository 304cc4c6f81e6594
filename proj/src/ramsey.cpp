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
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "jc/error.hpp"
#include "jc/ramsey.hpp"
#include "jc/rng.hpp"

namespace jc {
namespace {

struct Copy {
  std::uint64_t edges = 0;  // bit j: edge j of the host
  int need = 0;
};

std::vector<Copy> induced_copies(const Graph& pattern, const Graph& g,
                                 const std::vector<std::pair<int, int>>& edges) {
  std::vector<Copy> out;
  const int k = pattern.num_vertices();
  if (k > g.num_vertices()) return out;
  for_each_k_subset(g.num_vertices(), k, [&](VertexSet l) {
    if (g.edges_within(l) != pattern.num_edges()) return true;
    if (!least_isomorphism(pattern, g, l)) return true;
    Copy c;
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (l.contains(edges[j].first) && l.contains(edges[j].second)) {
        c.edges |= std::uint64_t{1} << j;
      }
    }
    c.need = std::popcount(c.edges);
    out.push_back(c);
    return true;
  });
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const long long x = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    if (x < 0 || x > (1LL << 40)) throw std::out_of_range(value);
    return static_cast<int>(x);
  } catch (const std::logic_error&) {
    throw InputError("config key '" + key + "' needs a nonnegative integer, got '" + value + "'");
  }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const unsigned long long x = std::stoull(value, &used);
    if (used != value.size() || value.front() == '-') throw std::invalid_argument(value);
    return x;
  } catch (const std::logic_error&) {
    throw InputError("config key '" + key + "' needs a nonnegative integer, got '" + value + "'");
  }
}

}  // namespace

Graph sample_gnhalf(int n, std::uint64_t seed) {
  if (n < 0 || n > kMaxVertices) throw InputError("sample_gnhalf needs 0 <= n <= 64");
  Rng rng(seed);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.next() >> 63) g.add_edge(u, v);
    }
  }
  return g;
}

Graph colour_class(const Graph& g, const Coloring& c, int colour) {
  const auto edges = g.edges();
  if (c.size() != edges.size()) throw InputError("colouring does not match the edge count");
  Graph out(g.num_vertices());
  for (std::size_t j = 0; j < edges.size(); ++j) {
    if (c[j] == colour) out.add_edge(edges[j].first, edges[j].second);
  }
  return out;
}

std::optional<Coloring> find_bad_coloring(const Graph& g, const std::vector<Graph>& targets,
                                          std::optional<std::uint64_t> budget,
                                          std::uint64_t* explored) {
  const int r = static_cast<int>(targets.size());
  if (r < 1) throw InputError("need at least one colour");
  const auto edges = g.edges();
  const std::size_t e = edges.size();
  if (e > 64) throw InputError("colouring search is capped at 64 edges");
  if (!budget && e > 30) budget = 10'000'000;

  std::vector<std::vector<Copy>> copies(r);
  for (int i = 0; i < r; ++i) {
    copies[i] = induced_copies(targets[i], g, edges);
    for (const Copy& c : copies[i]) {
      // An edgeless copy is monochromatic in every colouring.
      if (c.need == 0) {
        if (explored) *explored = 0;
        return std::nullopt;
      }
    }
  }

  std::vector<std::size_t> order(e);
  std::iota(order.begin(), order.end(), 0);
  auto weight = [&](std::size_t j) {
    return std::max(g.degree(edges[j].first), g.degree(edges[j].second));
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return weight(a) > weight(b); });

  // touching[pos][i]: copies of colour i containing the edge at position pos.
  std::vector<std::vector<std::vector<std::size_t>>> touching(
      e, std::vector<std::vector<std::size_t>>(r));
  for (std::size_t pos = 0; pos < e; ++pos) {
    for (int i = 0; i < r; ++i) {
      for (std::size_t c = 0; c < copies[i].size(); ++c) {
        if ((copies[i][c].edges >> order[pos]) & 1) touching[pos][i].push_back(c);
      }
    }
  }
  bool symmetric = true;
  for (int i = 1; i < r; ++i) symmetric = symmetric && isomorphic(targets[i], targets[0]);

  std::vector<std::vector<int>> count(r);
  for (int i = 0; i < r; ++i) count[i].assign(copies[i].size(), 0);
  Coloring colour(e, -1);
  std::uint64_t nodes = 0;

  auto dfs = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == e) return true;
    const int top = (symmetric && pos == 0) ? 1 : r;
    for (int col = 0; col < top; ++col) {
      if (budget && ++nodes > *budget) {
        throw BudgetError("colouring search exceeded its budget", nodes);
      }
      if (!budget) ++nodes;
      bool dead = false;
      for (std::size_t c : touching[pos][col]) {
        if (++count[col][c] == copies[col][c].need) dead = true;
      }
      if (!dead) {
        colour[order[pos]] = col;
        if (self(self, pos + 1)) return true;
      }
      for (std::size_t c : touching[pos][col]) --count[col][c];
    }
    return false;
  };
  const bool found = dfs(dfs, 0);
  if (explored) *explored = nodes;
  if (!found) return std::nullopt;
  return colour;
}

bool arrows_induced(const Graph& g, const Graph& h, int r, std::optional<std::uint64_t> budget) {
  if (r < 1) throw InputError("need r >= 1");
  return !find_bad_coloring(g, std::vector<Graph>(r, h), budget).has_value();
}

ExperimentConfig default_config(int k, int r) {
  if (k < 1 || r < 1) throw InputError("need k >= 1 and r >= 1");
  ExperimentConfig c;
  c.k = k;
  c.r = r;
  c.delta = 1 / pow(Rational(r), 50);
  c.p = Rational(1) / (Rational(Integer(1) << 25) * k * k * r * r * r * r);
  return c;
}

ExperimentConfig parse_config(const std::string& text) {
  static const std::set<std::string> kKeys = {"k",     "r",  "N",    "m",      "C",
                                              "delta", "p",  "seed", "trials", "budget",
                                              "u_size", "s_size", "F", "w",    "R_prime"};
  std::map<std::string, std::string> kv;
  std::map<std::string, int> lines;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InputError("config line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const std::string where = "config line " + std::to_string(lineno) + ": ";
    if (!kKeys.count(key)) throw InputError(where + "unknown key '" + key + "'");
    if (value.empty()) throw InputError(where + "key '" + key + "' has no value");
    if (!kv.emplace(key, value).second) throw InputError(where + "duplicate key '" + key + "'");
    lines[key] = lineno;
  }
  // Value errors name the line the offending key came from.
  std::string current;
  auto get = [&](const std::string& key) -> const std::string& {
    current = key;
    return kv.at(key);
  };
  ExperimentConfig c;
  try {
    const int k = kv.count("k") ? parse_int("k", get("k")) : 3;
    const int r = kv.count("r") ? parse_int("r", get("r")) : 2;
    c = default_config(k, r);
    c.k_given = kv.count("k") > 0;
    c.r_given = kv.count("r") > 0;
    if (kv.count("N")) c.n = parse_int("N", get("N"));
    if (kv.count("m")) c.m = parse_int("m", get("m"));
    if (kv.count("C")) {
      c.c = parse_int("C", get("C"));
      c.c_overridden = c.c != 300;
    }
    if (kv.count("delta")) {
      const Rational d = parse_rational(get("delta"));
      if (d <= 0 || d > 1) throw InputError("delta must lie in (0, 1]");
      c.delta_overridden = d != c.delta;
      c.delta = d;
    }
    if (kv.count("p")) {
      const Rational p = parse_rational(get("p"));
      validate_probability(p);
      c.p_overridden = p != c.p;
      c.p = p;
    }
    if (kv.count("seed")) {
      c.seed = parse_u64("seed", get("seed"));
      c.seed_given = true;
    }
    if (kv.count("trials")) c.trials = parse_u64("trials", get("trials"));
    if (kv.count("budget")) c.budget = parse_u64("budget", get("budget"));
    if (kv.count("u_size")) c.u_size = parse_int("u_size", get("u_size"));
    if (kv.count("s_size")) c.s_size = parse_int("s_size", get("s_size"));
    if (kv.count("F")) {
      if (!Graph::named(get("F"))) throw InputError("unknown graph name '" + get("F") + "'");
      c.pattern = get("F");
    }
    if (kv.count("w")) c.removed = parse_int("w", get("w"));
    if (kv.count("R_prime")) {
      c.r_prime = parse_rational(get("R_prime"));
      if (c.r_prime < 0) throw InputError("R_prime must be nonnegative");
    }
  } catch (const InputError& e) {
    if (current.empty()) throw;
    throw InputError("config line " + std::to_string(lines.at(current)) + ": " + e.what());
  }
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string format_config(const ExperimentConfig& c) {
  std::ostringstream out;
  out << "k = " << c.k << "\nr = " << c.r << "\nN = " << c.n << "\nm = " << c.m
      << "\nC = " << c.c << "\ndelta = " << to_string(c.delta) << "\np = " << to_string(c.p)
      << "\nseed = " << c.seed << "\ntrials = " << c.trials << "\nbudget = " << c.budget
      << "\nu_size = " << c.u_size << "\ns_size = " << c.s_size << "\nF = " << c.pattern
      << "\nw = " << c.removed << "\nR_prime = " << to_string(c.r_prime) << "\n";
  return out.str();
}

}  // namespace jc
