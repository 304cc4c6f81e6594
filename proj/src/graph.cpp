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

#include "jc/graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "jc/error.hpp"

namespace jc {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw InputError("graph size " + std::to_string(n) + " outside [0, 64]");
  }
  adj_.assign(static_cast<std::size_t>(n), VertexSet());
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) g.adj_[u] = VertexSet::range(n).without(u);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(0, n - 1);
  return g;
}

std::optional<Graph> Graph::named(const std::string& name) {
  if (name.size() < 2) return std::nullopt;
  const std::string digits = name.substr(1);
  if (!std::all_of(digits.begin(), digits.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
      digits.size() > 2) {
    return std::nullopt;
  }
  const int n = std::stoi(digits);
  if (n > kMaxVertices) return std::nullopt;
  switch (name[0]) {
    case 'K': return complete(n);
    case 'E': return empty(n);
    case 'P': return path(n);
    case 'C': return cycle(n);
    default: return std::nullopt;
  }
}

int Graph::num_edges() const {
  int twice = 0;
  for (VertexSet row : adj_) twice += row.size();
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[u]) {
      if (v > u) out.emplace_back(u, v);
    }
  }
  return out;
}

int Graph::edges_within(VertexSet s) const {
  int twice = 0;
  for (int u : s) twice += (adj_[u] & s).size();
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                     ") outside [0," + std::to_string(n_) + ")");
  }
  if (u == v) throw InputError("self-loop at " + std::to_string(u));
  adj_[u] = adj_[u].with(v);
  adj_[v] = adj_[v].with(u);
}

void Graph::remove_edge(int u, int v) {
  adj_[u] = adj_[u].without(v);
  adj_[v] = adj_[v].without(u);
}

bool Graph::is_subgraph_of(const Graph& other) const {
  if (n_ != other.n_) return false;
  for (int u = 0; u < n_; ++u) {
    if (!adj_[u].is_subset_of(other.adj_[u])) return false;
  }
  return true;
}

bool Graph::agrees_on(const Graph& other, VertexSet l) const {
  for (int u : l) {
    if ((adj_[u] & l) != (other.adj_[u] & l)) return false;
  }
  return true;
}

Graph Graph::induced(VertexSet s) const {
  const std::vector<int> members = s.to_vector();
  Graph g(static_cast<int>(members.size()));
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (has_edge(members[i], members[j])) {
        g.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return g;
}

Graph Graph::without_vertex(int w) const {
  return induced(vertices().without(w));
}

namespace {

struct IsoSearch {
  const Graph& pattern;
  const Graph& host;
  std::vector<int> hosts;       // sorted L
  std::vector<int> host_deg;    // degree inside L
  std::vector<int> phi;
  VertexSet used;

  bool extend(std::size_t j) {
    if (j == hosts.size()) return true;
    const int k = static_cast<int>(hosts.size());
    for (int target = 0; target < k; ++target) {
      if (used.contains(target)) continue;
      if (pattern.degree(target) != host_deg[j]) continue;
      bool consistent = true;
      for (std::size_t i = 0; i < j && consistent; ++i) {
        consistent = host.has_edge(hosts[i], hosts[j]) ==
                     pattern.has_edge(phi[i], target);
      }
      if (!consistent) continue;
      phi[j] = target;
      used = used.with(target);
      if (extend(j + 1)) return true;
      used = used.without(target);
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> least_isomorphism(const Graph& pattern,
                                                  const Graph& host,
                                                  VertexSet l) {
  const int k = pattern.num_vertices();
  if (k > 8) throw InputError("isomorphism patterns are capped at 8 vertices");
  if (l.size() != k) return std::nullopt;
  if (host.edges_within(l) != pattern.num_edges()) return std::nullopt;
  IsoSearch search{pattern, host, l.to_vector(), {}, {}, VertexSet()};
  search.phi.assign(static_cast<std::size_t>(k), -1);
  for (int u : search.hosts) search.host_deg.push_back((host.neighbours(u) & l).size());
  std::vector<int> a = search.host_deg;
  std::vector<int> b;
  for (int t = 0; t < k; ++t) b.push_back(pattern.degree(t));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return std::nullopt;
  if (!search.extend(0)) return std::nullopt;
  return search.phi;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices()) return false;
  return least_isomorphism(a, b, b.vertices()).has_value();
}

std::uint64_t canonical_code(const Graph& g) {
  const int k = g.num_vertices();
  if (k > 8) throw InputError("canonical codes are capped at 8 vertices");
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        code = (code << 1) | (g.has_edge(perm[i], perm[j]) ? 1U : 0U);
      }
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Graph> graphs_up_to_isomorphism(int k) {
  if (k < 0 || k > 5) throw InputError("graph catalogue covers 0..5 vertices");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
  }
  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Graph g(k);
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if ((mask >> e) & 1U) g.add_edge(pairs[e].first, pairs[e].second);
    }
    if (seen.insert(canonical_code(g)).second) out.push_back(g);
  }
  return out;
}

}  // namespace jc
