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

#include "jc/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "jc/error.hpp"

namespace jc {

Hypergraph::Hypergraph(int n, std::vector<VertexSet> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n < 0 || n > kMaxVertices) {
    throw InputError("hypergraph universe " + std::to_string(n) +
                     " outside [0, 64]");
  }
  const VertexSet all = universe();
  index_.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (!edges_[i].is_subset_of(all)) {
      throw InputError("edge " + edges_[i].to_string() +
                       " leaves the universe [0," + std::to_string(n) + ")");
    }
    if (!index_.emplace(edges_[i], i).second) {
      throw InputError("duplicate edge " + edges_[i].to_string());
    }
  }
}

Hypergraph Hypergraph::deduplicated(int n, const std::vector<VertexSet>& edges) {
  std::vector<VertexSet> unique;
  std::unordered_map<VertexSet, bool, VertexSetHash> seen;
  for (VertexSet e : edges) {
    if (seen.emplace(e, true).second) unique.push_back(e);
  }
  return Hypergraph(n, std::move(unique));
}

std::optional<std::size_t> Hypergraph::index_of(VertexSet e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Hypergraph::uniformity() const {
  if (edges_.empty()) return std::nullopt;
  const int s = edges_.front().size();
  for (VertexSet e : edges_) {
    if (e.size() != s) return std::nullopt;
  }
  return s;
}

int Hypergraph::max_edge_size() const {
  int s = 0;
  for (VertexSet e : edges_) s = std::max(s, e.size());
  return s;
}

int Hypergraph::min_edge_size() const {
  int s = kMaxVertices + 1;
  for (VertexSet e : edges_) s = std::min(s, e.size());
  return edges_.empty() ? 0 : s;
}

Hypergraph Hypergraph::edges_within(VertexSet s) const {
  std::vector<VertexSet> kept;
  for (VertexSet e : edges_) {
    if (e.is_subset_of(s)) kept.push_back(e);
  }
  return Hypergraph(n_, std::move(kept));
}

bool Hypergraph::spans_edge_in(VertexSet s) const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [s](VertexSet e) { return e.is_subset_of(s); });
}

bool Hypergraph::same_edge_set(const Hypergraph& other) const {
  return n_ == other.n_ && edges_.size() == other.edges_.size() &&
         is_subhypergraph_of(other);
}

bool Hypergraph::is_subhypergraph_of(const Hypergraph& other) const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [&](VertexSet e) { return other.contains_edge(e); });
}

VertexMap VertexMap::identity(int n) {
  VertexMap pi{n, n, {}};
  for (int v = 0; v < n; ++v) pi.table.push_back(v);
  return pi;
}

VertexSet VertexMap::image(VertexSet s) const {
  VertexSet out;
  for (int v : s) out = out.with((*this)(v));
  return out;
}

VertexSet VertexMap::preimage(VertexSet s) const {
  VertexSet out;
  for (int v = 0; v < source_size; ++v) {
    if (s.contains((*this)(v))) out = out.with(v);
  }
  return out;
}

void VertexMap::validate() const {
  if (source_size < 0 || source_size > kMaxVertices || target_size < 0 ||
      target_size > kMaxVertices) {
    throw InputError("vertex map universes must lie in [0, 64]");
  }
  if (table.size() != static_cast<std::size_t>(source_size)) {
    throw InputError("vertex map is not total on its source");
  }
  for (int t : table) {
    if (t < 0 || t >= target_size) {
      throw InputError("vertex map image " + std::to_string(t) +
                       " outside the target universe");
    }
  }
}

InducedSub induced_sub(const Hypergraph& h, VertexSet w) {
  if (!w.is_subset_of(h.universe())) {
    throw InputError("vertex set " + w.to_string() + " leaves the universe");
  }
  InducedSub out;
  out.to_parent = w.to_vector();
  std::vector<int> to_local(static_cast<std::size_t>(h.num_vertices()), -1);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    to_local[static_cast<std::size_t>(out.to_parent[i])] = static_cast<int>(i);
  }
  std::vector<VertexSet> edges;
  for (VertexSet e : h.edges()) {
    if (!e.is_subset_of(w)) continue;
    VertexSet local;
    for (int v : e) local = local.with(to_local[static_cast<std::size_t>(v)]);
    edges.push_back(local);
  }
  out.hypergraph = Hypergraph(w.size(), std::move(edges));
  return out;
}

Hypergraph upset_slice(const Hypergraph& h, int s) {
  if (s < 0) throw InputError("slice size must be nonnegative");
  const Hypergraph minimal = minimal_edges(h);
  std::vector<VertexSet> edges;
  std::uint64_t visited = 0;
  for_each_k_subset(h.num_vertices(), s, [&](VertexSet candidate) {
    if (++visited > (std::uint64_t{1} << 26)) {
      throw BudgetError("up-set slice too large", visited);
    }
    if (minimal.spans_edge_in(candidate)) edges.push_back(candidate);
    return true;
  });
  return Hypergraph(h.num_vertices(), std::move(edges));
}

Hypergraph nonstrict_link(const Hypergraph& h, VertexSet t) {
  if (!t.is_subset_of(h.universe())) {
    throw InputError("vertex set " + t.to_string() + " leaves the universe");
  }
  std::vector<VertexSet> edges;
  edges.reserve(h.num_edges());
  for (VertexSet e : h.edges()) edges.push_back(e - t);
  return Hypergraph::deduplicated(h.num_vertices(), edges);
}

Hypergraph edgewise_include(const Hypergraph& h, int v) {
  if (v < h.num_vertices()) {
    throw InputError("vertex " + std::to_string(v) +
                     " already lies in the universe");
  }
  if (v >= kMaxVertices) throw InputError("universe would exceed 64 vertices");
  std::vector<VertexSet> edges;
  edges.reserve(h.num_edges());
  for (VertexSet e : h.edges()) edges.push_back(e.with(v));
  return Hypergraph(v + 1, std::move(edges));
}

Projection project(const Hypergraph& h, const VertexMap& pi) {
  pi.validate();
  if (pi.source_size != h.num_vertices()) {
    throw InputError("vertex map source does not match the universe");
  }
  Projection out;
  std::vector<VertexSet> images;
  std::unordered_map<VertexSet, std::size_t, VertexSetHash> slot;
  for (VertexSet e : h.edges()) {
    const VertexSet img = pi.image(e);
    auto [it, inserted] = slot.emplace(img, images.size());
    if (inserted) {
      images.push_back(img);
      out.preimage_count.push_back(0);
    }
    ++out.preimage_count[it->second];
    out.image_of_edge.push_back(it->second);
  }
  out.image = Hypergraph(pi.target_size, std::move(images));
  return out;
}

namespace {

// Decides vertices from the highest index down, so leaves appear in increasing
// numeric order. An edge can only be violated once its lowest vertex is
// decided, so each edge is checked exactly at that point and every explored
// prefix extends to at least one independent set.
class IndependentSetWalker {
 public:
  IndependentSetWalker(const Hypergraph& h, VertexSet forced,
                       const IndependentSetOptions& options,
                       const std::function<bool(VertexSet)>& visit)
      : n_(h.num_vertices()), forced_(forced), visit_(visit) {
    if (n_ > options.max_universe && !options.budget) {
      throw InputError("independent-set enumeration over " +
                       std::to_string(n_) + " vertices needs a budget");
    }
    budget_ = options.budget.value_or(~std::uint64_t{0});
    by_lowest_.resize(static_cast<std::size_t>(n_));
    for (VertexSet e : h.edges()) {
      if (e.empty()) {
        has_empty_edge_ = true;
      } else {
        by_lowest_[static_cast<std::size_t>(e.lowest())].push_back(e);
      }
    }
  }

  std::uint64_t run() {
    if (has_empty_edge_) return 0;
    walk(n_ - 1, VertexSet());
    return count_;
  }

 private:
  // Returns false once the visitor asks to stop.
  bool walk(int v, VertexSet chosen) {
    if (v < 0) {
      if (++count_ > budget_) {
        throw BudgetError("independent-set enumeration exceeded budget",
                          count_ - 1);
      }
      return visit_(chosen);
    }
    if (!forced_.contains(v)) {
      if (!walk(v - 1, chosen)) return false;
    }
    const VertexSet with_v = chosen.with(v);
    for (VertexSet e : by_lowest_[static_cast<std::size_t>(v)]) {
      if (e.is_subset_of(with_v)) return true;
    }
    return walk(v - 1, with_v);
  }

  int n_;
  VertexSet forced_;
  const std::function<bool(VertexSet)>& visit_;
  std::uint64_t budget_ = 0;
  std::uint64_t count_ = 0;
  bool has_empty_edge_ = false;
  std::vector<std::vector<VertexSet>> by_lowest_;
};

}  // namespace

std::uint64_t for_each_independent_set(
    const Hypergraph& h, const std::function<bool(VertexSet)>& visit,
    const IndependentSetOptions& options) {
  IndependentSetWalker walker(h, VertexSet(), options, visit);
  return walker.run();
}

std::vector<VertexSet> independent_sets(const Hypergraph& h,
                                        const IndependentSetOptions& options) {
  std::vector<VertexSet> out;
  for_each_independent_set(
      h, [&](VertexSet s) { out.push_back(s); return true; }, options);
  return out;
}

std::vector<std::uint64_t> count_independent_supersets(
    const Hypergraph& h, VertexSet forced, const IndependentSetOptions& options) {
  if (!forced.is_subset_of(h.universe())) {
    throw InputError("vertex set " + forced.to_string() + " leaves the universe");
  }
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(h.num_vertices()) + 1, 0);
  const std::function<bool(VertexSet)> visit = [&](VertexSet s) {
    ++counts[static_cast<std::size_t>(s.size())];
    return true;
  };
  IndependentSetWalker walker(h, forced, options, visit);
  walker.run();
  return counts;
}

Hypergraph minimal_edges(const Hypergraph& h) {
  std::vector<VertexSet> kept;
  const auto& edges = h.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < edges.size() && minimal; ++j) {
      if (j != i && edges[j].is_subset_of(edges[i])) minimal = false;
    }
    if (minimal) kept.push_back(edges[i]);
  }
  return Hypergraph(h.num_vertices(), std::move(kept));
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : *this) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace jc
