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
#include <map>
#include <unordered_map>

#include "jc/copies.hpp"
#include "jc/error.hpp"
#include "jc/ramsey.hpp"
#include "jc/rng.hpp"

namespace jc {
namespace {

Integer ceil_of(const Rational& x) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

int ceil_int(const Rational& x, int cap) {
  const Integer c = ceil_of(x);
  if (c <= 0) return 0;
  return c > cap ? cap + 1 : static_cast<int>(c.get_si());
}

// Smallest k >= delta^{2/3} n, decided as k^3 >= delta^2 n^3.
int ceil_two_thirds(const Rational& delta, int n) {
  const Rational target = delta * delta * n * n * n;
  for (int k = 0; k <= n; ++k) {
    if (Rational(k) * k * k >= target) return k;
  }
  return n + 1;
}

// Induced copies of one pattern, as vertex sets and host edge masks.
struct CopyTable {
  std::vector<VertexSet> sets;
  std::vector<std::uint64_t> masks;
  int pattern_size = 0;
  bool edgeless_pattern = false;
};

CopyTable copy_table(const Graph& pattern, const Graph& g,
                     const std::vector<std::pair<int, int>>& edges) {
  CopyTable t;
  t.pattern_size = pattern.num_vertices();
  t.edgeless_pattern = pattern.num_edges() == 0;
  if (t.pattern_size > g.num_vertices()) return t;
  const CopyHypergraph all = induced_copy_hypergraph(pattern, g, g);
  for (VertexSet l : all.hypergraph.edges()) {
    std::uint64_t mask = 0;
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (l.contains(edges[j].first) && l.contains(edges[j].second)) {
        mask |= std::uint64_t{1} << j;
      }
    }
    t.sets.push_back(l);
    t.masks.push_back(mask);
  }
  return t;
}

// Searches colourings of `g` for one where, in every colour i, the copies of
// targets[i] coloured i do not form a (p, R)-Janson hypergraph.
class ColourSearch {
 public:
  ColourSearch(const Graph& g, const std::vector<Graph>& targets, const Rational& p,
               const Rational& r, const SolverOptions& solver, EventReport& report)
      : g_(g), edges_(g.edges()), p_(p), r_(r), solver_(solver), report_(report) {
    if (edges_.size() > 64) throw InputError("colouring search is capped at 64 edges");
    for (const Graph& h : targets) {
      tables_.push_back(copy_table(h, g, edges_));
      rules_.push_back(uniform_count_rule(h.num_vertices(), p, r));
    }
    memo_.resize(targets.size());
  }

  std::optional<Coloring> run(std::uint64_t budget, std::uint64_t seed, bool& exhaustive) {
    const int r = static_cast<int>(tables_.size());
    const std::size_t e = edges_.size();
    long double total = 1;
    for (std::size_t j = 0; j < e; ++j) total *= r;
    Coloring c(e, 0);
    if (total <= static_cast<long double>(budget)) {
      const auto count = static_cast<std::uint64_t>(total);
      for (std::uint64_t x = 0; x < count; ++x) {
        std::uint64_t rest = x;
        for (std::size_t j = 0; j < e; ++j) {
          c[j] = static_cast<int>(rest % r);
          rest /= r;
        }
        if (bad(c)) return c;
      }
      return std::nullopt;
    }
    exhaustive = false;
    Rng rng(seed);
    for (std::uint64_t x = 0; x < budget; ++x) {
      for (std::size_t j = 0; j < e; ++j) c[j] = static_cast<int>(rng.below(r));
      if (bad(c)) return c;
    }
    return std::nullopt;
  }

  // Janson status of colour i's copy hypergraph under colouring c.
  bool janson(std::size_t i, const Coloring& c) {
    std::uint64_t cls = 0;
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] == static_cast<int>(i)) cls |= std::uint64_t{1} << j;
    }
    const CopyTable& t = tables_[i];
    std::uint64_t count = 0;
    for (std::uint64_t m : t.masks) count += (m & ~cls) == 0;
    if (rules_[i].decides(count)) return rules_[i].janson(count);
    auto& memo = memo_[i];
    if (auto it = memo.find(cls); it != memo.end()) return it->second;
    std::vector<VertexSet> live;
    for (std::size_t k = 0; k < t.masks.size(); ++k) {
      if ((t.masks[k] & ~cls) == 0) live.push_back(t.sets[k]);
    }
    ++report_.janson_queries;
    const bool yes = janson_or_throw(Hypergraph(g_.num_vertices(), live), p_, r_,
                                     "colour " + std::to_string(i) + " copy hypergraph",
                                     solver_);
    memo.emplace(cls, yes);
    return yes;
  }

 private:
  bool bad(const Coloring& c) {
    ++report_.colourings_checked;
    for (std::size_t i = 0; i < tables_.size(); ++i) {
      if (janson(i, c)) return false;
    }
    return true;
  }

  const Graph& g_;
  std::vector<std::pair<int, int>> edges_;
  Rational p_, r_;
  SolverOptions solver_;
  EventReport& report_;
  std::vector<CopyTable> tables_;
  std::vector<CountRule> rules_;
  std::vector<std::unordered_map<std::uint64_t, bool>> memo_;
};

// Lift a colouring of g.induced(s) to the edges of g; other edges get -1.
Coloring lift(const Graph& g, VertexSet s, const Coloring& inner) {
  const auto outer = g.edges();
  const auto members = s.to_vector();
  std::map<std::pair<int, int>, int> colour_of;
  const auto sub_edges = g.induced(s).edges();
  for (std::size_t j = 0; j < sub_edges.size(); ++j) {
    colour_of[{members[sub_edges[j].first], members[sub_edges[j].second]}] = inner[j];
  }
  Coloring c(outer.size(), -1);
  for (std::size_t j = 0; j < outer.size(); ++j) {
    if (auto it = colour_of.find(outer[j]); it != colour_of.end()) c[j] = it->second;
  }
  return c;
}

// Subsets of [n] of size k: all of them when within budget, else a sample.
std::vector<VertexSet> subsets_of_size(int n, int k, std::uint64_t budget, std::uint64_t seed,
                                       bool& exhaustive) {
  std::vector<VertexSet> out;
  long double total = 1;
  for (int i = 0; i < k; ++i) total = total * (n - i) / (i + 1);
  if (total <= static_cast<long double>(budget)) {
    for_each_k_subset(n, k, [&](VertexSet w) {
      out.push_back(w);
      return true;
    });
    return out;
  }
  exhaustive = false;
  Rng rng(seed);
  std::vector<int> perm(n);
  for (std::uint64_t x = 0; x < budget; ++x) {
    for (int i = 0; i < n; ++i) perm[i] = i;
    VertexSet w;
    for (int i = 0; i < k; ++i) {
      const int j = i + static_cast<int>(rng.below(n - i));
      std::swap(perm[i], perm[j]);
      w = w.with(perm[i]);
    }
    out.push_back(w);
  }
  return out;
}

int total_vertices(const std::vector<Graph>& tuple) {
  int t = 0;
  for (const Graph& f : tuple) t += f.num_vertices();
  return t;
}

// Every tuple (F_1..F_r) from the catalog with v(F_i) <= s_i and sum t'.
void catalog_tuples(const std::vector<int>& sizes, int t_prime,
                    std::vector<std::vector<Graph>>& out) {
  std::vector<std::vector<Graph>> options(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    for (int k = 0; k <= sizes[i]; ++k) {
      for (const Graph& f : graphs_up_to_isomorphism(k)) options[i].push_back(f);
    }
  }
  std::vector<Graph> current;
  auto rec = [&](auto&& self, std::size_t i, int used) -> void {
    if (i == sizes.size()) {
      if (used == t_prime) out.push_back(current);
      return;
    }
    for (const Graph& f : options[i]) {
      if (used + f.num_vertices() > t_prime) continue;
      current.push_back(f);
      self(self, i + 1, used + f.num_vertices());
      current.pop_back();
    }
  };
  rec(rec, 0, 0);
}

Rational bad_prime_r(const EventSpec& spec, int n) {
  const int r = static_cast<int>(spec.targets.size());
  return spec.delta * spec.p * n / (512 * r);
}

}  // namespace

const char* to_string(EventKind kind) {
  switch (kind) {
    case EventKind::kBad: return "B";
    case EventKind::kBadPrime: return "Bprime";
    case EventKind::kSupersaturated: return "E";
  }
  return "?";
}

EventKind parse_event_kind(const std::string& s) {
  if (s == "B") return EventKind::kBad;
  if (s == "Bprime") return EventKind::kBadPrime;
  if (s == "E") return EventKind::kSupersaturated;
  throw InputError("unknown event '" + s + "' (expected B, Bprime or E)");
}

EventReport check_event(const Graph& g, const EventSpec& spec, const SolverOptions& solver) {
  validate_probability(spec.p);
  if (spec.delta <= 0 || spec.delta > 1) throw InputError("delta must lie in (0, 1]");
  EventReport rep;
  rep.event = to_string(spec.kind);
  const int n = g.num_vertices();
  try {
    switch (spec.kind) {
      case EventKind::kBad: {
        if (spec.targets.empty()) throw InputError("event B needs at least one target graph");
        ColourSearch search(g, spec.targets, spec.p, spec.p * n, solver, rep);
        auto c = search.run(spec.colouring_budget, spec.seed, rep.exhaustive);
        rep.holds = c.has_value();
        if (c) {
          rep.colouring = c;
          for (std::size_t i = 0; i < spec.targets.size(); ++i) {
            rep.per_colour_janson.push_back(search.janson(i, *c));
          }
        }
        break;
      }
      case EventKind::kBadPrime: {
        if (spec.targets.empty()) throw InputError("event Bprime needs at least one target graph");
        const int k = ceil_two_thirds(spec.delta, n);
        rep.holds = false;
        if (k > n) break;
        // Non-Janson passes to subsets, so only the smallest S matter.
        const auto candidates =
            subsets_of_size(n, k, spec.subset_budget, derive_seed(spec.seed, 1), rep.exhaustive);
        const Rational r = bad_prime_r(spec, n);
        for (VertexSet s : candidates) {
          ++rep.subsets_checked;
          const Graph sub = g.induced(s);
          ColourSearch search(sub, spec.targets, spec.p, r, solver, rep);
          auto c = search.run(spec.colouring_budget, derive_seed(spec.seed, s.bits()),
                              rep.exhaustive);
          if (c) {
            rep.holds = true;
            rep.set = s;
            rep.colouring = lift(g, s, *c);
            for (std::size_t i = 0; i < spec.targets.size(); ++i) {
              rep.per_colour_janson.push_back(search.janson(i, *c));
            }
            break;
          }
        }
        break;
      }
      case EventKind::kSupersaturated: {
        if (spec.sizes.empty()) throw InputError("event E needs the sizes s_1..s_r");
        const int r = static_cast<int>(spec.sizes.size());
        int t = 0;
        for (int s : spec.sizes) {
          if (s < 0 || s > 5) throw InputError("event E sizes must lie in [0, 5]");
          t += s;
        }
        std::vector<std::vector<Graph>> tuples;
        if (!spec.explicit_tuples.empty()) {
          rep.exhaustive = false;
          rep.notes.push_back("explicit F tuples only");
          for (const auto& tuple : spec.explicit_tuples) {
            if (static_cast<int>(tuple.size()) != r) {
              throw InputError("each F tuple needs one graph per colour");
            }
            for (int i = 0; i < r; ++i) {
              if (tuple[i].num_vertices() > spec.sizes[i]) {
                throw InputError("F tuple violates v(F_i) <= s_i");
              }
            }
            if (total_vertices(tuple) >= t) throw InputError("F tuple needs sum v(F_i) < t");
            tuples.push_back(tuple);
          }
        } else {
          for (int tp = 0; tp < t; ++tp) catalog_tuples(spec.sizes, tp, tuples);
        }
        rep.holds = true;
        for (const auto& tuple : tuples) {
          const int gap = t - total_vertices(tuple);
          const Rational frac = pow(spec.delta / (8 * r), gap) * n;
          const int k = std::max(ceil_int(frac, n), 1);
          if (k > n) continue;
          const auto candidates = subsets_of_size(n, k, spec.subset_budget,
                                                  derive_seed(spec.seed, 2), rep.exhaustive);
          for (VertexSet w : candidates) {
            ++rep.subsets_checked;
            const Graph sub = g.induced(w);
            ColourSearch search(sub, tuple, spec.p, spec.p * k, solver, rep);
            auto c = search.run(spec.colouring_budget, derive_seed(spec.seed, w.bits()),
                                rep.exhaustive);
            if (c) {
              rep.holds = false;
              rep.set = w;
              rep.tuple = tuple;
              rep.colouring = lift(g, w, *c);
              for (std::size_t i = 0; i < tuple.size(); ++i) {
                rep.per_colour_janson.push_back(search.janson(i, *c));
              }
              break;
            }
          }
          if (rep.holds == false) break;
        }
        if (!rep.exhaustive && rep.holds == true) {
          rep.notes.push_back("not refuted; the search was not exhaustive");
        }
        break;
      }
    }
  } catch (const UndecidedError& e) {
    rep.holds = std::nullopt;
    rep.colouring.reset();
    rep.notes.push_back(std::string("indeterminate: ") + e.what());
  }
  return rep;
}

bool verify_event_witness(const Graph& g, const EventSpec& spec, const EventReport& report,
                          const SolverOptions& solver) {
  if (!report.holds) return false;
  const bool has_witness = (spec.kind == EventKind::kSupersaturated) ? !*report.holds
                                                                    : *report.holds;
  if (!has_witness) return true;
  if (!report.colouring) return false;
  const int n = g.num_vertices();
  VertexSet scope = report.set.value_or(g.vertices());
  std::vector<Graph> patterns = spec.targets;
  Rational r = spec.p * n;
  if (spec.kind == EventKind::kBadPrime) {
    if (scope.size() < ceil_two_thirds(spec.delta, n)) return false;
    r = bad_prime_r(spec, n);
  } else if (spec.kind == EventKind::kSupersaturated) {
    patterns = report.tuple;
    int t = 0;
    for (int s : spec.sizes) t += s;
    const Rational frac =
        pow(spec.delta / (8 * static_cast<int>(spec.sizes.size())), t - total_vertices(patterns)) * n;
    if (Rational(scope.size()) < frac) return false;
    r = spec.p * scope.size();
  }
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    const Graph cls = colour_class(g, *report.colouring, static_cast<int>(i));
    const Hypergraph h =
        induced_copy_hypergraph(patterns[i], cls, g).hypergraph.edges_within(scope);
    if (janson_or_throw(h, spec.p, r, "witness re-check", solver)) return false;
  }
  return true;
}

MaximalTuple find_maximal_tuple(const Graph& g, VertexSet s, const Coloring& c,
                                const std::vector<Graph>& targets, const Rational& p,
                                const Rational& delta, const SolverOptions& solver) {
  validate_probability(p);
  if (delta <= 0 || delta > 1) throw InputError("delta must lie in (0, 1]");
  if (!s.is_subset_of(g.vertices())) throw InputError("S leaves the vertex set");
  const int n = g.num_vertices();
  const int r = static_cast<int>(targets.size());
  if (r < 1) throw InputError("need at least one colour");
  MaximalTuple out;
  out.initial_size = ceil_int(delta * n, n);
  if (out.initial_size > s.size()) throw InputError("S is smaller than delta N");
  out.scaled_parameters = delta != 1 / pow(Rational(r), 50) || Rational(out.initial_size) != delta * n;

  std::vector<Hypergraph> copies;
  for (int i = 0; i < r; ++i) {
    copies.push_back(induced_copy_hypergraph(targets[i], colour_class(g, c, i), g).hypergraph);
  }
  auto janson_at = [&](int i, VertexSet u, int value) {
    return janson_or_throw(copies[i].edges_within(u), p, Rational(value),
                           "maximal tuple, colour " + std::to_string(i), solver);
  };

  const auto members = s.to_vector();
  for (int j = 0; j < out.initial_size; ++j) out.u = out.u.with(members[j]);
  out.r_values.assign(r, 0);
  for (bool grew = true; grew;) {
    grew = false;
    for (int v : (s - out.u)) {
      for (int i = 0; i < r && !grew; ++i) {
        if (janson_at(i, out.u.with(v), out.r_values[i] + 1)) {
          out.u = out.u.with(v);
          ++out.r_values[i];
          grew = true;
        }
      }
      if (grew) break;
    }
  }
  out.janson_ok = true;
  out.maximal_ok = true;
  out.bound_ok = true;
  for (int i = 0; i < r; ++i) {
    out.janson_ok = out.janson_ok && janson_at(i, out.u, out.r_values[i]);
    for (int v : (s - out.u)) {
      out.maximal_ok = out.maximal_ok && !janson_at(i, out.u.with(v), out.r_values[i] + 1);
    }
    out.bound_ok = out.bound_ok && Rational(out.r_values[i]) * 512 * r <= p * out.u.size();
  }
  return out;
}

}  // namespace jc
