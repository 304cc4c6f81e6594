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
#include <string>
#include <unordered_map>

#include "jc/containers.hpp"
#include "jc/error.hpp"
#include "jc/rng.hpp"

namespace jc {
namespace {

constexpr int kHardcoverCap = 16;

void validate_q_alpha(const Rational& q, const Rational& alpha) {
  if (q <= 0 || q >= 1) throw InputError("q must lie in (0, 1)");
  if (alpha < q || alpha >= 1) throw InputError("alpha must satisfy q <= alpha < 1");
}

// Subset-OR closure: out[A] is true when some B within A has member[B].
std::vector<bool> down_closure(const std::vector<bool>& member, int n) {
  std::vector<bool> out(member);
  const std::size_t full = std::size_t{1} << n;
  for (int b = 0; b < n; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t a = 0; a < full; ++a) {
      if ((a & bit) != 0 && out[a ^ bit]) out[a] = true;
    }
  }
  return out;
}

Rational bound_for(const Rational& q, const Rational& alpha, int size) {
  return pow(Rational((1 - alpha) * q), size);
}

template <class Pred>
VertexSet greedy_fingerprint(VertexSet i, Pred&& below) {
  VertexSet t;
  while (true) {
    const VertexSet rest = i - t;
    std::optional<VertexSet> best;
    for_each_subset(rest, [&](VertexSet b) {
      if (b.empty()) return;
      if (best && (b.size() > best->size() ||
                   (b.size() == best->size() && b.bits() > best->bits()))) {
        return;
      }
      if (below(t | b)) best = b;
    });
    if (!best) return t;
    t = t | *best;
  }
}

}  // namespace

void VerificationReport::merge(const VerificationReport& other,
                               const std::string& prefix) {
  for (const auto& v : other.theorem_violations) theorem_violations.push_back(prefix + v);
  for (const auto& v : other.oracle_incomplete) oracle_incomplete.push_back(prefix + v);
  checks += other.checks;
}

VertexSet fingerprint(const std::vector<bool>& below, VertexSet i) {
  return greedy_fingerprint(i, [&](VertexSet a) { return static_cast<bool>(below[a.bits()]); });
}

VertexSet fingerprint(const Hypergraph& h, VertexSet i, const Rational& q,
                      const Rational& alpha) {
  validate_q_alpha(q, alpha);
  if (!i.is_subset_of(h.universe())) throw InputError("I leaves the universe");
  if (!h.is_independent(i)) throw InputError("I = " + i.to_string() + " is not independent");
  if (h.num_vertices() <= kHardcoverCap) {
    const ConditionalTable table(h, q);
    return greedy_fingerprint(i, [&](VertexSet a) { return table.below(a, alpha); });
  }
  return greedy_fingerprint(i, [&](VertexSet a) {
    return conditional_prob(h, a, q) <= bound_for(q, alpha, a.size());
  });
}

ContainerFamily hardcover_family(const Hypergraph& h, const Rational& q,
                                 const Rational& alpha,
                                 const HardcoverOptions& options) {
  validate_q_alpha(q, alpha);
  const int n = h.num_vertices();
  if (n > kHardcoverCap) throw InputError("hardcover_family is capped at 16 vertices");
  ContainerFamily fam;
  fam.params.q = q;
  fam.params.alpha = alpha;
  fam.params.n = n;
  fam.params.s = h.uniformity().value_or(0);
  fam.params.paper_literal = options.paper_literal;
  if (h.spans_edge_in(VertexSet())) {
    fam.report.notes.push_back("empty edge: no independent sets");
    return fam;
  }

  const ConditionalTable table(h, q);
  const std::vector<bool> below = table.below_table(alpha);
  std::unordered_map<VertexSet, std::size_t, VertexSetHash> slot;
  for (VertexSet i : independent_sets(h)) {
    const VertexSet t = fingerprint(below, i);
    auto [it, inserted] = slot.emplace(t, fam.fingerprints.size());
    if (inserted) fam.fingerprints.push_back(t);
    fam.assignment.push_back({i, it->second});
  }

  VerificationReport& rep = fam.report;
  const std::size_t full = std::size_t{1} << n;
  std::vector<std::vector<bool>> member_closure;
  for (std::size_t idx = 0; idx < fam.fingerprints.size(); ++idx) {
    const VertexSet t = fam.fingerprints[idx];
    const Hypergraph link = nonstrict_link(h, t);
    const ConditionalTable link_table(link, q);
    std::vector<bool> member = link_table.below_table(alpha);
    if (!options.paper_literal) member[0] = false;
    std::vector<VertexSet> edges;
    for (std::size_t a = 0; a < full; ++a) {
      if (member[a]) edges.emplace_back(a);
    }
    fam.covers.emplace_back(n, std::move(edges));

    // Fingerprint bound re-derived by direct enumeration.
    ++rep.checks;
    if (conditional_prob(h, t, q) > bound_for(q, alpha, t.size())) {
      rep.theorem_violations.push_back("fingerprint " + t.to_string() +
                                       " breaks its defining bound");
    }
    // Item (c), strong form: every edge of h is a member.
    bool strong = true;
    bool weak = true;
    for (VertexSet e : h.edges()) {
      ++rep.checks;
      if (!member[e.bits()]) strong = false;
      bool covered = false;
      for_each_subset(e, [&](VertexSet b) { covered = covered || member[b.bits()]; });
      if (!covered) weak = false;
    }
    if (!strong) {
      rep.theorem_violations.push_back("item (c): some edge of G is missing from C_T for T = " +
                                       t.to_string());
    }
    if (!weak) {
      rep.theorem_violations.push_back("item (c): C_T does not cover G for T = " +
                                       t.to_string());
    }
    // Strict inequality outside the cover, sampled, by direct enumeration.
    std::vector<VertexSet> outside;
    std::vector<VertexSet> inside;
    for (std::size_t a = 1; a < full; ++a) {
      (member[a] ? inside : outside).emplace_back(a);
    }
    Rng rng(derive_seed(options.seed, idx));
    auto sample = [&](std::vector<VertexSet>& pool) {
      const std::size_t want = std::min<std::size_t>(
          pool.size(), static_cast<std::size_t>(std::max(0, options.sampled_outside)));
      for (std::size_t k = 0; k < want; ++k) {
        std::swap(pool[k], pool[k + rng.below(pool.size() - k)]);
      }
      pool.resize(want);
    };
    sample(outside);
    sample(inside);
    for (VertexSet l : outside) {
      ++rep.checks;
      if (conditional_prob(link, l, q) <= bound_for(q, alpha, l.size())) {
        rep.theorem_violations.push_back("L = " + l.to_string() +
                                         " satisfies the cover bound but is not in C_T");
      }
    }
    for (VertexSet l : inside) {
      ++rep.checks;
      if (conditional_prob(link, l, q) > bound_for(q, alpha, l.size())) {
        rep.theorem_violations.push_back("L = " + l.to_string() +
                                         " is in C_T but breaks the cover bound");
      }
    }
    member_closure.push_back(down_closure(member, n));
  }

  const Rational size_cap = q * n / alpha;
  bool literal_failure = false;
  for (const auto& [i, idx] : fam.assignment) {
    const VertexSet t = fam.fingerprints[idx];
    rep.checks += 3;
    if (!t.is_subset_of(i)) {
      rep.theorem_violations.push_back("item (a): T = " + t.to_string() + " not within I = " +
                                       i.to_string());
    }
    if (Rational(t.size()) > size_cap) {
      rep.theorem_violations.push_back("item (b): |T| too large for I = " + i.to_string());
    }
    // Maximality within I, checked against the table.
    bool maximal = true;
    for_each_subset(i - t, [&](VertexSet b) {
      if (!b.empty() && below[(t | b).bits()]) maximal = false;
    });
    if (!maximal) {
      rep.theorem_violations.push_back("fingerprint of I = " + i.to_string() + " is not maximal");
    }
    if (member_closure[idx][i.bits()]) {
      if (options.paper_literal) {
        literal_failure = true;
      } else {
        rep.theorem_violations.push_back("item (c): I = " + i.to_string() +
                                         " is not independent in C_T");
      }
    }
  }
  if (literal_failure) {
    rep.theorem_violations.push_back(
        "item (c): with the empty set kept in C_T no set is independent in C_T");
  }
  return fam;
}

}  // namespace jc
