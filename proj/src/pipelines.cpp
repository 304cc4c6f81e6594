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
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

#include "jc/containers.hpp"
#include "jc/error.hpp"

namespace jc {
namespace {

Hypergraph union_of(int n, const Hypergraph& a, const Hypergraph& b) {
  std::vector<VertexSet> edges(a.edges().begin(), a.edges().end());
  edges.insert(edges.end(), b.edges().begin(), b.edges().end());
  return Hypergraph::deduplicated(n, edges);
}

// Hardcovers on the auxiliary hypergraph, then the uniform oracle on each
// s-uniform slice of a cover. Fills fingerprints, covers, second level and
// containers of `fam`, and checks S + T inside I inside X.
void run_two_level(const Hypergraph& aux, const Rational& q_hc, int s, const Rational& p,
                   const UniformContainerOracle& oracle, const PipelineOptions& options,
                   ContainerFamily& fam) {
  const Rational half(1, 2);
  ContainerFamily hc = hardcover_family(aux, q_hc, half, options.hardcover);
  fam.report.merge(hc.report, "hardcover: ");
  fam.fingerprints = hc.fingerprints;
  fam.assignment = hc.assignment;
  fam.covers = hc.covers;

  std::vector<std::unordered_map<std::uint64_t, std::size_t>> lookup;
  for (std::size_t k = 0; k < hc.fingerprints.size(); ++k) {
    const std::string tag = "T=" + hc.fingerprints[k].to_string() + ": ";
    const Hypergraph slice = upset_slice(hc.covers[k], s);
    ContainerFamily inner = oracle.build(slice, p);
    fam.report.merge(inner.report, tag);
    SecondLevel level{inner.fingerprints, inner.containers, inner.assignment};
    std::unordered_map<std::uint64_t, std::size_t> where;
    for (const auto& a : level.assignment) where.emplace(a.independent.bits(), a.fingerprint);
    lookup.push_back(std::move(where));
    fam.second_level.push_back(std::move(level));
  }

  std::set<VertexSet> chosen;
  for (const auto& [i, k] : hc.assignment) {
    fam.report.checks += 1;
    const auto it = lookup[k].find(i.bits());
    if (it == lookup[k].end()) {
      fam.report.oracle_incomplete.push_back("no second-level container for I = " +
                                             i.to_string());
      continue;
    }
    const VertexSet sfp = fam.second_level[k].fingerprints[it->second];
    const VertexSet x = fam.second_level[k].containers[it->second];
    if (!((sfp | hc.fingerprints[k]).is_subset_of(i) && i.is_subset_of(x))) {
      fam.report.theorem_violations.push_back("S + T inside I inside X fails for I = " +
                                              i.to_string());
    }
    chosen.insert(x);
  }
  fam.containers.assign(chosen.begin(), chosen.end());
}

void check_family_size(ContainerFamily& fam, const Rational& q, int c, int n) {
  ++fam.report.checks;
  if (fam.containers.empty()) return;
  const double lhs = std::log(static_cast<double>(fam.containers.size()));
  if (lhs > log_family_bound(q, c, n) + 1e-12) {
    fam.report.theorem_violations.push_back(
        "family has " + std::to_string(fam.containers.size()) + " containers, above the bound");
  }
}

void check_universe(int n, const PipelineOptions& options) {
  if (n > options.max_universe) {
    throw InputError("pipeline is capped at " + std::to_string(options.max_universe) +
                     " vertices");
  }
}

}  // namespace

UpsetResult build_upset(int n, const std::function<bool(VertexSet)>& member) {
  if (n < 0 || n > 24) throw InputError("build_upset needs 0 <= n <= 24");
  UpsetResult out{Hypergraph(n, {}), 0};
  std::vector<VertexSet> minimal;
  for (int k = 0; k <= n; ++k) {
    for_each_k_subset(n, k, [&](VertexSet l) {
      for (VertexSet m : minimal) {
        if (m.is_subset_of(l)) return true;
      }
      ++out.queries;
      if (member(l)) minimal.push_back(l);
      return true;
    });
  }
  out.minimal = Hypergraph(n, minimal);
  return out;
}

double log_family_bound(const Rational& q, int c, int n) {
  const double qd = to_double(q);
  return std::log(4.0) + c * qd * n * std::log(2.0 / qd);
}

ContainerFamily non_janson_containers(const Hypergraph& h, const Rational& p,
                                      const Rational& q, const Rational& r,
                                      std::optional<Rational> eta,
                                      const UniformContainerOracle* oracle,
                                      const PipelineOptions& options) {
  validate_probability(p);
  validate_probability(q);
  const int n = h.num_vertices();
  check_universe(n, options);
  const auto s_opt = h.uniformity();
  if (!h.empty() && !s_opt) throw InputError("hypergraph must be uniform");
  // An edgeless hypergraph is s-uniform for every s; take the weakest constraints.
  const int s = h.empty() ? 1 : *s_opt;
  if (s > n) throw InputError("edge size exceeds the universe");
  if (q > Rational(1, 16)) throw InputError("need q <= 1/16");
  if (p * 1024 * s * s > q) throw InputError("need p <= q/(2^10 s^2)");
  if (r * 64 < p * n) throw InputError("need R >= 2^-6 p n");
  const Rational eta_max = Rational(1) / (Integer(1) << (2 * s + 2));
  if (!eta) eta = eta_max;
  if (*eta <= 0 || *eta > eta_max) throw InputError("need 0 < eta <= 2^(-2s-2)");

  BruteForceOracle fallback(options.max_universe, options.solver);
  const UniformContainerOracle& orc = oracle ? *oracle : fallback;

  ContainerFamily fam;
  fam.params.p = p;
  fam.params.q = q;
  fam.params.alpha = Rational(1, 2);
  fam.params.r_value = r;
  fam.params.eta = eta;
  fam.params.s = s;
  fam.params.n = n;

  // Aux sets are those whose induced hypergraph is (p/q, eta R)-Janson; an up-set.
  const Rational p_aux = p / q;
  const Rational r_aux = *eta * r;
  const UpsetResult aux = build_upset(n, [&](VertexSet l) {
    return janson_or_throw(h.edges_within(l), p_aux, r_aux,
                           "auxiliary membership of " + l.to_string(), options.solver);
  });
  fam.report.notes.push_back("auxiliary up-set: " + std::to_string(aux.minimal.num_edges()) +
                             " minimal sets from " + std::to_string(aux.queries) +
                             " queries");

  run_two_level(aux.minimal, q + p, s, p, orc, options, fam);

  // Fingerprint sizes.
  const Rational s_cap = Rational(2048) * s * s * p * n;
  const Rational t_cap = 2 * (q + p) * n;
  for (std::size_t k = 0; k < fam.fingerprints.size(); ++k) {
    fam.report.checks += 1;
    if (Rational(fam.fingerprints[k].size()) > t_cap) {
      fam.report.theorem_violations.push_back("|T| too large for T = " +
                                              fam.fingerprints[k].to_string());
    }
    for (VertexSet sfp : fam.second_level[k].fingerprints) {
      fam.report.checks += 1;
      if (Rational(sfp.size()) > s_cap) {
        fam.report.theorem_violations.push_back("|S| too large for S = " + sfp.to_string());
      }
    }
  }

  // Item (i): every set that is not (p/q, eta R)-Janson is an independent set
  // of the auxiliary up-set, so it must sit inside some container.
  for (VertexSet l : independent_sets(aux.minimal)) {
    fam.report.checks += 1;
    const bool inside = std::any_of(fam.containers.begin(), fam.containers.end(),
                                    [&](VertexSet x) { return l.is_subset_of(x); });
    if (!inside) {
      fam.report.theorem_violations.push_back("item (i): " + l.to_string() +
                                              " lies in no container");
    }
  }
  // Item (ii).
  for (VertexSet x : fam.containers) {
    fam.report.checks += 1;
    const JansonVerdict v = is_janson(h.edges_within(x), p, r, options.solver);
    if (v.answer == JansonAnswer::kYes) {
      fam.report.theorem_violations.push_back("item (ii): container " + x.to_string() +
                                              " is Janson");
    } else if (v.answer == JansonAnswer::kUndecided) {
      fam.report.oracle_incomplete.push_back("item (ii) undecided for " + x.to_string());
    }
  }
  check_family_size(fam, q, 8, n);
  return fam;
}

ContainerFamily extension_containers(const Hypergraph& h, const VertexMap& pi,
                                     const Hypergraph& f, int v,
                                     const ExtensionParams& params,
                                     const UniformContainerOracle* oracle,
                                     const PipelineOptions& options) {
  const Rational& p = params.p;
  const Rational& q = params.q;
  const int r = params.colours;
  validate_probability(p);
  validate_probability(q);
  const int n = h.num_vertices();
  check_universe(n, options);
  pi.validate();
  if (pi.source_size != n) throw InputError("projection domain must match the hypergraph");
  if (v < pi.target_size) throw InputError("extra vertex must lie outside the projection range");
  if (f.num_vertices() != v + 1) {
    throw InputError("extra hypergraph must live on the projection range plus the extra vertex");
  }
  if (r < 2) throw InputError("need r >= 2");
  const auto s_opt = h.uniformity();
  if (!h.empty() && !s_opt) throw InputError("hypergraph must be uniform");
  const auto f_opt = f.uniformity();
  if (!f.empty() && !f_opt) throw InputError("extra hypergraph must be uniform");
  int s = 1;
  if (s_opt) {
    s = *s_opt;
  } else if (f_opt) {
    s = *f_opt - 1;
  }
  if (s < 1) throw InputError("edge size must be at least 1");
  if (f_opt && *f_opt != s + 1) throw InputError("extra hypergraph must be (s+1)-uniform");
  if (s > n && n > 0) throw InputError("edge size exceeds the universe");
  if (!(q < Rational(1, 8))) throw InputError("need q < 1/8");
  if (p * 1024 * r * r * s * s > q) throw InputError("need p <= q/(2^10 r^2 s^2)");
  const Rational r_value = p * n / 64;
  if (params.r_value && *params.r_value != r_value) throw InputError("need R = 2^-6 p n");
  if (params.r_prime < 0 || params.r_prime * 16 > r_value) {
    throw InputError("need 0 <= R' <= R/16");
  }
  const Rational eta_max = pow(p, 4) * pow(q / 2, 4 * s);
  const Rational eta = params.eta.value_or(eta_max);
  if (eta <= 0 || eta > eta_max) throw InputError("need 0 < eta <= p^4 (q/2)^(4s)");

  std::vector<int> fibre(pi.target_size, 0);
  for (int x = 0; x < n; ++x) {
    if (++fibre[pi(x)] > 2) {
      throw InputError("projection has a fibre with more than two points");
    }
  }
  for (VertexSet e : h.edges()) {
    if (pi.image(e).size() != e.size()) {
      throw InputError("projection is not injective on edge " + e.to_string());
    }
  }
  if (!janson_or_throw(f, p, params.r_prime, "extra hypergraph precondition", options.solver)) {
    throw InputError("extra hypergraph is not (p, R')-Janson");
  }

  BruteForceOracle fallback(options.max_universe, options.solver);
  const UniformContainerOracle& orc = oracle ? *oracle : fallback;

  ContainerFamily fam;
  fam.params.p = p;
  fam.params.q = q;
  fam.params.alpha = Rational(1, 2);
  fam.params.r_value = r_value;
  fam.params.r_prime = params.r_prime;
  fam.params.eta = eta;
  fam.params.s = s;
  fam.params.n = n;
  fam.params.colours = r;

  const Rational r_aux = params.r_prime + eta * r_value;
  const int wide = v + 1;
  auto lifted = [&](VertexSet l) {
    std::vector<VertexSet> edges;
    const Projection proj = project(h.edges_within(l), pi);
    for (VertexSet e : proj.image.edges()) edges.push_back(e.with(v));
    return union_of(wide, Hypergraph(wide, std::move(edges)), f);
  };
  const UpsetResult aux = build_upset(n, [&](VertexSet l) {
    return janson_or_throw(lifted(l), p, r_aux, "auxiliary membership of " + l.to_string(),
                           options.solver);
  });
  fam.report.notes.push_back("auxiliary up-set: " + std::to_string(aux.minimal.num_edges()) +
                             " minimal sets from " + std::to_string(aux.queries) +
                             " queries");
  if (aux.minimal.contains_edge(VertexSet())) {
    fam.report.notes.push_back("the extra hypergraph alone is Janson; no containers needed");
    check_family_size(fam, q, 4, n);
    return fam;
  }

  run_two_level(aux.minimal, q, s, p, orc, options, fam);

  for (std::size_t k = 0; k < fam.fingerprints.size(); ++k) {
    for (VertexSet sfp : fam.second_level[k].fingerprints) {
      fam.report.checks += 1;
      if (Rational(sfp.size()) > 2 * q * n) {
        fam.report.theorem_violations.push_back("|S| too large for S = " + sfp.to_string());
      }
    }
  }

  // Item (1).
  for (VertexSet l : independent_sets(aux.minimal)) {
    fam.report.checks += 1;
    const bool inside = std::any_of(fam.containers.begin(), fam.containers.end(),
                                    [&](VertexSet x) { return l.is_subset_of(x); });
    if (!inside) {
      fam.report.theorem_violations.push_back("item (1): " + l.to_string() +
                                              " lies in no container");
    }
  }
  // Item (2): shrink large containers greedily by removing a vertex of largest
  // degree until the projected hypergraph stops being Janson.
  const Rational slack = Rational(n) / (256 * r);
  for (VertexSet x : fam.containers) {
    if (Rational(x.size()) * 8 * r < n) continue;
    fam.report.checks += 1;
    VertexSet y = x;
    bool found = false;
    bool undecided = false;
    while (Rational(x.size() - y.size()) <= slack) {
      const Hypergraph inside = h.edges_within(y);
      const JansonVerdict verdict = is_janson(project(inside, pi).image, p, r_value,
                                              options.solver);
      if (verdict.answer == JansonAnswer::kNo) {
        found = true;
        break;
      }
      if (verdict.answer == JansonAnswer::kUndecided) undecided = true;
      if (y.empty()) break;
      int best = y.lowest();
      int best_degree = -1;
      for (int u : y) {
        int d = 0;
        for (VertexSet e : inside.edges()) d += e.contains(u);
        if (d > best_degree) {
          best = u;
          best_degree = d;
        }
      }
      y = y.without(best);
    }
    if (found) continue;
    if (undecided) {
      fam.report.oracle_incomplete.push_back("item (2) undecided for " + x.to_string());
    } else {
      fam.report.theorem_violations.push_back("item (2): no large non-Janson part of " +
                                              x.to_string());
    }
  }
  check_family_size(fam, q, 4, n);
  return fam;
}

ContainerFamily extension_containers(const ExtensionHypergraph& ext, const Hypergraph& f,
                                     int v, const ExtensionParams& params,
                                     const UniformContainerOracle* oracle,
                                     const PipelineOptions& options) {
  return extension_containers(ext.hypergraph, ext.projection, f, v, params, oracle, options);
}

std::optional<bool> check_intersection_property(const Hypergraph& h, const Rational& p,
                                                const Rational& r, int colours,
                                                VertexSet s, VertexSet t,
                                                const SolverOptions& solver) {
  if (colours < 1) throw InputError("need r >= 1");
  const int n = h.num_vertices();
  if (!(s | t).is_subset_of(h.universe())) throw InputError("sets leave the universe");
  if (Rational(s.size() + t.size()) * 8 * colours < Rational(n) * (8 * colours + 1)) {
    return std::nullopt;
  }
  // Janson is monotone under adding edges, so only the smallest W matter.
  const int smallest = static_cast<int>((n + 8 * colours - 1) / (8 * colours));
  bool robust = true;
  for_each_k_subset(n, smallest, [&](VertexSet w) {
    robust = janson_or_throw(h.edges_within(w), p, r, "hypothesis for " + w.to_string(),
                             solver);
    return robust;
  });
  if (!robust) return std::nullopt;
  return janson_or_throw(h.edges_within(s & t), p, r, "intersection", solver);
}

}  // namespace jc
