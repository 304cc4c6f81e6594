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
#include <set>

#include "jc/error.hpp"
#include "jc/janson.hpp"
#include "jc/rng.hpp"

namespace jc {
namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long double acc = 1;
  for (int i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
  return acc > 1.8e19L ? ~std::uint64_t{0} : static_cast<std::uint64_t>(acc + 0.5L);
}

int ceil_rational(const Rational& x) {
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return static_cast<int>(c.get_si());
}

// Mass-1 Janson witness on the edges of h inside w, or a precondition error.
std::vector<double> witness_on(const Hypergraph& h, VertexSet w, const Rational& p,
                               const Rational& r, const SolverOptions& solver) {
  const Hypergraph sub = h.edges_within(w);
  const JansonVerdict v = is_janson(sub, p, r, solver);
  if (v.answer == JansonAnswer::kUndecided) {
    throw UndecidedError("undecided Janson query on W = " + w.to_string());
  }
  if (v.answer == JansonAnswer::kNo || !v.witness) {
    throw PreconditionViolation("sub-Janson hypothesis fails for W = " + w.to_string());
  }
  std::vector<double> x(h.num_edges(), 0.0);
  for (std::size_t i = 0; i < sub.num_edges(); ++i) {
    x[*h.index_of(sub.edge(i))] = v.witness->weight(i);
  }
  double total = 0;
  for (double v2 : x) total += v2;
  for (double& v2 : x) v2 /= total;
  return x;
}

}  // namespace

BoundedDegreeWitness bounded_degree_witness(const Hypergraph& h, const Rational& p,
                                            const Rational& r, const Rational& beta,
                                            const BoundedDegreeOptions& options) {
  validate_probability(p);
  const auto s_opt = h.uniformity();
  if (!s_opt) throw InputError("bounded_degree_witness needs a uniform, nonempty hypergraph");
  if (r <= 0) throw InputError("R must be positive");
  if (beta <= 0 || beta >= 1) throw InputError("beta must lie in (0, 1)");
  const int s = *s_opt;
  const int n = h.num_vertices();
  const int min_size = ceil_rational(Rational((1 - beta) * n));

  BoundedDegreeWitness out;
  // Hypothesis: every W with |W| >= (1 - beta) n carries a witness.
  std::uint64_t total = 0;
  for (int k = min_size; k <= n; ++k) {
    const std::uint64_t c = binomial(n, k);
    total = (total + c < total) ? ~std::uint64_t{0} : total + c;
  }
  if (total <= options.hypothesis_budget) {
    for (int k = n; k >= min_size; --k) {
      for_each_k_subset(n, k, [&](VertexSet w) {
        witness_on(h, w, p, r, options.solver);
        ++out.subsets_checked;
        return true;
      });
    }
  } else {
    out.hypothesis_exhaustive = false;
    Rng rng(options.seed);
    std::set<std::uint64_t> seen;
    witness_on(h, h.universe(), p, r, options.solver);
    while (out.subsets_checked < options.hypothesis_budget) {
      VertexSet w = h.universe();
      const int drop = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - min_size + 1)));
      for (int d = 0; d < drop; ++d) {
        const std::vector<int> members = w.to_vector();
        w = w.without(members[rng.below(members.size())]);
      }
      if (!seen.insert(w.bits()).second) continue;
      witness_on(h, w, p, r, options.solver);
      ++out.subsets_checked;
    }
  }

  // Blend toward low-degree witnesses until the squared degrees are small.
  const double beta_d = beta.get_d();
  const double limit = 2.0 * s * s / (beta_d * n);
  const double tau = std::min(1.0, 1.0 / (beta_d * n)) / 2.0;
  std::vector<double> x = witness_on(h, h.universe(), p, r, options.solver);
  auto host = std::make_shared<const Hypergraph>(h);
  for (;; ++out.rounds) {
    if (out.rounds > options.max_rounds) {
      throw BudgetError("bounded-degree iteration did not settle",
                        static_cast<std::uint64_t>(out.rounds));
    }
    const std::vector<double> d = vertex_degrees(FloatMeasure(host, x));
    double sq = 0;
    for (double v : d) sq += v * v;
    if (sq <= limit * (1.0 - 1e-12)) break;
    VertexSet w;
    const double cut = s / (beta_d * n);
    for (int v = 0; v < n; ++v) {
      if (d[static_cast<std::size_t>(v)] <= cut) w = w.with(v);
    }
    const std::vector<double> y = witness_on(h, w, p, r, options.solver);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (1.0 - tau) * x[i] + tau * y[i];
  }

  out.normalized = to_exact(FloatMeasure(host, x));
  const Rational e = mass(out.normalized);
  const Rational lam = lambda_pairwise(out.normalized, p);
  out.lambda_ok = r * lam < e * e;
  out.degree_ok = beta * n * sum_squared_vertex_degrees(out.normalized) <=
                  Rational(2 * s * s) * e * e;
  const double target = std::sqrt(r.get_d());
  const double factor = target / e.get_d();
  for (double& v : x) v *= factor;
  out.measure = FloatMeasure(host, x);
  const double got = mass(out.measure);
  out.mass_ok = std::fabs(got - target) <= 1e-9 * target;
  return out;
}

AggregateReport aggregate_witnesses(
    const std::vector<std::pair<VertexSet, ExactMeasure>>& family,
    const Hypergraph& host, const Rational& p) {
  validate_probability(p);
  auto shared = std::make_shared<const Hypergraph>(host);
  AggregateReport rep{ExactMeasure::zero(shared), 0, 0, 0, false, 0, false};
  std::vector<Rational> weights(host.num_edges());
  for (const auto& [set, nu] : family) {
    if (!nu.host().same_edge_set(host)) {
      throw InputError("family measure is not hosted on the given hypergraph");
    }
    if (mass(nu) != 1) throw InputError("family measures must have mass 1");
    for (std::size_t i = 0; i < nu.size(); ++i) {
      if (nu.weight(i) == 0) continue;
      const VertexSet e = nu.host().edge(i);
      if (!e.is_subset_of(set)) {
        throw InputError("support edge " + e.to_string() + " leaves " + set.to_string());
      }
      weights[*host.index_of(e)] += nu.weight(i);
    }
    rep.sum_of_lambdas += lambda_pairwise(nu, p);
  }
  rep.sum = ExactMeasure(shared, std::move(weights));
  rep.lambda_sum = lambda_pairwise(rep.sum, p);
  // |T_L| only shrinks as L grows, so pairs inside positive edges suffice.
  for (std::size_t i = 0; i < rep.sum.size(); ++i) {
    if (rep.sum.weight(i) == 0) continue;
    for_each_k_subset(host.num_vertices(), 2, [&](VertexSet pair) {
      if (!pair.is_subset_of(host.edge(i))) return true;
      std::size_t count = 0;
      for (const auto& member : family) count += pair.is_subset_of(member.first) ? 1 : 0;
      rep.max_overlap = std::max(rep.max_overlap, count);
      return true;
    });
  }
  rep.chain_holds = rep.lambda_sum <= Rational(static_cast<long>(rep.max_overlap)) * rep.sum_of_lambdas;
  rep.mass = mass(rep.sum);
  rep.mass_matches = rep.mass == Rational(static_cast<long>(family.size()));
  return rep;
}

}  // namespace jc
