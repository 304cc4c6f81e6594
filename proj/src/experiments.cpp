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

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "jc/copies.hpp"
#include "jc/error.hpp"
#include "jc/ramsey.hpp"
#include "jc/rng.hpp"

namespace jc {
namespace {

// Runs body(t) for t in [0, trials) on up to `jobs` threads. Results are
// written by index, so the output does not depend on scheduling.
template <typename Body>
void parallel_trials(std::uint64_t trials, int jobs, Body body) {
  const int workers = static_cast<int>(
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(trials, std::max(jobs, 1))));
  if (workers == 1) {
    for (std::uint64_t t = 0; t < trials; ++t) body(t);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::uint64_t t = next++; t < trials; t = next++) {
        try {
          body(t);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

ChernoffReport chernoff_experiment(int n, int u_size, int s_size, std::uint64_t trials,
                                   std::uint64_t seed, int jobs) {
  if (!(0 < u_size && u_size <= s_size && s_size <= n && n <= kMaxVertices)) {
    throw InputError("need 0 < |U| <= |S| <= n <= 64");
  }
  ChernoffReport rep;
  rep.n = n;
  rep.u_size = u_size;
  rep.s_size = s_size;
  rep.trials = trials;
  rep.rows.resize(trials);
  const VertexSet u = VertexSet::range(u_size);
  parallel_trials(trials, jobs, [&](std::uint64_t t) {
    const std::uint64_t st = derive_seed(seed, t);
    const Graph g = sample_gnhalf(n, st);
    std::uint64_t high = 0;
    for (int v = u_size; v < s_size; ++v) high += 4 * (g.neighbours(v) & u).size() > u_size;
    rep.rows[t] = {t, st, static_cast<std::uint64_t>(4 * high <= static_cast<std::uint64_t>(s_size)),
                   high};
  });
  std::uint64_t high_total = 0;
  for (const TrialRow& row : rep.rows) {
    rep.failures += row.outcome;
    high_total += row.statistic;
  }
  if (trials > 0) {
    rep.frequency = static_cast<double>(rep.failures) / trials;
    if (s_size > u_size) {
      rep.per_vertex_frequency =
          static_cast<double>(high_total) / (static_cast<double>(trials) * (s_size - u_size));
    }
  }
  Integer binom = 1, favourable = 0;
  for (int d = 0; d <= u_size; ++d) {
    if (4 * d > u_size) favourable += binom;
    binom = binom * (u_size - d) / (d + 1);
  }
  rep.per_vertex_exact = Rational(favourable, Integer(1) << u_size);
  rep.per_vertex_exact.canonicalize();
  rep.bound = std::exp(-static_cast<double>(u_size) * s_size / 64.0);
  rep.hypothesis_met = u_size >= 1024 && 4 * u_size <= s_size;
  return rep;
}

ExtensionReport extension_experiment(const Graph& pattern, int w, int m, int r,
                                     std::uint64_t trials, std::uint64_t seed,
                                     const Rational& p, const Rational& r_prime, int jobs,
                                     const SolverOptions& solver) {
  if (m < 1 || m > 16) throw InputError("extension experiment needs 1 <= m <= 16");
  if (r < 1 || r > 3) throw InputError("extension experiment needs 1 <= r <= 3");
  if (w < 0 || w >= pattern.num_vertices()) throw InputError("w is not a vertex of F");
  validate_probability(p);
  if (r_prime < 0) throw InputError("R' must be nonnegative");
  ExtensionReport rep;
  rep.m = m;
  rep.r = r;
  rep.trials = trials;
  rep.rows.resize(trials);
  rep.gamma_bound = 2 * std::exp(-m / 128.0);
  rep.omega_bound = std::exp(-m / (64.0 * r));
  rep.notes.push_back("bounds are far from tight at this scale; frequencies are observational");
  const int v = m;
  const int gamma_size = ceil_div(m, 8);
  const int omega_size = ceil_div(m, 4 * r);
  const Rational omega_r = r_prime + 1;

  parallel_trials(trials, jobs, [&](std::uint64_t t) {
    const std::uint64_t st = derive_seed(seed, t);
    const Graph g = sample_gnhalf(m + 1, st);
    Rng colours(derive_seed(st, 1));
    Graph base(m + 1);
    for (auto [a, b] : g.edges()) {
      if (b == v) continue;
      if (colours.below(r) == 0) base.add_edge(a, b);
    }
    const std::vector<int> nbrs = g.neighbours(v).to_vector();
    const int deg = static_cast<int>(nbrs.size());
    // Both conditions pass to smaller neighbourhoods, so only the smallest
    // admissible neighbourhoods of v need checking.
    auto any_subset = [&](int k, auto accept) {
      bool hit = false;
      if (k > deg) return false;
      for_each_k_subset(deg, k, [&](VertexSet pick) {
        Graph gp = base;
        for (int j : pick) gp.add_edge(nbrs[j], v);
        hit = accept(induced_copy_hypergraph(pattern, gp, g).hypergraph);
        return !hit;
      });
      return hit;
    };
    const bool gamma = any_subset(gamma_size, [](const Hypergraph& h) { return h.empty(); });
    const bool omega = any_subset(omega_size, [&](const Hypergraph& h) {
      return !janson_or_throw(h, p, omega_r, "extension experiment", solver);
    });
    rep.rows[t] = {t, st, static_cast<std::uint64_t>(gamma) | (static_cast<std::uint64_t>(omega) << 1),
                   static_cast<std::uint64_t>(deg)};
  });
  for (const TrialRow& row : rep.rows) {
    rep.gamma_hits += row.outcome & 1;
    rep.omega_hits += (row.outcome >> 1) & 1;
  }
  if (trials > 0) {
    rep.gamma_frequency = static_cast<double>(rep.gamma_hits) / trials;
    rep.omega_frequency = static_cast<double>(rep.omega_hits) / trials;
  }
  return rep;
}

std::string trials_csv(const std::vector<TrialRow>& rows) {
  std::ostringstream out;
  out << "trial,seed,outcome,statistic\n";
  for (const TrialRow& row : rows) {
    out << row.trial << ',' << row.seed << ',' << row.outcome << ',' << row.statistic << '\n';
  }
  return out.str();
}

}  // namespace jc
