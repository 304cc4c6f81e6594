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
#include <string>

#include "jc/containers.hpp"
#include "jc/error.hpp"

namespace jc {
namespace {

Integer floor_of(const Rational& x) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

Rational container_r(const Rational& p, VertexSet x) {
  return p * x.size() / 256;
}

Rational fingerprint_cap(const Rational& p, int s, int n) {
  return Rational(2048) * s * s * p * n;
}

}  // namespace

CoverCertificate cover_certificate(const Hypergraph& target, const Hypergraph& cover,
                                   const Rational& p) {
  validate_probability(p);
  if (target.num_vertices() != cover.num_vertices()) {
    throw InputError("target and cover live on different universes");
  }
  for (VertexSet c : cover.edges()) {
    if (c.size() < 2) {
      throw InputError("cover edge " + c.to_string() + " has size " +
                       std::to_string(c.size()) + " < 2");
    }
  }
  for (VertexSet e : target.edges()) {
    if (!cover.edges_within(e).empty()) continue;
    throw InputError("target edge " + e.to_string() + " contains no cover edge");
  }
  CoverCertificate cert{target, cover, p, 0};
  for (VertexSet c : cover.edges()) cert.weight += pow(p, c.size());
  return cert;
}

ContainerFamily BruteForceOracle::build(const Hypergraph& h, const Rational& p) const {
  validate_probability(p);
  const int n = h.num_vertices();
  if (n > max_universe_) {
    throw InputError("uniform oracle fallback is capped at " +
                     std::to_string(max_universe_) + " vertices");
  }
  const auto s_opt = h.uniformity();
  if (!h.empty() && !s_opt) throw InputError("uniform oracle needs a uniform hypergraph");
  const int s = s_opt.value_or(0);
  if (s > 0 && p * 2048 * s * s > 1) {
    throw InputError("uniform oracle needs p <= 1/(2^11 s^2)");
  }
  ContainerFamily fam;
  fam.params.p = p;
  fam.params.s = s;
  fam.params.n = n;
  const Integer cap = floor_of(fingerprint_cap(p, s, n));
  const int max_fp = cap > n ? n : static_cast<int>(cap.get_si());

  std::map<std::uint64_t, bool> cache;
  auto non_janson = [&](VertexSet x) {
    auto it = cache.find(x.bits());
    if (it != cache.end()) return it->second;
    const bool nj = !janson_or_throw(h.edges_within(x), p, container_r(p, x),
                                     "uniform oracle container " + x.to_string(), solver_);
    cache.emplace(x.bits(), nj);
    return nj;
  };
  auto grow = [&](VertexSet i) -> std::optional<VertexSet> {
    VertexSet x = h.universe();
    for (int v = 0; v < n; ++v) {
      if (non_janson(x)) return x;
      if (!i.contains(v)) x = x.without(v);
    }
    if (non_janson(x)) return x;
    return std::nullopt;
  };

  std::vector<VertexSet> order = independent_sets(h);
  std::stable_sort(order.begin(), order.end(),
                   [](VertexSet a, VertexSet b) { return a.size() > b.size(); });
  for (VertexSet i : order) {
    bool placed = false;
    for (std::size_t k = 0; k < fam.fingerprints.size() && !placed; ++k) {
      if (fam.fingerprints[k].is_subset_of(i) && i.is_subset_of(fam.containers[k])) {
        fam.assignment.push_back({i, k});
        placed = true;
      }
    }
    if (placed) continue;
    const std::optional<VertexSet> x = grow(i);
    if (x) {
      std::optional<VertexSet> fresh;
      for (int size = 0; size <= std::min(max_fp, i.size()) && !fresh; ++size) {
        for_each_subset(i, [&](VertexSet sub) {
          if (fresh || sub.size() != size) return;
          if (std::find(fam.fingerprints.begin(), fam.fingerprints.end(), sub) ==
              fam.fingerprints.end()) {
            fresh = sub;
          }
        });
      }
      if (fresh) {
        fam.fingerprints.push_back(*fresh);
        fam.containers.push_back(*x);
        fam.assignment.push_back({i, fam.fingerprints.size() - 1});
        placed = true;
      }
    }
    if (!placed) {
      fam.report.oracle_incomplete.push_back("no container for I = " + i.to_string());
    }
  }
  VerificationReport check = verify_uniform_family(h, p, fam, solver_);
  check.oracle_incomplete.clear();  // already recorded above
  fam.report.merge(check, "");
  return fam;
}

ContainerFamily uniform_container_oracle(const Hypergraph& h, const Rational& p) {
  return BruteForceOracle().build(h, p);
}

VerificationReport verify_uniform_family(const Hypergraph& h, const Rational& p,
                                         const ContainerFamily& family,
                                         const SolverOptions& solver) {
  VerificationReport rep;
  const int s = h.uniformity().value_or(0);
  const Rational cap = fingerprint_cap(p, s, h.num_vertices());
  std::vector<bool> seen(std::size_t{1} << h.num_vertices(), false);
  for (const auto& [i, k] : family.assignment) {
    rep.checks += 2;
    seen[i.bits()] = true;
    const VertexSet sfp = family.fingerprints[k];
    if (!(sfp.is_subset_of(i) && i.is_subset_of(family.containers[k]))) {
      rep.theorem_violations.push_back("item (i) fails for I = " + i.to_string());
    }
    if (Rational(sfp.size()) > cap) {
      rep.theorem_violations.push_back("item (ii): fingerprint " + sfp.to_string() +
                                       " too large");
    }
  }
  for (VertexSet x : family.containers) {
    ++rep.checks;
    const JansonVerdict v = is_janson(h.edges_within(x), p, container_r(p, x), solver);
    if (v.answer == JansonAnswer::kYes) {
      rep.theorem_violations.push_back("item (iii): container " + x.to_string() +
                                       " is Janson");
    } else if (v.answer == JansonAnswer::kUndecided) {
      rep.oracle_incomplete.push_back("item (iii) undecided for container " + x.to_string());
    }
  }
  for (VertexSet i : independent_sets(h)) {
    if (!seen[i.bits()]) {
      rep.oracle_incomplete.push_back("independent set " + i.to_string() + " unassigned");
    }
  }
  return rep;
}

}  // namespace jc
