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

#ifndef JC_CONTAINERS_HPP_
#define JC_CONTAINERS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "jc/copies.hpp"
#include "jc/hypergraph.hpp"
#include "jc/janson.hpp"
#include "jc/rational.hpp"

namespace jc {

// ---------------------------------------------------------------------------
// Conditional probabilities under the q-random subset conditioned on being
// independent.

// P(L within V_q | V_q independent in h), by direct enumeration (n <= 25).
Rational conditional_prob(const Hypergraph& h, VertexSet l, const Rational& q);

// The same probability for every subset at once (n <= 16), via superset sums
// of independent-set counts. Used for fingerprints and covers.
class ConditionalTable {
 public:
  ConditionalTable(const Hypergraph& h, const Rational& q);

  int num_vertices() const { return n_; }
  Rational prob(VertexSet a) const;
  // P(A) <= ((1 - alpha) q)^{|A|}, decided exactly.
  bool below(VertexSet a, const Rational& alpha) const;
  // below() for every subset, indexed by bit pattern.
  std::vector<bool> below_table(const Rational& alpha) const;

 private:
  Integer numerator(VertexSet a) const;

  int n_;
  Rational q_;
  std::vector<std::uint32_t> counts_;  // [A * (n+1) + k]
  std::vector<Integer> size_weight_;   // a^k (b-a)^(n-k), q = a/b
  Integer total_;                      // numerator of the empty set
};

// ---------------------------------------------------------------------------
// Families.

struct ContainerParams {
  std::optional<Rational> p, q, alpha, r_value, r_prime, eta;
  int s = 0;
  int n = 0;
  int colours = 0;
  bool paper_literal = false;
};

struct FingerprintAssignment {
  VertexSet independent;
  std::size_t fingerprint = 0;  // index into the owning fingerprint list
};

struct VerificationReport {
  std::vector<std::string> theorem_violations;
  std::vector<std::string> oracle_incomplete;
  std::vector<std::string> notes;
  std::uint64_t checks = 0;
  bool ok() const { return theorem_violations.empty(); }
  void merge(const VerificationReport& other, const std::string& prefix);
};

struct SecondLevel {
  std::vector<VertexSet> fingerprints;  // S
  std::vector<VertexSet> containers;    // psi(S), aligned with fingerprints
  std::vector<FingerprintAssignment> assignment;
};

struct ContainerFamily {
  ContainerParams params;
  std::vector<VertexSet> fingerprints;            // T (or S for the oracle)
  std::vector<FingerprintAssignment> assignment;  // phi
  std::vector<Hypergraph> covers;                 // C_T, aligned with fingerprints
  std::vector<SecondLevel> second_level;          // per T, pipelines only
  std::vector<VertexSet> containers;              // X; aligned for the oracle
  VerificationReport report;
};

// ---------------------------------------------------------------------------
// Fingerprints and covers.

// Greedy maximal T within I under P(T | independent) <= ((1-alpha) q)^{|T|}:
// repeatedly move to the first strict superset (by size, then bit pattern)
// that still satisfies the bound. The result is inclusion-maximal.
VertexSet fingerprint(const Hypergraph& h, VertexSet i, const Rational& q,
                      const Rational& alpha);
VertexSet fingerprint(const std::vector<bool>& below, VertexSet i);

struct HardcoverOptions {
  bool paper_literal = false;     // keep the empty set in every cover
  int sampled_outside = 100;      // strictness re-checks per cover
  std::uint64_t seed = 0x5eed;
};

ContainerFamily hardcover_family(const Hypergraph& h, const Rational& q,
                                 const Rational& alpha,
                                 const HardcoverOptions& options = {});

// ---------------------------------------------------------------------------
// Cover certificates.

struct CoverCertificate {
  Hypergraph target;
  Hypergraph cover;
  Rational p;
  Rational weight;  // sum of p^{|E|} over cover edges; an upper bound on R*
};

CoverCertificate cover_certificate(const Hypergraph& target, const Hypergraph& cover,
                                   const Rational& p);

// ---------------------------------------------------------------------------
// Uniform-container oracle seam and its brute-force fallback.

class UniformContainerOracle {
 public:
  virtual ~UniformContainerOracle() = default;
  // Family (S, phi, psi) with fingerprints of size <= 2^11 s^2 p n and
  // containers X whose induced hypergraph is not (p, 2^-8 p |X|)-Janson.
  virtual ContainerFamily build(const Hypergraph& h, const Rational& p) const = 0;
};

class BruteForceOracle : public UniformContainerOracle {
 public:
  explicit BruteForceOracle(int max_universe = 14, SolverOptions solver = {})
      : max_universe_(max_universe), solver_(solver) {}
  ContainerFamily build(const Hypergraph& h, const Rational& p) const override;

 private:
  int max_universe_;
  SolverOptions solver_;
};

ContainerFamily uniform_container_oracle(const Hypergraph& h, const Rational& p);

// Re-checks items (i)-(iii) of a uniform family against h.
VerificationReport verify_uniform_family(const Hypergraph& h, const Rational& p,
                                         const ContainerFamily& family,
                                         const SolverOptions& solver = {});

// ---------------------------------------------------------------------------
// Pipelines.

struct UpsetResult {
  Hypergraph minimal;  // minimal members, by size then bit pattern
  std::uint64_t queries = 0;
};

// Minimal members of an up-set on [0, n) given a membership predicate that is
// only called on sets not already known to be members.
UpsetResult build_upset(int n, const std::function<bool(VertexSet)>& member);

struct PipelineOptions {
  int max_universe = 14;
  SolverOptions solver;
  HardcoverOptions hardcover;
};

// Containers for the sets L with h[L] not (p/q, eta R)-Janson; eta defaults
// to 2^{-2s-2}.
ContainerFamily non_janson_containers(const Hypergraph& h, const Rational& p,
                                      const Rational& q, const Rational& r,
                                      std::optional<Rational> eta = std::nullopt,
                                      const UniformContainerOracle* oracle = nullptr,
                                      const PipelineOptions& options = {});

struct ExtensionParams {
  Rational p;
  Rational q;
  int colours = 2;                    // r
  std::optional<Rational> r_value;    // must equal 2^-6 p n when given
  Rational r_prime = 0;
  std::optional<Rational> eta;        // defaults to p^4 (q/2)^{4s}
};

// Containers for the sets L with pi_v(h[L]) + f not (p, R' + eta R)-Janson.
ContainerFamily extension_containers(const Hypergraph& h, const VertexMap& pi,
                                     const Hypergraph& f, int v,
                                     const ExtensionParams& params,
                                     const UniformContainerOracle* oracle = nullptr,
                                     const PipelineOptions& options = {});
ContainerFamily extension_containers(const ExtensionHypergraph& ext,
                                     const Hypergraph& f, int v,
                                     const ExtensionParams& params,
                                     const UniformContainerOracle* oracle = nullptr,
                                     const PipelineOptions& options = {});

// Intersection property: if every W with |W| >= n/(8r) is (p,R)-Janson and
// |S| + |T| >= (1 + 1/(8r)) n, then h[S & T] is (p,R)-Janson. Returns nullopt
// when the hypothesis fails, else whether the conclusion holds.
std::optional<bool> check_intersection_property(const Hypergraph& h, const Rational& p,
                                                const Rational& r, int colours,
                                                VertexSet s, VertexSet t,
                                                const SolverOptions& solver = {});

// log of the family-size bound 4 (2/q)^{c q n}.
double log_family_bound(const Rational& q, int c, int n);

}  // namespace jc

#endif  // JC_CONTAINERS_HPP_
