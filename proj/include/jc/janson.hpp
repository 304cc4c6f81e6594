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

#ifndef JC_JANSON_HPP_
#define JC_JANSON_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jc/hypergraph.hpp"
#include "jc/measure.hpp"
#include "jc/rational.hpp"

namespace jc {

struct SolverOptions {
  double tolerance = 1e-9;           // relative duality gap
  std::uint64_t max_iterations = 1'000'000;
  // Let is_janson settle easy queries from the self-cover weight or a single
  // edge before running the solver. The threshold it reports is then coarse.
  bool quick_bounds = true;
};

// Minimum of Lambda_p over the mass-1 simplex, with an exact bracket.
struct MinLambdaResult {
  FloatMeasure witness;      // mass 1 up to rounding
  double value = 0;          // Lambda_p(witness), floating
  double gap = 0;            // Frank-Wolfe duality gap at the witness
  std::uint64_t iterations = 0;
  bool converged = false;
  // Exact bracket: upper is Lambda_p of the witness rescaled to mass exactly
  // one; lower is the certified gap bound. lower <= min <= upper.
  Rational exact_upper;
  Rational exact_lower;
};

MinLambdaResult min_lambda(const Hypergraph& h, const Rational& p,
                           const SolverOptions& options = {});

// Exact bracket for an arbitrary nonzero floating measure on h.
std::pair<Rational, Rational> certify_bracket(const FloatMeasure& m,
                                              const Rational& p);

// Exact minimum by enumerating KKT support patterns. Small inputs only.
struct ExactMinimum {
  Rational value;
  ExactMeasure witness;
};
ExactMinimum exact_min_lambda(const Hypergraph& h, const Rational& p);

// The supremum R* of e(nu)^2 / Lambda_p(nu).
struct Threshold {
  enum class Kind { kZero, kFinite, kInfinite, kUnknown };
  Kind kind = Kind::kUnknown;
  double estimate = 0;  // 1 / value
  double lower = 0;     // 1 / exact upper bound on min Lambda
  double upper = 0;     // 1 / exact lower bound; +inf when that is not positive
  std::string describe() const;
};

Threshold janson_threshold(const Hypergraph& h, const Rational& p,
                           const SolverOptions& options = {});

enum class JansonAnswer { kYes, kNo, kUndecided };
const char* to_string(JansonAnswer a);

struct JansonVerdict {
  JansonAnswer answer = JansonAnswer::kUndecided;
  Threshold r_star;
  std::optional<FloatMeasure> witness;  // YES: Lambda < e^2 / R, exactly
  std::optional<Rational> dual_bound;   // NO: certified lower bound on min Lambda
  double gap = 0;
  std::uint64_t iterations = 0;
  double tolerance = 0;
  std::string reason;
};

JansonVerdict is_janson(const Hypergraph& h, const Rational& p, const Rational& r,
                        const SolverOptions& options = {});

// Yes/no with UNDECIDED raised as UndecidedError naming `context`.
// Count-only decision for s-uniform hypergraphs: NO whenever the edge count
// is at most no_up_to (the p-weight of the edges is then at most R), YES
// whenever it is at least yes_from (one edge already beats e^2/R). Counts in
// between need the solver.
struct CountRule {
  std::uint64_t no_up_to = 0;
  std::uint64_t yes_from = 0;
  bool decides(std::uint64_t count) const { return count <= no_up_to || count >= yes_from; }
  bool janson(std::uint64_t count) const { return count >= yes_from; }
};
CountRule uniform_count_rule(int edge_size, const Rational& p, const Rational& r);

bool janson_or_throw(const Hypergraph& h, const Rational& p, const Rational& r,
                     const std::string& context, const SolverOptions& options = {});

struct BoundedDegreeOptions {
  std::uint64_t hypothesis_budget = 1U << 16;  // subsets W checked
  std::uint64_t seed = 0x5eed;                 // for sampled hypothesis checks
  int max_rounds = 100000;
  SolverOptions solver;
};

struct BoundedDegreeWitness {
  FloatMeasure measure;          // mass sqrt(R)
  ExactMeasure normalized;       // exact dyadic copy used by the checks
  int rounds = 0;
  bool hypothesis_exhaustive = true;
  std::uint64_t subsets_checked = 0;
  bool mass_ok = false;          // |e(measure) - sqrt(R)| <= 1e-9 sqrt(R)
  bool lambda_ok = false;        // R Lambda < e^2, exact
  bool degree_ok = false;        // beta n sum d(v)^2 <= 2 s^2 e^2, exact
};

// Iterative construction of a Janson witness with bounded squared degrees.
BoundedDegreeWitness bounded_degree_witness(const Hypergraph& h, const Rational& p,
                                            const Rational& r, const Rational& beta,
                                            const BoundedDegreeOptions& options = {});

struct AggregateReport {
  ExactMeasure sum;
  Rational lambda_sum;        // Lambda_p of the sum
  Rational sum_of_lambdas;    // sum over the family
  std::size_t max_overlap = 0;  // max over relevant L of #{S : L within S}
  bool chain_holds = false;
  Rational mass;
  bool mass_matches = false;  // mass == family size
};

AggregateReport aggregate_witnesses(
    const std::vector<std::pair<VertexSet, ExactMeasure>>& family,
    const Hypergraph& host, const Rational& p);

}  // namespace jc

#endif  // JC_JANSON_HPP_
