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

#ifndef JC_MEASURE_HPP_
#define JC_MEASURE_HPP_

#include <memory>
#include <vector>

#include "jc/hypergraph.hpp"
#include "jc/rational.hpp"

namespace jc {

enum class ArithmeticMode { kExact, kFloating };

template <class Scalar>
struct ScalarTraits;
template <>
struct ScalarTraits<double> {
  static constexpr ArithmeticMode kMode = ArithmeticMode::kFloating;
};
template <>
struct ScalarTraits<Rational> {
  static constexpr ArithmeticMode kMode = ArithmeticMode::kExact;
};

// Nonnegative weight per edge of a shared host hypergraph. The scalar type is
// the arithmetic mode, so exact and floating measures cannot be mixed.
template <class Scalar>
class BasicMeasure {
 public:
  using scalar_type = Scalar;
  static constexpr ArithmeticMode kMode = ScalarTraits<Scalar>::kMode;

  BasicMeasure() = default;
  BasicMeasure(std::shared_ptr<const Hypergraph> host, std::vector<Scalar> weights);
  BasicMeasure(const Hypergraph& host, std::vector<Scalar> weights)
      : BasicMeasure(std::make_shared<const Hypergraph>(host), std::move(weights)) {}

  static BasicMeasure zero(std::shared_ptr<const Hypergraph> host);
  static BasicMeasure uniform(std::shared_ptr<const Hypergraph> host);
  static BasicMeasure unit(std::shared_ptr<const Hypergraph> host, std::size_t edge);

  const Hypergraph& host() const { return *host_; }
  const std::shared_ptr<const Hypergraph>& host_ptr() const { return host_; }
  const std::vector<Scalar>& weights() const { return weights_; }
  const Scalar& weight(std::size_t i) const { return weights_[i]; }
  std::size_t size() const { return weights_.size(); }

 private:
  std::shared_ptr<const Hypergraph> host_;
  std::vector<Scalar> weights_;
};

using FloatMeasure = BasicMeasure<double>;
using ExactMeasure = BasicMeasure<Rational>;

template <class S>
bool same_host(const BasicMeasure<S>& a, const BasicMeasure<S>& b) {
  return a.host_ptr() == b.host_ptr() || a.host() == b.host();
}

// e(m): total weight.
template <class S> S mass(const BasicMeasure<S>& m);
// d_m(L): weight of edges containing L.
template <class S> S degree(const BasicMeasure<S>& m, VertexSet l);
// d_m({u}) for every vertex u of the universe.
template <class S> std::vector<S> vertex_degrees(const BasicMeasure<S>& m);
template <class S> S sum_squared_vertex_degrees(const BasicMeasure<S>& m);

// Sum over |L| >= 2 of d_m(L)^2 p^{-|L|}, by subset accumulation. Edges of
// positive weight are capped at 20 vertices.
template <class S> S lambda_subsets(const BasicMeasure<S>& m, const S& p);
// The same quantity through the pairwise closed form; no size cap.
template <class S> S lambda_pairwise(const BasicMeasure<S>& m, const S& p);
template <class S>
S lambda_p(const BasicMeasure<S>& m, const S& p) { return lambda_pairwise(m, p); }

// Overlap kernel (1+1/p)^k - 1 - k/p for k = 0..max_k, summed termwise so no
// cancellation occurs.
template <class S> std::vector<S> overlap_kernel(const S& p, int max_k);

// Splits the weight of each image edge equally over its pre-images.
template <class S>
BasicMeasure<S> pullback(const BasicMeasure<S>& theta, const Hypergraph& h,
                         const VertexMap& pi);
// Weight of E moved to E + v on edgewise_include(host, v).
template <class S> BasicMeasure<S> extend_by_vertex(const BasicMeasure<S>& m, int v);
// Weight m(E) [E within A] / prob[E].
template <class S>
BasicMeasure<S> reweight_restrict(const BasicMeasure<S>& m, VertexSet a,
                                  const std::vector<S>& prob);
template <class S>
BasicMeasure<S> add(const BasicMeasure<S>& a, const BasicMeasure<S>& b);
template <class S> BasicMeasure<S> scale(const BasicMeasure<S>& m, const S& t);
// Zeroes every edge that is not an edge of `keep`.
template <class S>
BasicMeasure<S> restrict_to(const BasicMeasure<S>& m, const Hypergraph& keep);
// Zeroes every edge that is an edge of `drop`.
template <class S>
BasicMeasure<S> restrict_outside(const BasicMeasure<S>& m, const Hypergraph& drop);

ExactMeasure to_exact(const FloatMeasure& m);
FloatMeasure to_float(const ExactMeasure& m);

void validate_probability(const Rational& p);
void validate_probability(double p);

}  // namespace jc

#endif  // JC_MEASURE_HPP_
