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

#include "jc/measure.hpp"

#include <cmath>
#include <string>
#include <type_traits>
#include <unordered_map>

#include "jc/error.hpp"

namespace jc {
namespace {

constexpr int kSubsetAccumulationCap = 20;

template <class S>
void require_same_host(const BasicMeasure<S>& a, const BasicMeasure<S>& b) {
  if (!same_host(a, b)) throw InputError("measures live on different hosts");
}

template <class S>
std::vector<S> inverse_powers(const S& p, int max_k) {
  std::vector<S> out(static_cast<std::size_t>(max_k) + 1);
  const S inv = S(S(1) / p);
  out[0] = S(1);
  for (int k = 1; k <= max_k; ++k) out[k] = S(out[k - 1] * inv);
  return out;
}

}  // namespace

void validate_probability(const Rational& p) {
  if (p <= 0 || p > 1) {
    throw InputError("probability " + to_string(p) + " outside (0, 1]");
  }
}

void validate_probability(double p) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw InputError("probability " + std::to_string(p) + " outside (0, 1]");
  }
}

template <class S>
BasicMeasure<S>::BasicMeasure(std::shared_ptr<const Hypergraph> host,
                              std::vector<S> weights)
    : host_(std::move(host)), weights_(std::move(weights)) {
  if (!host_) throw InputError("measure without a host");
  if (weights_.size() != host_->num_edges()) {
    throw InputError("measure has " + std::to_string(weights_.size()) +
                     " weights for " + std::to_string(host_->num_edges()) +
                     " edges");
  }
  for (S& w : weights_) {
    // mpq_class(a, b) does not reduce; exact comparisons need canonical form.
    if constexpr (std::is_same_v<S, Rational>) w.canonicalize();
    if (w < 0) throw InputError("negative measure weight");
  }
}

template <class S>
BasicMeasure<S> BasicMeasure<S>::zero(std::shared_ptr<const Hypergraph> host) {
  const std::size_t m = host->num_edges();
  return BasicMeasure(std::move(host), std::vector<S>(m, S(0)));
}

template <class S>
BasicMeasure<S> BasicMeasure<S>::uniform(std::shared_ptr<const Hypergraph> host) {
  const std::size_t m = host->num_edges();
  if (m == 0) throw InputError("uniform measure on an empty edge set");
  return BasicMeasure(std::move(host),
                      std::vector<S>(m, S(S(1) / S(static_cast<long>(m)))));
}

template <class S>
BasicMeasure<S> BasicMeasure<S>::unit(std::shared_ptr<const Hypergraph> host,
                                      std::size_t edge) {
  BasicMeasure out = zero(std::move(host));
  if (edge >= out.weights_.size()) throw InputError("edge index out of range");
  out.weights_[edge] = S(1);
  return out;
}

template <class S>
S mass(const BasicMeasure<S>& m) {
  S total(0);
  for (const S& w : m.weights()) total += w;
  return total;
}

template <class S>
S degree(const BasicMeasure<S>& m, VertexSet l) {
  if (!l.is_subset_of(m.host().universe())) {
    throw InputError("vertex set " + l.to_string() + " leaves the universe");
  }
  S total(0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (l.is_subset_of(m.host().edge(i))) total += m.weight(i);
  }
  return total;
}

template <class S>
std::vector<S> vertex_degrees(const BasicMeasure<S>& m) {
  std::vector<S> out(static_cast<std::size_t>(m.host().num_vertices()), S(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (int v : m.host().edge(i)) out[static_cast<std::size_t>(v)] += m.weight(i);
  }
  return out;
}

template <class S>
S sum_squared_vertex_degrees(const BasicMeasure<S>& m) {
  S total(0);
  for (const S& d : vertex_degrees(m)) total += d * d;
  return total;
}

template <class S>
S lambda_subsets(const BasicMeasure<S>& m, const S& p) {
  validate_probability(p);
  std::unordered_map<VertexSet, S, VertexSetHash> acc;
  int max_k = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m.weight(i) == 0) continue;
    const VertexSet e = m.host().edge(i);
    if (e.size() > kSubsetAccumulationCap) {
      throw BudgetError("edge " + e.to_string() +
                            " exceeds the subset-accumulation cap of 20",
                        0);
    }
    max_k = std::max(max_k, e.size());
    for_each_subset(e, [&](VertexSet l) {
      if (l.size() >= 2) acc[l] += m.weight(i);
    });
  }
  const std::vector<S> inv = inverse_powers(p, max_k);
  S total(0);
  for (const auto& [l, d] : acc) total += d * d * inv[static_cast<std::size_t>(l.size())];
  return total;
}

template <class S>
std::vector<S> overlap_kernel(const S& p, int max_k) {
  const std::vector<S> inv = inverse_powers(p, max_k);
  std::vector<S> out(static_cast<std::size_t>(max_k) + 1, S(0));
  // Binomial rows built incrementally: C(k, l) for l >= 2.
  std::vector<S> binom(static_cast<std::size_t>(max_k) + 1, S(0));
  binom[0] = S(1);
  for (int k = 1; k <= max_k; ++k) {
    for (int l = k; l >= 1; --l) binom[l] += binom[l - 1];
    S sum(0);
    for (int l = 2; l <= k; ++l) sum += binom[l] * inv[l];
    out[k] = sum;
  }
  return out;
}

template <class S>
S lambda_pairwise(const BasicMeasure<S>& m, const S& p) {
  validate_probability(p);
  std::vector<std::size_t> support;
  int max_k = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m.weight(i) != 0) {
      support.push_back(i);
      max_k = std::max(max_k, m.host().edge(i).size());
    }
  }
  const std::vector<S> c = overlap_kernel(p, max_k);
  S diagonal(0);
  S off(0);
  for (std::size_t a = 0; a < support.size(); ++a) {
    const std::size_t i = support[a];
    const VertexSet ei = m.host().edge(i);
    diagonal += m.weight(i) * m.weight(i) * c[static_cast<std::size_t>(ei.size())];
    for (std::size_t b = a + 1; b < support.size(); ++b) {
      const std::size_t j = support[b];
      const int k = (ei & m.host().edge(j)).size();
      if (k >= 2) off += m.weight(i) * m.weight(j) * c[static_cast<std::size_t>(k)];
    }
  }
  return S(diagonal + 2 * off);
}

template <class S>
BasicMeasure<S> pullback(const BasicMeasure<S>& theta, const Hypergraph& h,
                         const VertexMap& pi) {
  const Projection proj = project(h, pi);
  if (!proj.image.same_edge_set(theta.host())) {
    throw InputError("pullback measure is not hosted on the projection");
  }
  std::vector<S> weights;
  weights.reserve(h.num_edges());
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const std::size_t img = proj.image_of_edge[i];
    const std::size_t t = *theta.host().index_of(proj.image.edge(img));
    weights.push_back(S(theta.weight(t) / S(static_cast<long>(proj.preimage_count[img]))));
  }
  return BasicMeasure<S>(h, std::move(weights));
}

template <class S>
BasicMeasure<S> extend_by_vertex(const BasicMeasure<S>& m, int v) {
  return BasicMeasure<S>(edgewise_include(m.host(), v), m.weights());
}

template <class S>
BasicMeasure<S> reweight_restrict(const BasicMeasure<S>& m, VertexSet a,
                                  const std::vector<S>& prob) {
  if (prob.size() != m.size()) throw InputError("one probability per edge required");
  std::vector<S> weights(m.size(), S(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m.weight(i) == 0 || !m.host().edge(i).is_subset_of(a)) continue;
    if (prob[i] <= 0) {
      throw InputError("certificate violation: zero probability on edge " +
                       m.host().edge(i).to_string());
    }
    weights[i] = S(m.weight(i) / prob[i]);
  }
  return BasicMeasure<S>(m.host_ptr(), std::move(weights));
}

template <class S>
BasicMeasure<S> add(const BasicMeasure<S>& a, const BasicMeasure<S>& b) {
  require_same_host(a, b);
  std::vector<S> weights(a.weights());
  for (std::size_t i = 0; i < weights.size(); ++i) weights[i] += b.weight(i);
  return BasicMeasure<S>(a.host_ptr(), std::move(weights));
}

template <class S>
BasicMeasure<S> scale(const BasicMeasure<S>& m, const S& t) {
  if (t < 0) throw InputError("negative scale factor");
  std::vector<S> weights(m.weights());
  for (S& w : weights) w *= t;
  return BasicMeasure<S>(m.host_ptr(), std::move(weights));
}

template <class S>
BasicMeasure<S> restrict_to(const BasicMeasure<S>& m, const Hypergraph& keep) {
  std::vector<S> weights(m.weights());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!keep.contains_edge(m.host().edge(i))) weights[i] = S(0);
  }
  return BasicMeasure<S>(m.host_ptr(), std::move(weights));
}

template <class S>
BasicMeasure<S> restrict_outside(const BasicMeasure<S>& m, const Hypergraph& drop) {
  std::vector<S> weights(m.weights());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (drop.contains_edge(m.host().edge(i))) weights[i] = S(0);
  }
  return BasicMeasure<S>(m.host_ptr(), std::move(weights));
}

ExactMeasure to_exact(const FloatMeasure& m) {
  std::vector<Rational> weights;
  weights.reserve(m.size());
  for (double w : m.weights()) weights.push_back(from_double(w));
  return ExactMeasure(m.host_ptr(), std::move(weights));
}

FloatMeasure to_float(const ExactMeasure& m) {
  std::vector<double> weights;
  weights.reserve(m.size());
  for (const Rational& w : m.weights()) weights.push_back(w.get_d());
  return FloatMeasure(m.host_ptr(), std::move(weights));
}

#define JC_INSTANTIATE_MEASURE(S)                                              \
  template class BasicMeasure<S>;                                              \
  template S mass(const BasicMeasure<S>&);                                     \
  template S degree(const BasicMeasure<S>&, VertexSet);                        \
  template std::vector<S> vertex_degrees(const BasicMeasure<S>&);              \
  template S sum_squared_vertex_degrees(const BasicMeasure<S>&);               \
  template S lambda_subsets(const BasicMeasure<S>&, const S&);                 \
  template S lambda_pairwise(const BasicMeasure<S>&, const S&);                \
  template std::vector<S> overlap_kernel(const S&, int);                       \
  template BasicMeasure<S> pullback(const BasicMeasure<S>&, const Hypergraph&, \
                                    const VertexMap&);                         \
  template BasicMeasure<S> extend_by_vertex(const BasicMeasure<S>&, int);      \
  template BasicMeasure<S> reweight_restrict(const BasicMeasure<S>&, VertexSet,\
                                             const std::vector<S>&);           \
  template BasicMeasure<S> add(const BasicMeasure<S>&, const BasicMeasure<S>&);\
  template BasicMeasure<S> scale(const BasicMeasure<S>&, const S&);            \
  template BasicMeasure<S> restrict_to(const BasicMeasure<S>&, const Hypergraph&); \
  template BasicMeasure<S> restrict_outside(const BasicMeasure<S>&, const Hypergraph&);

JC_INSTANTIATE_MEASURE(double)
JC_INSTANTIATE_MEASURE(Rational)

#undef JC_INSTANTIATE_MEASURE

}  // namespace jc
