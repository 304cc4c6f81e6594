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

#include <string>

#include "jc/containers.hpp"
#include "jc/error.hpp"

namespace jc {
namespace {

constexpr int kTableCap = 16;

void validate_q(const Rational& q) {
  if (q <= 0 || q >= 1) throw InputError("q must lie in (0, 1), got " + to_string(q));
}

// a^k (b-a)^(n-k) for k = 0..n, where q = a/b.
std::vector<Integer> size_weights(const Rational& q, int n) {
  const Integer a = q.get_num();
  const Integer rest = q.get_den() - a;
  std::vector<Integer> out(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Integer x, y;
    mpz_pow_ui(x.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(y.get_mpz_t(), rest.get_mpz_t(), static_cast<unsigned long>(n - k));
    out[static_cast<std::size_t>(k)] = x * y;
  }
  return out;
}

Integer weigh(const std::vector<std::uint64_t>& counts, const std::vector<Integer>& w) {
  Integer total = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] != 0) total += w[k] * Integer(static_cast<unsigned long>(counts[k]));
  }
  return total;
}

}  // namespace

Rational conditional_prob(const Hypergraph& h, VertexSet l, const Rational& q) {
  validate_q(q);
  const std::vector<Integer> w = size_weights(q, h.num_vertices());
  const Integer all = weigh(count_independent_supersets(h, VertexSet()), w);
  if (all == 0) throw InputError("hypergraph has no independent sets (empty edge)");
  const Integer with = weigh(count_independent_supersets(h, l), w);
  Rational out(with, all);
  out.canonicalize();
  return out;
}

ConditionalTable::ConditionalTable(const Hypergraph& h, const Rational& q)
    : n_(h.num_vertices()), q_(q) {
  validate_q(q);
  if (n_ > kTableCap) {
    throw InputError("conditional tables are capped at 16 vertices");
  }
  const std::size_t full = std::size_t{1} << n_;
  const std::size_t width = static_cast<std::size_t>(n_) + 1;
  std::vector<char> spans(full, 0);
  for (VertexSet e : h.edges()) spans[e.bits()] = 1;
  for (int b = 0; b < n_; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t a = 0; a < full; ++a) {
      if ((a & bit) != 0 && spans[a ^ bit]) spans[a] = 1;
    }
  }
  counts_.assign(full * width, 0);
  for (std::size_t a = 0; a < full; ++a) {
    if (!spans[a]) counts_[a * width + static_cast<std::size_t>(std::popcount(a))] = 1;
  }
  for (int b = 0; b < n_; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t a = 0; a < full; ++a) {
      if ((a & bit) != 0) continue;
      std::uint32_t* dst = &counts_[a * width];
      const std::uint32_t* src = &counts_[(a | bit) * width];
      for (std::size_t k = 0; k < width; ++k) dst[k] += src[k];
    }
  }
  size_weight_ = size_weights(q, n_);
  total_ = numerator(VertexSet());
  if (total_ == 0) throw InputError("hypergraph has no independent sets (empty edge)");
}

Integer ConditionalTable::numerator(VertexSet a) const {
  const std::size_t width = static_cast<std::size_t>(n_) + 1;
  Integer total = 0;
  const std::uint32_t* row = &counts_[a.bits() * width];
  for (std::size_t k = 0; k < width; ++k) {
    if (row[k] != 0) total += size_weight_[k] * Integer(static_cast<unsigned long>(row[k]));
  }
  return total;
}

Rational ConditionalTable::prob(VertexSet a) const {
  Rational out(numerator(a), total_);
  out.canonicalize();
  return out;
}

bool ConditionalTable::below(VertexSet a, const Rational& alpha) const {
  // N_A / Z <= ((1-alpha) q)^{|A|}  <=>  N_A * den^k <= Z * num^k.
  const Rational ratio = (1 - alpha) * q_;
  const auto k = static_cast<unsigned long>(a.size());
  Integer num_pow, den_pow;
  mpz_pow_ui(num_pow.get_mpz_t(), ratio.get_num_mpz_t(), k);
  mpz_pow_ui(den_pow.get_mpz_t(), ratio.get_den_mpz_t(), k);
  return numerator(a) * den_pow <= total_ * num_pow;
}

std::vector<bool> ConditionalTable::below_table(const Rational& alpha) const {
  const std::size_t full = std::size_t{1} << n_;
  const Rational ratio = (1 - alpha) * q_;
  std::vector<Integer> num_pow(static_cast<std::size_t>(n_) + 1);
  std::vector<Integer> den_pow(static_cast<std::size_t>(n_) + 1);
  num_pow[0] = 1;
  den_pow[0] = 1;
  for (int k = 1; k <= n_; ++k) {
    num_pow[k] = num_pow[k - 1] * ratio.get_num();
    den_pow[k] = den_pow[k - 1] * ratio.get_den();
  }
  std::vector<bool> out(full);
  for (std::size_t a = 0; a < full; ++a) {
    const auto k = static_cast<std::size_t>(std::popcount(a));
    out[a] = numerator(VertexSet(a)) * den_pow[k] <= total_ * num_pow[k];
  }
  return out;
}

}  // namespace jc
