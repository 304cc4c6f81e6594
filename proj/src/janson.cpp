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

#include "jc/janson.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

#include "jc/error.hpp"

namespace jc {
namespace {

constexpr std::size_t kMaxSolverEdges = 12000;
constexpr std::uint64_t kPolishPeriod = 64;
constexpr std::uint64_t kRefreshPeriod = 1024;

// Dense Gram matrix of the overlap kernel, stored as intersection sizes.
class OverlapMatrix {
 public:
  OverlapMatrix(const Hypergraph& h, std::vector<double> kernel)
      : m_(h.num_edges()), kernel_(std::move(kernel)), k_(m_ * m_) {
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = i; j < m_; ++j) {
        const auto k = static_cast<std::uint8_t>((h.edge(i) & h.edge(j)).size());
        k_[i * m_ + j] = k;
        k_[j * m_ + i] = k;
      }
    }
  }
  double operator()(std::size_t i, std::size_t j) const {
    return kernel_[k_[i * m_ + j]];
  }
  std::size_t size() const { return m_; }

  std::vector<double> times(const std::vector<double>& x) const {
    std::vector<double> out(m_, 0.0);
    for (std::size_t j = 0; j < m_; ++j) {
      if (x[j] == 0.0) continue;
      for (std::size_t i = 0; i < m_; ++i) out[i] += (*this)(i, j) * x[j];
    }
    return out;
  }

 private:
  std::size_t m_;
  std::vector<double> kernel_;
  std::vector<std::uint8_t> k_;
};

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Solves the equality-constrained problem on the current support:
// Q_SS x = t 1, 1^T x = 1. Accepts the result only if it is a nonnegative
// point that does not increase the objective.
bool polish(const OverlapMatrix& q, std::vector<double>& x, std::vector<double>& qx,
            double& f) {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 0) support.push_back(i);
  }
  const auto s = static_cast<Eigen::Index>(support.size());
  if (s <= 1) return false;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(s + 1, s + 1);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(s + 1);
  for (Eigen::Index r = 0; r < s; ++r) {
    for (Eigen::Index c = 0; c < s; ++c) a(r, c) = q(support[r], support[c]);
    a(r, s) = -1.0;
    a(s, r) = 1.0;
  }
  rhs(s) = 1.0;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  if (qr.rank() < s + 1) return false;
  const Eigen::VectorXd sol = qr.solve(rhs);
  std::vector<double> candidate(x.size(), 0.0);
  double total = 0;
  for (Eigen::Index r = 0; r < s; ++r) {
    if (!(sol(r) >= 0.0)) return false;
    candidate[support[r]] = sol(r);
    total += sol(r);
  }
  if (!(total > 0)) return false;
  for (double& v : candidate) v /= total;
  std::vector<double> cq = q.times(candidate);
  const double cf = dot(candidate, cq);
  if (!(cf <= f)) return false;
  x = std::move(candidate);
  qx = std::move(cq);
  f = cf;
  return true;
}

// Gaussian elimination over the rationals; nullopt when singular.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> a,
                                                 std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

std::optional<std::size_t> small_edge(const Hypergraph& h) {
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    if (h.edge(i).size() <= 1) return i;
  }
  return std::nullopt;
}

double reciprocal(const Rational& x) {
  if (x <= 0) return std::numeric_limits<double>::infinity();
  return Rational(1 / x).get_d();
}

}  // namespace

std::pair<Rational, Rational> certify_bracket(const FloatMeasure& m,
                                              const Rational& p) {
  validate_probability(p);
  const Hypergraph& h = m.host();
  std::vector<std::size_t> support;
  std::vector<Integer> num;
  std::vector<long> exps;
  long max_exp = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m.weight(i) <= 0) continue;
    const Rational w = from_double(m.weight(i));
    support.push_back(i);
    num.push_back(w.get_num());
    const long e = static_cast<long>(mpz_sizeinbase(w.get_den_mpz_t(), 2)) - 1;
    exps.push_back(e);
    max_exp = std::max(max_exp, e);
  }
  if (support.empty()) throw InputError("cannot certify the zero measure");
  Integer total = 0;
  for (std::size_t a = 0; a < support.size(); ++a) {
    mpz_mul_2exp(num[a].get_mpz_t(), num[a].get_mpz_t(),
                 static_cast<mp_bitcnt_t>(max_exp - exps[a]));
    total += num[a];
  }
  const int max_k = h.max_edge_size();
  const std::vector<Rational> kernel = overlap_kernel(p, max_k);
  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), p.get_num_mpz_t(), static_cast<unsigned long>(max_k));
  std::vector<Integer> ikernel;
  for (const Rational& c : kernel) {
    const Rational scaled = c * scale;
    ikernel.push_back(scaled.get_num() / scaled.get_den());
  }
  std::vector<Integer> bucket(static_cast<std::size_t>(max_k) + 1);
  Integer quad = 0;
  std::optional<Integer> min_row;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    for (Integer& b : bucket) b = 0;
    for (std::size_t a = 0; a < support.size(); ++a) {
      const int k = (h.edge(i) & h.edge(support[a])).size();
      if (k >= 2) bucket[static_cast<std::size_t>(k)] += num[a];
    }
    Integer row = 0;
    for (int k = 2; k <= max_k; ++k) row += ikernel[k] * bucket[k];
    if (!min_row || row < *min_row) min_row = row;
    const auto it = std::lower_bound(support.begin(), support.end(), i);
    if (it != support.end() && *it == i) {
      quad += num[static_cast<std::size_t>(it - support.begin())] * row;
    }
  }
  Rational upper(quad, Integer(scale * total * total));
  upper.canonicalize();
  Rational lower(Integer(2 * *min_row), Integer(scale * total));
  lower.canonicalize();
  lower -= upper;
  return {upper, lower};
}

MinLambdaResult min_lambda(const Hypergraph& h, const Rational& p,
                           const SolverOptions& options) {
  validate_probability(p);
  if (h.empty()) throw InputError("min_lambda needs at least one edge");
  auto host = std::make_shared<const Hypergraph>(h);
  MinLambdaResult out;
  if (auto i = small_edge(h)) {
    out.witness = FloatMeasure::unit(host, *i);
    out.converged = true;
    out.exact_upper = 0;
    out.exact_lower = 0;
    return out;
  }
  const std::size_t m = h.num_edges();
  if (m > kMaxSolverEdges) {
    throw BudgetError("solver edge cap exceeded", m);
  }
  std::vector<double> kernel;
  for (const Rational& c : overlap_kernel(p, h.max_edge_size())) {
    kernel.push_back(c.get_d());
  }
  const OverlapMatrix q(h, std::move(kernel));

  std::vector<double> x(m, 1.0 / static_cast<double>(m));
  std::vector<double> qx = q.times(x);
  double f = dot(x, qx);
  double gap = std::numeric_limits<double>::infinity();
  std::uint64_t it = 0;
  for (; it < options.max_iterations; ++it) {
    std::size_t toward = 0;
    for (std::size_t i = 1; i < m; ++i) {
      if (qx[i] < qx[toward]) toward = i;
    }
    gap = 2.0 * (f - qx[toward]);
    if (gap <= options.tolerance * f) {
      out.converged = true;
      break;
    }
    if (it % kPolishPeriod == kPolishPeriod - 1 && polish(q, x, qx, f)) continue;
    if (it % kRefreshPeriod == kRefreshPeriod - 1) {
      qx = q.times(x);
      f = dot(x, qx);
    }
    std::size_t away = toward;
    for (std::size_t i = 0; i < m; ++i) {
      if (x[i] > 0 && (away == toward || qx[i] > qx[away])) away = i;
    }
    const double away_gap = 2.0 * (qx[away] - f);
    if (gap >= away_gap || x[away] >= 1.0) {
      // Toward vertex `toward`: x <- (1-g) x + g e_toward.
      const double curvature = q(toward, toward) - 2.0 * qx[toward] + f;
      double step = curvature > 0 ? (f - qx[toward]) / curvature : 1.0;
      step = std::clamp(step, 0.0, 1.0);
      for (std::size_t i = 0; i < m; ++i) {
        x[i] *= 1.0 - step;
        qx[i] = (1.0 - step) * qx[i] + step * q(i, toward);
      }
      x[toward] += step;
    } else {
      // Away from vertex `away`: x <- (1+g) x - g e_away.
      const double limit = x[away] / (1.0 - x[away]);
      const double curvature = f - 2.0 * qx[away] + q(away, away);
      double step = curvature > 0 ? (qx[away] - f) / curvature : limit;
      step = std::clamp(step, 0.0, limit);
      for (std::size_t i = 0; i < m; ++i) {
        x[i] *= 1.0 + step;
        qx[i] = (1.0 + step) * qx[i] - step * q(i, away);
      }
      x[away] -= step * 1.0;
      if (step == limit || x[away] < 0) x[away] = 0.0;
    }
    f = dot(x, qx);
  }
  double total = 0;
  for (double v : x) total += v;
  for (double& v : x) v /= total;
  qx = q.times(x);
  f = dot(x, qx);
  double best = qx[0];
  for (double v : qx) best = std::min(best, v);
  out.gap = std::max(0.0, 2.0 * (f - best));
  out.value = f;
  out.iterations = it;
  out.converged = out.converged || out.gap <= options.tolerance * f;
  out.witness = FloatMeasure(host, std::move(x));
  std::tie(out.exact_upper, out.exact_lower) = certify_bracket(out.witness, p);
  return out;
}

ExactMinimum exact_min_lambda(const Hypergraph& h, const Rational& p) {
  validate_probability(p);
  const std::size_t m = h.num_edges();
  if (m == 0) throw InputError("exact_min_lambda needs at least one edge");
  if (m > 12) throw BudgetError("exact KKT enumeration is capped at 12 edges", m);
  const std::vector<Rational> kernel = overlap_kernel(p, h.max_edge_size());
  std::vector<std::vector<Rational>> q(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      q[i][j] = kernel[static_cast<std::size_t>((h.edge(i) & h.edge(j)).size())];
    }
  }
  auto host = std::make_shared<const Hypergraph>(h);
  for (int size = 1; size <= static_cast<int>(m); ++size) {
    std::optional<ExactMinimum> found;
    for_each_k_subset(static_cast<int>(m), size, [&](VertexSet pattern) {
      const std::vector<int> s = pattern.to_vector();
      const std::size_t k = s.size();
      std::vector<std::vector<Rational>> a(k + 1, std::vector<Rational>(k + 1));
      std::vector<Rational> b(k + 1);
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) a[r][c] = q[s[r]][s[c]];
        a[r][k] = -1;
        a[k][r] = 1;
      }
      b[k] = 1;
      const auto sol = solve_exact(std::move(a), std::move(b));
      if (!sol) return true;
      std::vector<Rational> x(m);
      for (std::size_t r = 0; r < k; ++r) {
        if ((*sol)[r] < 0) return true;
        x[static_cast<std::size_t>(s[r])] = (*sol)[r];
      }
      const Rational& t = (*sol)[k];
      for (std::size_t i = 0; i < m; ++i) {
        Rational row = 0;
        for (std::size_t j = 0; j < m; ++j) row += q[i][j] * x[j];
        if (row < t) return true;
      }
      found = ExactMinimum{t, ExactMeasure(host, std::move(x))};
      return false;
    });
    if (found) return *found;
  }
  throw std::logic_error("no KKT point found");
}

std::string Threshold::describe() const {
  switch (kind) {
    case Kind::kZero: return "0";
    case Kind::kInfinite: return "inf";
    case Kind::kUnknown: return "unknown";
    case Kind::kFinite: break;
  }
  return std::to_string(estimate);
}

Threshold janson_threshold(const Hypergraph& h, const Rational& p,
                           const SolverOptions& options) {
  validate_probability(p);
  Threshold t;
  if (h.empty()) {
    t.kind = Threshold::Kind::kZero;
    return t;
  }
  if (small_edge(h)) {
    t.kind = Threshold::Kind::kInfinite;
    t.estimate = t.lower = t.upper = std::numeric_limits<double>::infinity();
    return t;
  }
  const MinLambdaResult r = min_lambda(h, p, options);
  t.kind = Threshold::Kind::kFinite;
  t.estimate = 1.0 / r.value;
  t.lower = reciprocal(r.exact_upper);
  t.upper = reciprocal(r.exact_lower);
  return t;
}

const char* to_string(JansonAnswer a) {
  switch (a) {
    case JansonAnswer::kYes: return "YES";
    case JansonAnswer::kNo: return "NO";
    case JansonAnswer::kUndecided: break;
  }
  return "UNDECIDED";
}

JansonVerdict is_janson(const Hypergraph& h, const Rational& p, const Rational& r,
                        const SolverOptions& options) {
  validate_probability(p);
  if (r < 0) throw InputError("R must be nonnegative");
  JansonVerdict v;
  v.tolerance = options.tolerance;
  if (r == 0) {
    v.answer = JansonAnswer::kYes;
    v.reason = "R = 0";
    return v;
  }
  if (h.empty()) {
    v.answer = JansonAnswer::kNo;
    v.r_star.kind = Threshold::Kind::kZero;
    v.reason = "no edges";
    return v;
  }
  auto host = std::make_shared<const Hypergraph>(h);
  if (auto i = small_edge(h)) {
    v.answer = JansonAnswer::kYes;
    v.r_star.kind = Threshold::Kind::kInfinite;
    v.r_star.estimate = v.r_star.lower = v.r_star.upper =
        std::numeric_limits<double>::infinity();
    v.witness = FloatMeasure::unit(host, *i);
    v.reason = "edge of size at most one";
    return v;
  }
  if (options.quick_bounds) {
    // Every edge covers itself, so R* is at most the p-weight of the edges.
    Rational weight = 0;
    std::size_t smallest = 0;
    for (std::size_t i = 0; i < h.num_edges(); ++i) {
      weight += pow(p, h.edge(i).size());
      if (h.edge(i).size() < h.edge(smallest).size()) smallest = i;
    }
    Rational unit = 0;
    const int s = h.edge(smallest).size();
    Integer binom = 1;
    for (int l = 1; l <= s; ++l) {
      binom = binom * (s - l + 1) / l;
      if (l >= 2) unit += Rational(binom) / pow(p, l);
    }
    if (r >= weight) {
      v.answer = JansonAnswer::kNo;
      v.r_star.kind = Threshold::Kind::kFinite;
      v.r_star.lower = reciprocal(unit);
      v.r_star.upper = v.r_star.estimate = weight.get_d();
      v.dual_bound = 1 / weight;
      v.reason = "R is at least the p-weight of the edges";
      return v;
    }
    if (r * unit < 1) {
      v.answer = JansonAnswer::kYes;
      v.r_star.kind = Threshold::Kind::kFinite;
      v.r_star.lower = v.r_star.estimate = reciprocal(unit);
      v.r_star.upper = weight.get_d();
      v.witness = FloatMeasure::unit(host, smallest);
      v.reason = "a single edge beats e^2/R exactly";
      return v;
    }
  }
  const MinLambdaResult res = min_lambda(h, p, options);
  v.r_star.kind = Threshold::Kind::kFinite;
  v.r_star.estimate = 1.0 / res.value;
  v.r_star.lower = reciprocal(res.exact_upper);
  v.r_star.upper = reciprocal(res.exact_lower);
  v.gap = res.gap;
  v.iterations = res.iterations;
  if (r * res.exact_upper < 1) {
    v.answer = JansonAnswer::kYes;
    v.witness = res.witness;
    v.reason = "witness beats e^2/R exactly";
  } else if (res.exact_lower > 0 && r * res.exact_lower >= 1) {
    v.answer = JansonAnswer::kNo;
    v.dual_bound = res.exact_lower;
    v.reason = "certified lower bound";
  } else {
    v.answer = JansonAnswer::kUndecided;
    v.dual_bound = res.exact_lower;
    v.reason = "R lies inside the certified bracket";
  }
  return v;
}

CountRule uniform_count_rule(int edge_size, const Rational& p, const Rational& r) {
  validate_probability(p);
  if (r < 0) throw InputError("R must be nonnegative");
  if (edge_size < 0) throw InputError("edge size must be nonnegative");
  constexpr std::uint64_t kNever = std::numeric_limits<std::uint64_t>::max();
  CountRule rule;
  if (r == 0) {
    // Everything is Janson, including the empty hypergraph.
    rule.yes_from = 0;
    return rule;
  }
  if (edge_size <= 1) {
    rule.yes_from = 1;
    return rule;
  }
  Integer cap;
  const Rational ratio = r / pow(p, edge_size);
  mpz_fdiv_q(cap.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
  rule.no_up_to = cap.fits_ulong_p() ? cap.get_ui() : kNever - 1;
  Rational unit = 0;
  Integer binom = 1;
  for (int l = 1; l <= edge_size; ++l) {
    binom = binom * (edge_size - l + 1) / l;
    if (l >= 2) unit += Rational(binom) / pow(p, l);
  }
  rule.yes_from = (r * unit < 1) ? 1 : kNever;
  return rule;
}

bool janson_or_throw(const Hypergraph& h, const Rational& p, const Rational& r,
                     const std::string& context, const SolverOptions& options) {
  const JansonVerdict v = is_janson(h, p, r, options);
  if (v.answer == JansonAnswer::kUndecided) {
    throw UndecidedError("undecided Janson query (" + context + ", p=" +
                         to_string(p) + ", R=" + to_string(r) + ", R* in [" +
                         std::to_string(v.r_star.lower) + ", " +
                         std::to_string(v.r_star.upper) + "])");
  }
  return v.answer == JansonAnswer::kYes;
}

}  // namespace jc
