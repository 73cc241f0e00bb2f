#include "schubstab/curves.hpp"

#include "schubstab/linalg.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <numeric>

namespace schubstab {

PolynomialMatrixCurve::PolynomialMatrixCurve(PolyMatrix entries, Rational a, Rational b)
    : entries_(std::move(entries)), a_(std::move(a)), b_(std::move(b)) {
  if (entries_.rows() < 1 || entries_.cols() < 1) throw ValidationError("curve must have at least one entry");
  if (!(a_ < b_)) throw ValidationError("curve interval must satisfy a < b");
}

PolyMatrix unipotent_embed(const PolyMatrix& psi) {
  const int m = psi.rows();
  const int n = psi.cols();
  PolyMatrix out = PolyMatrix::identity(m + n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) out(i, m + j) = psi(i, j);
  }
  return out;
}

std::vector<std::vector<int>> plucker_index_sets(int m, int N) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(m));
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    int k = m - 1;
    while (k >= 0 && cur[static_cast<std::size_t>(k)] == N - m + k) --k;
    if (k < 0) break;
    ++cur[static_cast<std::size_t>(k)];
    for (int j = k + 1; j < m; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

namespace {

// The m x (m+n) matrix [I_m | φ(s)].
PolyMatrix row_space_matrix(const PolynomialMatrixCurve& curve) {
  const int m = curve.rows();
  const int n = curve.cols();
  PolyMatrix out(m, m + n);
  for (int i = 0; i < m; ++i) {
    out(i, i) = Polynomial(1);
    for (int j = 0; j < n; ++j) out(i, m + j) = curve.entries()(i, j);
  }
  return out;
}

}  // namespace

std::vector<Polynomial> plucker_coords(const PolynomialMatrixCurve& curve) {
  const PolyMatrix full = row_space_matrix(curve);
  const int m = curve.rows();
  std::vector<Polynomial> out;
  for (const auto& cols : plucker_index_sets(m, full.cols())) {
    PolyMatrix sub(m, m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) sub(i, j) = full(i, cols[static_cast<std::size_t>(j)]);
    }
    out.push_back(determinant(sub));
  }
  return out;
}

bool pencil_membership(const PolynomialMatrixCurve& curve,
                       const std::vector<std::vector<Rational>>& w_basis, int r) {
  const int m = curve.rows();
  const int N = curve.rows() + curve.cols();
  const int k = static_cast<int>(w_basis.size());
  for (const auto& v : w_basis) {
    if (static_cast<int>(v.size()) != N) {
      throw ValidationError("W basis vectors must have m+n = " + std::to_string(N) + " entries");
    }
  }
  if (k >= N) throw ValidationError("W must be a proper subspace");
  if (rank(RationalMatrix(w_basis)) != k) throw ValidationError("W basis is linearly dependent");
  if (r < 0 || r > std::min(m, k)) throw ValidationError("r must lie in [0, min(m, dim W)]");
  if (r == 0) return true;

  const PolyMatrix top = row_space_matrix(curve);
  PolyMatrix stacked(m + k, N);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < N; ++j) stacked(i, j) = top(i, j);
  }
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < N; ++j) stacked(m + i, j) = Polynomial(w_basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  // dim(V ∩ W) = m + k - rank[V; W]
  return rank(stacked) <= m + k - r;
}

namespace {

using Series = std::vector<PolyMatrix>;  // index = power of ξ

Series series_mul(const Series& a, const Series& b, int order) {
  const int n = a.front().rows();
  Series out(static_cast<std::size_t>(order + 1), PolyMatrix(n, n));
  for (int i = 0; i <= order; ++i) {
    if (a[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (b[static_cast<std::size_t>(j)].is_zero()) continue;
      out[static_cast<std::size_t>(i + j)] =
          out[static_cast<std::size_t>(i + j)] + a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

void require_unimodular(const PolyMatrix& g) {
  if (g.rows() != g.cols()) throw ValidationError("group curve must be square");
  if (!(determinant(g) == Polynomial(1))) {
    throw ValidationError("curve is not unimodular: det ≢ 1");
  }
}

}  // namespace

std::vector<PolyMatrix> log_series(const PolyMatrix& g_curve, int order) {
  if (order < 1) throw ValidationError("series order must be ≥ 1");
  require_unimodular(g_curve);
  const int n = g_curve.rows();
  const PolyMatrix inverse = adjugate(g_curve);

  // φ(s+ξ) φ(s)^{-1} - I = Σ_{i≥1} ξ^i (φ^{(i)}(s)/i!) φ(s)^{-1}
  Series x(static_cast<std::size_t>(order + 1), PolyMatrix(n, n));
  PolyMatrix deriv = g_curve;
  Rational factorial = 1;
  for (int i = 1; i <= order; ++i) {
    deriv = deriv.derivative();
    factorial *= i;
    if (deriv.is_zero()) break;
    x[static_cast<std::size_t>(i)] = deriv.scaled(Rational(1) / factorial) * inverse;
  }

  // log(I + X) = Σ_k (-1)^{k+1} X^k / k; X has no ξ^0 term so k <= order suffices.
  Series result(static_cast<std::size_t>(order + 1), PolyMatrix(n, n));
  Series power = x;
  for (int k = 1; k <= order; ++k) {
    const Rational c = Rational(k % 2 == 1 ? 1 : -1, k);
    bool any = false;
    for (int i = 0; i <= order; ++i) {
      if (power[static_cast<std::size_t>(i)].is_zero()) continue;
      any = true;
      result[static_cast<std::size_t>(i)] = result[static_cast<std::size_t>(i)] + power[static_cast<std::size_t>(i)].scaled(c);
    }
    if (!any || k == order) break;
    power = series_mul(power, x, order);
  }
  return result;
}

bool is_nilpotent(const PolyMatrix& y) {
  if (y.rows() != y.cols()) return false;
  PolyMatrix power = y;
  for (int k = 1; k < y.rows(); ++k) power = power * y;
  return power.is_zero();
}

LeadingDirection leading_direction(const PolyMatrix& g_curve, const std::vector<long long>& a_exponents,
                                   int truncation) {
  const int n = g_curve.rows();
  if (static_cast<int>(a_exponents.size()) != n) {
    throw ValidationError("a exponents must have N = " + std::to_string(n) + " entries");
  }
  if (truncation < 1) throw ValidationError("truncation K must be ≥ 1");
  const auto psi = log_series(g_curve, truncation);

  auto weight = [&](int k, int l) {
    return a_exponents[static_cast<std::size_t>(k)] - a_exponents[static_cast<std::size_t>(l)];
  };
  const long long max_weight = *std::max_element(a_exponents.begin(), a_exponents.end()) -
                               *std::min_element(a_exponents.begin(), a_exponents.end());

  LeadingDirection ld;
  ld.truncation = truncation;
  ld.top_weights.assign(static_cast<std::size_t>(truncation), INT_MIN);
  bool have_kappa = false;
  for (int i = 1; i <= truncation; ++i) {
    const PolyMatrix& term = psi[static_cast<std::size_t>(i)];
    long long top = LLONG_MIN;
    for (int k = 0; k < n; ++k) {
      for (int l = 0; l < n; ++l) {
        if (!term(k, l).is_zero()) top = std::max(top, weight(k, l));
      }
    }
    if (top == LLONG_MIN) continue;
    ld.top_weights[static_cast<std::size_t>(i - 1)] = static_cast<int>(top);
    const Rational ratio(top, i);
    if (!have_kappa || ratio > ld.kappa) {
      ld.kappa = ratio;
      have_kappa = true;
    }
  }
  if (!have_kappa || ld.kappa <= 0) {
    throw ValidationError("projection to G/P is trivial: no positive weight in log(φ(s+ξ)φ(s)^{-1})");
  }
  if (!(Rational(max_weight) < ld.kappa * truncation)) {
    throw ValidationError("truncation K = " + std::to_string(truncation) +
                          " is below the stopping rule max_weight < κ·K");
  }

  ld.y = PolyMatrix(n, n);
  for (int i = 1; i <= truncation; ++i) {
    const int top = ld.top_weights[static_cast<std::size_t>(i - 1)];
    if (top == INT_MIN || Rational(top, i) != ld.kappa) continue;
    ld.leading.push_back(i);
    const PolyMatrix& term = psi[static_cast<std::size_t>(i)];
    for (int k = 0; k < n; ++k) {
      for (int l = 0; l < n; ++l) {
        if (weight(k, l) == top) ld.y(k, l) += term(k, l);
      }
    }
  }

  // Every other component decays like t^{w - κ i}; the truncated tail like
  // t^{max_weight - κ (K+1)}.
  Rational decay = ld.kappa * (truncation + 1) - max_weight;
  for (int i = 1; i <= truncation; ++i) {
    const PolyMatrix& term = psi[static_cast<std::size_t>(i)];
    const bool leading = std::find(ld.leading.begin(), ld.leading.end(), i) != ld.leading.end();
    const int top = ld.top_weights[static_cast<std::size_t>(i - 1)];
    for (int k = 0; k < n; ++k) {
      for (int l = 0; l < n; ++l) {
        if (term(k, l).is_zero()) continue;
        if (leading && weight(k, l) == top) continue;
        decay = std::min(decay, Rational(ld.kappa * i - weight(k, l)));
      }
    }
  }
  ld.decay_exponent = decay;

  if (ld.y.is_zero()) throw ComputationError("leading direction vanished identically");
  if (!is_nilpotent(ld.y)) throw ComputationError("leading direction is not nilpotent");
  return ld;
}

LeadingDirection leading_direction_auto(const PolyMatrix& g_curve,
                                        const std::vector<long long>& a_exponents, int max_order) {
  for (int k = 1; k <= max_order; ++k) {
    try {
      return leading_direction(g_curve, a_exponents, k);
    } catch (const ValidationError& e) {
      const std::string what = e.what();
      if (what.find("stopping rule") == std::string::npos) throw;
    }
  }
  throw ComputationError("no truncation order up to " + std::to_string(max_order) +
                         " satisfies the stopping rule");
}

long double verify_leading_convergence(const LeadingDirection& ld, const PolyMatrix& g_curve,
                                       const std::vector<long long>& a_exponents,
                                       const std::vector<long double>& t_samples,
                                       const std::vector<long double>& s_samples) {
  const int n = g_curve.rows();
  const int order = ld.truncation + n;
  const auto psi = log_series(g_curve, order);
  const long double kappa = to_long_double(ld.kappa);
  long double worst = 0;
  for (long double t : t_samples) {
    const long double log_t = std::log(t);
    for (long double s : s_samples) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          const long double w = static_cast<long double>(a_exponents[static_cast<std::size_t>(k)] -
                                                         a_exponents[static_cast<std::size_t>(l)]);
          long double value = 0;
          for (int i = 1; i <= order; ++i) {
            const Polynomial& p = psi[static_cast<std::size_t>(i)](k, l);
            if (p.is_zero()) continue;
            value += std::exp((w - kappa * i) * log_t) * p.eval(s);
          }
          worst = std::max(worst, std::fabs(value - ld.y(k, l).eval(s)));
        }
      }
    }
  }
  return worst;
}

}  // namespace schubstab
