#include "schubstab/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace schubstab {

std::vector<Real> LatticeBasis::vector_for(const std::vector<long long>& coeffs) const {
  const int n = dim();
  std::vector<Real> v(static_cast<std::size_t>(n), 0.0L);
  for (int j = 0; j < n; ++j) {
    const long long c = coeffs[static_cast<std::size_t>(j)];
    if (c == 0) continue;
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] += columns(i, j) * static_cast<Real>(c);
  }
  return v;
}

Real sup_norm(const std::vector<Real>& v) {
  Real best = 0;
  for (Real x : v) best = std::max(best, std::fabs(x));
  return best;
}

LatticeBasis translated_basis(const PolynomialMatrixCurve& curve, const Rational& s, Real t) {
  if (!curve.contains(s)) throw ValidationError("sample s = " + to_string(s) + " lies outside the curve interval");
  if (!(t > 0)) throw ValidationError("t must be positive");
  const int m = curve.rows();
  const int n = curve.cols();
  const int N = m + n;
  const auto phi = curve.entries().eval(s);
  const Real up = std::pow(t, static_cast<Real>(n));
  const Real down = std::pow(t, -static_cast<Real>(m));
  LatticeBasis basis{RealMatrix::Zero(N, N)};
  for (int i = 0; i < m; ++i) {
    basis.columns(i, i) = up;
    for (int j = 0; j < n; ++j) {
      basis.columns(i, m + j) = up * to_long_double(phi[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
  }
  for (int j = 0; j < n; ++j) basis.columns(m + j, m + j) = down;
  return basis;
}

namespace {

struct GramSchmidt {
  RealMatrix mu;              // mu(i, j) for j < i
  std::vector<Real> norms2;   // |b*_i|^2
};

GramSchmidt gram_schmidt(const RealMatrix& b) {
  const int n = static_cast<int>(b.cols());
  GramSchmidt gs{RealMatrix::Zero(n, n), std::vector<Real>(static_cast<std::size_t>(n))};
  RealMatrix star = b;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      const Real mu = b.col(i).dot(star.col(j)) / gs.norms2[static_cast<std::size_t>(j)];
      gs.mu(i, j) = mu;
      star.col(i) -= mu * star.col(j);
    }
    gs.norms2[static_cast<std::size_t>(i)] = star.col(i).squaredNorm();
    if (!(gs.norms2[static_cast<std::size_t>(i)] > 0)) {
      throw ValidationError("lattice basis is rank deficient");
    }
  }
  return gs;
}

void check_dim(const LatticeBasis& basis) {
  if (basis.columns.rows() != basis.columns.cols() || basis.dim() < 1) {
    throw ValidationError("lattice basis must be a non-empty square matrix");
  }
  if (basis.dim() > kMaxLatticeDim) {
    throw ValidationError("lattice dimension " + std::to_string(basis.dim()) + " exceeds the limit of " +
                          std::to_string(kMaxLatticeDim));
  }
}

// Visits every nonzero x with |B x|^2 <= *bound2, where B is the reduced
// basis described by `gs`. The bound may shrink during the walk.
// Throws once more than `budget` tree nodes have been expanded.
void enumerate(const GramSchmidt& gs, const Real* bound2, const std::function<void(const std::vector<long long>&)>& visit,
               long long budget = kEnumerationBudget) {
  const int n = static_cast<int>(gs.norms2.size());
  std::vector<long long> x(static_cast<std::size_t>(n), 0);
  long long nodes = 0;
  std::function<void(int, Real)> rec = [&](int level, Real partial) {
    if (++nodes > budget) {
      throw ComputationError("lattice enumeration exceeded " + std::to_string(budget) +
                             " nodes; the lattice is too degenerate for this radius");
    }
    if (level < 0) {
      if (std::any_of(x.begin(), x.end(), [](long long v) { return v != 0; })) visit(x);
      return;
    }
    Real center = 0;
    for (int j = level + 1; j < n; ++j) center -= gs.mu(j, level) * static_cast<Real>(x[static_cast<std::size_t>(j)]);
    const Real norm2 = gs.norms2[static_cast<std::size_t>(level)];
    const Real slack = *bound2 - partial;
    if (slack < 0) return;
    const Real half = std::sqrt(slack / norm2);
    const long long lo = static_cast<long long>(std::ceil(center - half));
    const long long hi = static_cast<long long>(std::floor(center + half));
    for (long long v = lo; v <= hi; ++v) {
      const Real d = static_cast<Real>(v) - center;
      const Real next = partial + d * d * norm2;
      if (next > *bound2) continue;
      x[static_cast<std::size_t>(level)] = v;
      rec(level - 1, next);
    }
    x[static_cast<std::size_t>(level)] = 0;
  };
  rec(n - 1, 0);
}

std::vector<long long> to_input_coeffs(const IntMatrix& transform, const std::vector<long long>& x) {
  const int n = static_cast<int>(transform.rows());
  std::vector<long long> c(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(i)] += transform(i, j) * x[static_cast<std::size_t>(j)];
  }
  return c;
}

// Euclidean enumeration radius^2 covering the sup-norm cube of radius r.
Real covering_bound2(int n, Real r) {
  return static_cast<Real>(n) * r * r * (1.0L + 1e-6L) + 1e-24L;
}

}  // namespace

LllResult lll_reduce(const LatticeBasis& basis, Real delta) {
  check_dim(basis);
  const int n = basis.dim();
  RealMatrix b = basis.columns;
  IntMatrix u = IntMatrix::Identity(n, n);
  GramSchmidt gs = gram_schmidt(b);
  int k = 1;
  int guard = 0;
  while (k < n) {
    if (++guard > 100000) throw ComputationError("LLL did not terminate");
    for (int j = k - 1; j >= 0; --j) {
      const Real q = std::round(gs.mu(k, j));
      if (q == 0) continue;
      const long long qi = static_cast<long long>(q);
      b.col(k) -= q * b.col(j);
      u.col(k) -= qi * u.col(j);
      for (int i = 0; i < j; ++i) gs.mu(k, i) -= q * gs.mu(j, i);
      gs.mu(k, j) -= q;
    }
    const Real mu = gs.mu(k, k - 1);
    if (gs.norms2[static_cast<std::size_t>(k)] >= (delta - mu * mu) * gs.norms2[static_cast<std::size_t>(k - 1)]) {
      ++k;
    } else {
      b.col(k).swap(b.col(k - 1));
      u.col(k).swap(u.col(k - 1));
      gs = gram_schmidt(b);
      k = std::max(k - 1, 1);
    }
  }
  return {LatticeBasis{b}, u};
}

bool is_lll_reduced(const LatticeBasis& basis, Real delta, Real tol) {
  const GramSchmidt gs = gram_schmidt(basis.columns);
  const int n = basis.dim();
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (std::fabs(gs.mu(i, j)) > 0.5L + tol) return false;
    }
    const Real mu = gs.mu(i, i - 1);
    const Real lhs = gs.norms2[static_cast<std::size_t>(i)];
    const Real rhs = (delta - mu * mu) * gs.norms2[static_cast<std::size_t>(i - 1)];
    if (lhs < rhs * (1.0L - tol)) return false;
  }
  return true;
}

ShortestVector shortest_sup(const LatticeBasis& basis) {
  check_dim(basis);
  const LllResult lll = lll_reduce(basis);
  const GramSchmidt gs = gram_schmidt(lll.reduced.columns);
  const int n = basis.dim();

  auto sup_of = [&](const std::vector<long long>& x) {
    return sup_norm(basis.vector_for(to_input_coeffs(lll.transform, x)));
  };

  Real best = std::numeric_limits<Real>::infinity();
  for (int j = 0; j < n; ++j) {
    std::vector<long long> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(j)] = 1;
    best = std::min(best, sup_of(e));
  }
  Real bound2 = covering_bound2(n, best);
  enumerate(gs, &bound2, [&](const std::vector<long long>& x) {
    const Real s = sup_of(x);
    if (s < best) {
      best = s;
      bound2 = covering_bound2(n, best);
    }
  });

  // Second pass collects every vector tied with the minimum.
  const Real tie = best * (1.0L + 1e-12L);
  std::vector<long long> chosen;
  Real chosen_sup = best;
  enumerate(gs, &bound2, [&](const std::vector<long long>& x) {
    std::vector<long long> c = to_input_coeffs(lll.transform, x);
    const Real s = sup_norm(basis.vector_for(c));
    if (s > tie) return;
    const auto first = std::find_if(c.begin(), c.end(), [](long long v) { return v != 0; });
    if (*first < 0) {
      for (auto& v : c) v = -v;
    }
    if (chosen.empty() || c > chosen) {
      chosen = c;
      chosen_sup = s;
    }
  });
  if (chosen.empty()) throw ComputationError("shortest vector enumeration lost the minimizer");
  return {chosen_sup, chosen};
}

long long siegel_count(const LatticeBasis& basis, Real radius) {
  check_dim(basis);
  if (!(radius > 0)) throw ValidationError("count radius must be positive");
  const LllResult lll = lll_reduce(basis);
  const GramSchmidt gs = gram_schmidt(lll.reduced.columns);
  const Real bound2 = covering_bound2(basis.dim(), radius);
  long long count = 0;
  enumerate(gs, &bound2, [&](const std::vector<long long>& x) {
    if (sup_norm(basis.vector_for(to_input_coeffs(lll.transform, x))) <= radius) ++count;
  });
  return count;
}

}  // namespace schubstab
