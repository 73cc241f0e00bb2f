#pragma once

// Unimodular lattices a(t) u_φ(s) Z^{m+n} in long double precision: LLL
// reduction, exact sup-norm shortest vectors and sup-norm point counts by
// Fincke-Pohst enumeration over the reduced basis.

#include "schubstab/curves.hpp"

#include <Eigen/Dense>

#include <vector>

namespace schubstab {

using Real = long double;
using RealMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

inline constexpr int kMaxLatticeDim = 8;
/// Cap on enumeration tree nodes per call; exceeding it is a ComputationError.
inline constexpr long long kEnumerationBudget = 50'000'000;

/// Lattice spanned by the columns of a full-rank square matrix.
struct LatticeBasis {
  RealMatrix columns;

  int dim() const { return static_cast<int>(columns.cols()); }
  /// B c for an integer coefficient vector.
  std::vector<Real> vector_for(const std::vector<long long>& coeffs) const;
};

Real sup_norm(const std::vector<Real>& v);

/// Columns of diag(t^n I_m, t^{-m} I_n) [[I_m, φ(s)], [0, I_n]].
LatticeBasis translated_basis(const PolynomialMatrixCurve& curve, const Rational& s, Real t);

struct LllResult {
  LatticeBasis reduced;
  IntMatrix transform;  // reduced = input * transform, det(transform) = ±1
};

LllResult lll_reduce(const LatticeBasis& basis, Real delta = 0.99L);

/// Size reduction |μ_ij| <= 1/2 (+tol) and the Lovász condition for `delta`.
bool is_lll_reduced(const LatticeBasis& basis, Real delta = 0.99L, Real tol = 1e-9L);

struct ShortestVector {
  Real delta_sup = 0;
  std::vector<long long> coeffs;  // w.r.t. the input basis
};

/// Exact minimizer of ||B c||_∞ over nonzero integer c. Ties are broken by
/// normalizing the sign (first nonzero coefficient positive) and taking the
/// lexicographically greatest coefficient vector.
ShortestVector shortest_sup(const LatticeBasis& basis);

/// Number of nonzero lattice vectors with sup norm <= R.
long long siegel_count(const LatticeBasis& basis, Real radius);

}  // namespace schubstab
