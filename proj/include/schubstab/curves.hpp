#pragma once

// Polynomial matrix curves s -> φ(s) on a rational interval, the subspaces
// V_φ(s) spanned by the rows of [I | φ(s)], and the leading nilpotent
// direction of Ad a(t) log(φ(s+ξ) φ(s)^{-1}) at the critical rescaling
// ξ = t^{-κ}.

#include "schubstab/polynomial.hpp"

#include <string>
#include <utility>
#include <vector>

namespace schubstab {

class PolynomialMatrixCurve {
 public:
  PolynomialMatrixCurve(PolyMatrix entries, Rational a, Rational b);

  int rows() const { return entries_.rows(); }
  int cols() const { return entries_.cols(); }
  const PolyMatrix& entries() const { return entries_; }
  const Rational& lower() const { return a_; }
  const Rational& upper() const { return b_; }
  bool contains(const Rational& s) const { return a_ <= s && s <= b_; }

  friend bool operator==(const PolynomialMatrixCurve&, const PolynomialMatrixCurve&) = default;

 private:
  PolyMatrix entries_;
  Rational a_;
  Rational b_;
};

/// [[I_m, Ψ], [0, I_n]].
PolyMatrix unipotent_embed(const PolyMatrix& psi);

/// Maximal minors of [I_m | φ(s)] in lexicographic column-set order.
std::vector<Polynomial> plucker_coords(const PolynomialMatrixCurve& curve);
std::vector<std::vector<int>> plucker_index_sets(int m, int N);

/// dim(V_φ(s) ∩ W) >= r identically in s, with W spanned by `w_basis`.
bool pencil_membership(const PolynomialMatrixCurve& curve,
                       const std::vector<std::vector<Rational>>& w_basis, int r);

struct LeadingDirection {
  Rational kappa;             // critical exponent κ = max_i m_i / i
  PolyMatrix y;               // Y(s) = Σ_{i: m_i/i = κ} ψ_{i, m_i}(s)
  std::vector<int> leading;   // indices i attaining κ
  std::vector<int> top_weights;  // m_i for i = 1..K (INT_MIN when ψ_i ≡ 0)
  int truncation = 0;         // K
  Rational decay_exponent;    // residual ~ t^{-decay_exponent}
};

/// Coefficients ψ_1..ψ_K of Ψ(s, ξ) = log(φ(s+ξ) φ(s)^{-1}) = Σ ξ^i ψ_i(s).
/// Index 0 of the result is the zero matrix.
std::vector<PolyMatrix> log_series(const PolyMatrix& g_curve, int order);

/// Throws ValidationError for non-unimodular input, when no positive weight
/// occurs (trivial projection), or when K violates max_weight < κ K.
LeadingDirection leading_direction(const PolyMatrix& g_curve, const std::vector<long long>& a_exponents,
                                   int truncation);

/// Smallest K >= 1 satisfying the stopping rule, searching up to `max_order`.
LeadingDirection leading_direction_auto(const PolyMatrix& g_curve,
                                        const std::vector<long long>& a_exponents, int max_order = 64);

/// Max over samples of ||Ad a(t) Ψ(s, t^{-κ}) - Y(s)||_∞ in long double.
long double verify_leading_convergence(const LeadingDirection& ld, const PolyMatrix& g_curve,
                                       const std::vector<long long>& a_exponents,
                                       const std::vector<long double>& t_samples,
                                       const std::vector<long double>& s_samples);

/// Y^N == 0 as a polynomial identity.
bool is_nilpotent(const PolyMatrix& y);

}  // namespace schubstab
