#pragma once

// Univariate polynomials in s with exact rational coefficients, and dense
// matrices of them.

#include "schubstab/rational.hpp"

#include <string>
#include <vector>

namespace schubstab {

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Rational constant);  // NOLINT: implicit from scalars is intended
  Polynomial(int constant) : Polynomial(Rational(constant)) {}  // NOLINT
  explicit Polynomial(std::vector<Rational> coeffs);

  /// c * s^degree
  static Polynomial monomial(Rational c, int degree);

  /// Coefficient list, index = degree; empty for the zero polynomial.
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int degree) const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }

  Rational eval(const Rational& s) const;
  long double eval(long double s) const;

  Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  Polynomial operator-() const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Exact quotient; throws ComputationError when the division leaves a remainder.
  Polynomial exact_div(const Polynomial& divisor) const;

  /// Human-readable form such as "2*s^2 - 1/3*s + 1".
  std::string str(const std::string& var = "s") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols);

  static PolyMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Polynomial& operator()(int i, int j) { return data_[index(i, j)]; }
  const Polynomial& operator()(int i, int j) const { return data_[index(i, j)]; }

  bool is_zero() const;
  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  PolyMatrix scaled(const Rational& c) const;
  PolyMatrix derivative() const;
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

  /// Rows are stacked; every row must have the same column count.
  static PolyMatrix from_rows(const std::vector<std::vector<Polynomial>>& rows);

  std::vector<std::vector<Rational>> eval(const Rational& s) const;
  std::vector<std::vector<long double>> eval(long double s) const;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Polynomial> data_;
};

/// Determinant by fraction-free (Bareiss) elimination.
Polynomial determinant(const PolyMatrix& a);

/// Rank over the field of rational functions Q(s), fraction-free elimination.
int rank(const PolyMatrix& a);

/// Adjugate via cofactors; equals the inverse when det == 1.
PolyMatrix adjugate(const PolyMatrix& a);

}  // namespace schubstab
