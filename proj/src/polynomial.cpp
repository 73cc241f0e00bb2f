#include "schubstab/polynomial.hpp"

#include <algorithm>
#include <utility>

namespace schubstab {

Polynomial::Polynomial(Rational constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(Rational c, int degree) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree + 1));
  coeffs.back() = std::move(c);
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(degree)];
}

Rational Polynomial::eval(const Rational& s) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
  return acc;
}

long double Polynomial::eval(long double s) const {
  long double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + to_long_double(*it);
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long long>(i);
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial Polynomial::exact_div(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw ComputationError("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd) {
    if (!is_zero()) throw ComputationError("inexact polynomial division");
    return {};
  }
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1));
  const Rational& lead = divisor.coeffs_.back();
  for (int k = degree() - dd; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + dd)] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= q * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  if (std::any_of(rem.begin(), rem.end(), [](const Rational& r) { return r != 0; })) {
    throw ComputationError("inexact polynomial division");
  }
  return Polynomial(std::move(quot));
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (k == 0 || !unit) out += to_string(mag);
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

PolyMatrix::PolyMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
  if (rows < 0 || cols < 0) throw ValidationError("matrix dimensions must be non-negative");
}

PolyMatrix PolyMatrix::identity(int n) {
  PolyMatrix out(n, n);
  for (int i = 0; i < n; ++i) out(i, i) = Polynomial(1);
  return out;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw ValidationError("matrix product: dimension mismatch");
  PolyMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Polynomial& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (!o(k, j).is_zero()) out(i, j) += a * o(k, j);
      }
    }
  }
  return out;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("matrix sum: dimension mismatch");
  PolyMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("matrix difference: dimension mismatch");
  PolyMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

PolyMatrix PolyMatrix::scaled(const Rational& c) const {
  PolyMatrix out = *this;
  for (auto& p : out.data_) p *= Polynomial(c);
  return out;
}

PolyMatrix PolyMatrix::derivative() const {
  PolyMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i].derivative();
  return out;
}

PolyMatrix PolyMatrix::from_rows(const std::vector<std::vector<Polynomial>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  PolyMatrix out(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c) {
      throw ValidationError("ragged matrix rows");
    }
    for (int j = 0; j < c; ++j) out(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return out;
}

std::vector<std::vector<Rational>> PolyMatrix::eval(const Rational& s) const {
  std::vector<std::vector<Rational>> out(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out[static_cast<std::size_t>(i)].push_back((*this)(i, j).eval(s));
  }
  return out;
}

std::vector<std::vector<long double>> PolyMatrix::eval(long double s) const {
  std::vector<std::vector<long double>> out(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out[static_cast<std::size_t>(i)].push_back((*this)(i, j).eval(s));
  }
  return out;
}

namespace {

// Fraction-free elimination on a copy; returns the rank and, for square
// full-rank input, the determinant in `det`.
int bareiss(PolyMatrix a, Polynomial* det) {
  const int rows = a.rows();
  const int cols = a.cols();
  Polynomial prev(1);
  int sign = 1;
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int pivot = r;
    while (pivot < rows && a(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (int j = 0; j < cols; ++j) std::swap(a(pivot, j), a(r, j));
      sign = -sign;
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        a(i, j) = (a(r, col) * a(i, j) - a(i, col) * a(r, j)).exact_div(prev);
      }
      a(i, col) = Polynomial();
    }
    prev = a(r, col);
    ++r;
  }
  if (det != nullptr) {
    if (rows != cols) throw ValidationError("determinant of a non-square matrix");
    *det = r < rows ? Polynomial() : (sign < 0 ? -prev : prev);
  }
  return r;
}

}  // namespace

Polynomial determinant(const PolyMatrix& a) {
  if (a.rows() == 0) return Polynomial(1);
  Polynomial det;
  bareiss(a, &det);
  return det;
}

int rank(const PolyMatrix& a) { return bareiss(a, nullptr); }

PolyMatrix adjugate(const PolyMatrix& a) {
  const int n = a.rows();
  if (n != a.cols()) throw ValidationError("adjugate of a non-square matrix");
  PolyMatrix out(n, n);
  if (n == 1) {
    out(0, 0) = Polynomial(1);
    return out;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      PolyMatrix minor(n - 1, n - 1);
      for (int r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = a(r, c);
        }
        ++mr;
      }
      Polynomial cof = determinant(minor);
      out(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  }
  return out;
}

}  // namespace schubstab
