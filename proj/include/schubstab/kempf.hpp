#pragma once

// Kempf's instability optimization restricted to the diagonal torus of SL_N.
//
// For a vector v with active weights χ (characters with v_χ != 0) the
// numerical function is m(v, δ) = max_χ <χ, δ>, and the Killing length of a
// sum-zero cocharacter is ||δ|| = sqrt(N Σ δ_i^2). The minimum of m/||δ|| is
// -dist(0, hull)/sqrt(N), where hull is the convex hull of the weights
// projected to the sum-zero hyperplane; the minimizing direction is the
// negated nearest point.

#include "schubstab/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace schubstab {

using IntVector = std::vector<long long>;

class WeightedVector {
 public:
  WeightedVector(int dim, std::vector<IntVector> weights);

  int dim() const { return dim_; }
  const std::vector<IntVector>& weights() const { return weights_; }

 private:
  int dim_;
  std::vector<IntVector> weights_;
};

/// A real number sign * sqrt(square) with `square` an exact rational.
struct SignedSqrt {
  int sign = 0;
  Rational square;

  std::optional<Rational> exact() const;
  long double approx() const;
  /// Exact rational when representable, else 12-digit decimal.
  std::string str() const;

  friend bool operator==(const SignedSqrt&, const SignedSqrt&) = default;
};

/// Exact three-way comparison of a / sqrt(b) against s (b > 0).
int compare_ratio(long long numerator, const BigInt& norm_square, const SignedSqrt& s);

enum class KempfStatus { Semistable, Unstable };
std::string to_string(KempfStatus s);

struct DestabilizerResult {
  KempfStatus status = KempfStatus::Semistable;
  std::optional<SignedSqrt> b_value;   // B_v, present iff unstable
  std::optional<IntVector> delta_star;  // primitive, present iff unstable
  std::vector<Rational> nearest_point;  // projected nearest point p*
  std::vector<std::size_t> support;      // weights spanning the face containing p*
};

long long pairing(const IntVector& chi, const IntVector& delta);

/// sqrt(N Σ δ_i^2).
long double killing_norm(const IntVector& delta);
BigInt killing_norm_squared(const IntVector& delta);

long long numerical_m(const WeightedVector& v, const IntVector& delta);

DestabilizerResult optimal_destabilizer(const WeightedVector& v);

/// m(v, δ) / ||δ|| == b exactly.
bool certificate_holds(const WeightedVector& v, const IntVector& delta, const SignedSqrt& b);

bool in_v_minus(const WeightedVector& v, const IntVector& a);
bool in_v_zero_minus(const WeightedVector& v, const IntVector& a);

/// Parses "1,0,0,1;0,1,1,0" into weight tuples.
std::vector<IntVector> parse_weights(const std::string& text);

namespace detail {

/// Nearest point to the origin of conv(points), computed exactly. Points are
/// rational vectors of equal length. Returns the point and the indices of an
/// affinely independent support carrying it.
struct NearestPoint {
  std::vector<Rational> point;
  std::vector<std::size_t> support;
};
NearestPoint nearest_point_exact(const std::vector<std::vector<Rational>>& points);

/// Floating Wolfe iteration; returns the final corral (support indices).
std::vector<std::size_t> wolfe_support(const std::vector<std::vector<double>>& points);

}  // namespace detail

}  // namespace schubstab
