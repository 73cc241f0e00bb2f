#include "schubstab/kempf.hpp"

#include "schubstab/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace schubstab {

WeightedVector::WeightedVector(int dim, std::vector<IntVector> weights)
    : dim_(dim), weights_(std::move(weights)) {
  if (dim < 2) throw ValidationError("weight dimension must be ≥ 2");
  if (weights_.empty()) throw ValidationError("active weight set must be non-empty");
  std::set<IntVector> seen;
  for (const auto& w : weights_) {
    if (static_cast<int>(w.size()) != dim) {
      throw ValidationError("every weight must have exactly " + std::to_string(dim) + " entries");
    }
    if (!seen.insert(w).second) throw ValidationError("duplicate weight in active set");
  }
}

std::optional<Rational> SignedSqrt::exact() const {
  Rational root;
  if (!exact_sqrt(square, root)) return std::nullopt;
  return sign < 0 ? Rational(-root) : root;
}

long double SignedSqrt::approx() const {
  return static_cast<long double>(sign) * std::sqrt(to_long_double(square));
}

std::string SignedSqrt::str() const {
  if (auto q = exact()) return to_string(*q);
  return format_decimal(approx(), 12);
}

int compare_ratio(long long numerator, const BigInt& norm_square, const SignedSqrt& s) {
  const int lhs_sign = (numerator > 0) - (numerator < 0);
  if (lhs_sign != s.sign) return lhs_sign < s.sign ? -1 : 1;
  if (lhs_sign == 0) return 0;
  // Same sign: compare squares, flipping for negatives.
  const Rational lhs_square(BigInt(numerator) * numerator, norm_square);
  const int mag = lhs_square < s.square ? -1 : (lhs_square > s.square ? 1 : 0);
  return lhs_sign > 0 ? mag : -mag;
}

std::string to_string(KempfStatus s) {
  return s == KempfStatus::Unstable ? "UNSTABLE" : "SEMISTABLE";
}

namespace {

void require_sum_zero(const IntVector& delta) {
  if (std::accumulate(delta.begin(), delta.end(), 0LL) != 0) {
    throw ValidationError("cocharacter entries must sum to zero");
  }
}

}  // namespace

long long pairing(const IntVector& chi, const IntVector& delta) {
  if (chi.size() != delta.size()) throw ValidationError("pairing: dimension mismatch");
  require_sum_zero(delta);
  long long total = 0;
  for (std::size_t i = 0; i < chi.size(); ++i) total += chi[i] * delta[i];
  return total;
}

BigInt killing_norm_squared(const IntVector& delta) {
  BigInt total = 0;
  for (long long x : delta) total += BigInt(x) * x;
  return total * static_cast<long long>(delta.size());
}

long double killing_norm(const IntVector& delta) {
  return std::sqrt(killing_norm_squared(delta).convert_to<long double>());
}

long long numerical_m(const WeightedVector& v, const IntVector& delta) {
  std::optional<long long> best;
  for (const auto& chi : v.weights()) {
    const long long value = pairing(chi, delta);
    if (!best || value > *best) best = value;
  }
  return *best;
}

namespace detail {

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += a[i] * b[i];
  return total;
}

// Minimum-norm point of the affine hull of the selected points. Returns the
// barycentric coefficients, or nullopt for an affinely dependent selection.
std::optional<std::vector<Rational>> affine_min_norm(const std::vector<std::vector<Rational>>& points,
                                                     const std::vector<std::size_t>& subset) {
  const std::size_t k = subset.size();
  RationalMatrix system(k + 1, std::vector<Rational>(k + 1));
  std::vector<Rational> rhs(k + 1);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) system[i][j] = dot(points[subset[i]], points[subset[j]]);
    system[i][k] = -1;
    system[k][i] = 1;
  }
  rhs[k] = 1;
  auto solution = solve_unique(std::move(system), std::move(rhs));
  if (!solution) return std::nullopt;
  solution->resize(k);
  return solution;
}

// Accepts the candidate when its coefficients are non-negative and every
// point lies on the far side of the supporting hyperplane through p.
std::optional<NearestPoint> try_support(const std::vector<std::vector<Rational>>& points,
                                        std::vector<std::size_t> subset) {
  auto lambda = affine_min_norm(points, subset);
  if (!lambda) return std::nullopt;
  for (const auto& l : *lambda) {
    if (l < 0) return std::nullopt;
  }
  const std::size_t dim = points.front().size();
  std::vector<Rational> p(dim);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t c = 0; c < dim; ++c) p[c] += (*lambda)[i] * points[subset[i]][c];
  }
  const Rational norm2 = dot(p, p);
  for (const auto& q : points) {
    if (dot(p, q) < norm2) return std::nullopt;
  }
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if ((*lambda)[i] > 0) support.push_back(subset[i]);
  }
  return NearestPoint{std::move(p), std::move(support)};
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::optional<std::vector<double>> solve_double(std::vector<std::vector<double>> a, std::vector<double> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
    }
    if (std::fabs(a[pivot][col]) < 1e-12) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

double dot_d(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

std::vector<std::size_t> wolfe_support(const std::vector<std::vector<double>>& points) {
  constexpr double kTol = 1e-10;
  const std::size_t dim = points.front().size();
  std::size_t start = 0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (dot_d(points[i], points[i]) < dot_d(points[start], points[start])) start = i;
  }
  std::vector<std::size_t> corral{start};
  std::vector<double> lambda{1.0};
  auto current = [&] {
    std::vector<double> x(dim, 0.0);
    for (std::size_t i = 0; i < corral.size(); ++i) {
      for (std::size_t c = 0; c < dim; ++c) x[c] += lambda[i] * points[corral[i]][c];
    }
    return x;
  };

  for (int major = 0; major < 200; ++major) {
    const std::vector<double> x = current();
    const double xx = dot_d(x, x);
    std::size_t j = 0;
    for (std::size_t i = 1; i < points.size(); ++i) {
      if (dot_d(x, points[i]) < dot_d(x, points[j])) j = i;
    }
    if (dot_d(x, points[j]) >= xx - kTol * (1.0 + xx)) break;
    if (std::find(corral.begin(), corral.end(), j) != corral.end()) break;
    corral.push_back(j);
    lambda.push_back(0.0);

    for (int minor = 0; minor < 200; ++minor) {
      const std::size_t k = corral.size();
      std::vector<std::vector<double>> sys(k + 1, std::vector<double>(k + 1, 0.0));
      std::vector<double> rhs(k + 1, 0.0);
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) sys[a][b] = dot_d(points[corral[a]], points[corral[b]]);
        sys[a][k] = -1.0;
        sys[k][a] = 1.0;
      }
      rhs[k] = 1.0;
      auto alpha = solve_double(sys, rhs);
      if (!alpha) return {};
      alpha->resize(k);
      if (std::all_of(alpha->begin(), alpha->end(), [](double v) { return v > kTol; })) {
        lambda = *alpha;
        break;
      }
      double theta = 1.0;
      for (std::size_t i = 0; i < k; ++i) {
        if ((*alpha)[i] <= kTol) {
          const double denom = lambda[i] - (*alpha)[i];
          if (denom > 0) theta = std::min(theta, lambda[i] / denom);
        }
      }
      for (std::size_t i = 0; i < k; ++i) lambda[i] = theta * (*alpha)[i] + (1.0 - theta) * lambda[i];
      std::vector<std::size_t> kept;
      std::vector<double> kept_lambda;
      for (std::size_t i = 0; i < k; ++i) {
        if (lambda[i] > kTol) {
          kept.push_back(corral[i]);
          kept_lambda.push_back(lambda[i]);
        }
      }
      if (kept.empty()) return {};
      corral = std::move(kept);
      lambda = std::move(kept_lambda);
      const double total = std::accumulate(lambda.begin(), lambda.end(), 0.0);
      for (auto& l : lambda) l /= total;
    }
  }
  std::sort(corral.begin(), corral.end());
  return corral;
}

NearestPoint nearest_point_exact(const std::vector<std::vector<Rational>>& points) {
  if (points.empty()) throw ValidationError("nearest point of an empty set");
  std::vector<std::vector<double>> approx;
  approx.reserve(points.size());
  for (const auto& p : points) {
    std::vector<double> row;
    for (const auto& c : p) row.push_back(static_cast<double>(to_long_double(c)));
    approx.push_back(std::move(row));
  }
  // The floating corral is only a guess; it is accepted after exact verification.
  if (auto guess = wolfe_support(approx); !guess.empty()) {
    if (auto hit = try_support(points, guess)) return *hit;
  }

  const std::size_t limit = std::min(points.size(), points.front().size() + 1);
  for (std::size_t k = 1; k <= limit; ++k) {
    std::vector<std::size_t> subset(k);
    std::iota(subset.begin(), subset.end(), 0);
    do {
      if (auto hit = try_support(points, subset)) return *hit;
    } while (next_combination(subset, points.size()));
  }
  throw ComputationError("nearest point search found no optimal face");
}

}  // namespace detail

DestabilizerResult optimal_destabilizer(const WeightedVector& v) {
  const long long N = v.dim();
  // Scaled projection N*χ - (Σχ)·1 keeps everything integral.
  std::vector<std::vector<Rational>> projected;
  projected.reserve(v.weights().size());
  for (const auto& chi : v.weights()) {
    const long long total = std::accumulate(chi.begin(), chi.end(), 0LL);
    std::vector<Rational> row;
    row.reserve(chi.size());
    for (long long x : chi) row.emplace_back(N * x - total);
    projected.push_back(std::move(row));
  }
  auto nearest = detail::nearest_point_exact(projected);

  DestabilizerResult result;
  result.support = nearest.support;
  result.nearest_point.reserve(nearest.point.size());
  for (const auto& c : nearest.point) result.nearest_point.push_back(c / N);

  Rational norm2 = 0;
  for (const auto& c : nearest.point) norm2 += c * c;
  if (norm2 == 0) return result;

  // B_v^2 = |p*|^2 / N with p* = point / N.
  result.status = KempfStatus::Unstable;
  result.b_value = SignedSqrt{-1, norm2 / Rational(N * N * N)};

  BigInt den_lcm = 1;
  for (const auto& c : nearest.point) den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
  std::vector<BigInt> scaled;
  for (const auto& c : nearest.point) scaled.push_back(-numerator(c) * (den_lcm / denominator(c)));
  const BigInt g = gcd_of(scaled);
  IntVector delta;
  for (const auto& x : scaled) delta.push_back((x / g).convert_to<long long>());
  result.delta_star = delta;

  if (!certificate_holds(v, delta, *result.b_value)) {
    throw ComputationError("Kempf certificate identity failed");
  }
  return result;
}

bool certificate_holds(const WeightedVector& v, const IntVector& delta, const SignedSqrt& b) {
  return compare_ratio(numerical_m(v, delta), killing_norm_squared(delta), b) == 0;
}

bool in_v_minus(const WeightedVector& v, const IntVector& a) {
  return std::all_of(v.weights().begin(), v.weights().end(),
                     [&](const IntVector& chi) { return pairing(chi, a) < 0; });
}

bool in_v_zero_minus(const WeightedVector& v, const IntVector& a) {
  return std::all_of(v.weights().begin(), v.weights().end(),
                     [&](const IntVector& chi) { return pairing(chi, a) <= 0; });
}

std::vector<IntVector> parse_weights(const std::string& text) {
  std::vector<IntVector> out;
  std::stringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ';')) {
    IntVector w;
    std::stringstream items(group);
    std::string item;
    while (std::getline(items, item, ',')) {
      try {
        std::size_t used = 0;
        w.push_back(std::stoll(item, &used));
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw ValidationError("malformed weight entry '" + item + "'");
      }
    }
    if (!w.empty()) out.push_back(std::move(w));
  }
  if (out.empty()) throw ValidationError("no weights given");
  return out;
}

}  // namespace schubstab
