#pragma once

// Independent brute-force oracles shared by the unit and acceptance tests.

#include "schubstab/kempf.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <random>

namespace schubstab::oracle {

// Calls f on every nontrivial sum-zero integer vector in [-b, b]^N.
inline void for_each_cocharacter(int N, int b, const std::function<void(const IntVector&)>& f) {
  IntVector d(static_cast<std::size_t>(N));
  std::function<void(int, long long)> rec = [&](int pos, long long sum) {
    if (pos == N - 1) {
      const long long last = -sum;
      if (last < -b || last > b) return;
      d[static_cast<std::size_t>(pos)] = last;
      if (std::any_of(d.begin(), d.end(), [](long long x) { return x != 0; })) f(d);
      return;
    }
    for (long long x = -b; x <= b; ++x) {
      d[static_cast<std::size_t>(pos)] = x;
      rec(pos + 1, sum + x);
    }
  };
  rec(0, 0);
}

// Solves A x = rhs exactly for a tall system; nullopt when inconsistent or
// when the solution is not unique.
inline std::optional<std::vector<Rational>> solve_tall(std::vector<std::vector<Rational>> a, std::vector<Rational> rhs) {
  const std::size_t rows = a.size();
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) return std::nullopt;  // free column
    std::swap(a[p], a[r]);
    std::swap(rhs[p], rhs[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivots.push_back(c);
    ++r;
  }
  if (pivots.size() != cols) return std::nullopt;
  for (std::size_t i = r; i < rows; ++i) {
    if (rhs[i] != 0) return std::nullopt;
  }
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < cols; ++i) x[i] = rhs[i] / a[i][i];
  return x;
}

// Origin in the convex hull of the weights projected to the sum-zero
// hyperplane, by Carathéodory: some affinely independent subset carries 0
// with non-negative barycentric coordinates.
inline bool origin_in_hull(const WeightedVector& v) {
  const int N = v.dim();
  std::vector<std::vector<Rational>> pts;
  for (const auto& chi : v.weights()) {
    const long long s = std::accumulate(chi.begin(), chi.end(), 0LL);
    std::vector<Rational> p;
    for (long long x : chi) p.emplace_back(Rational(x) - Rational(s, N));
    pts.push_back(p);
  }
  const std::size_t k = pts.size();
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size > N) continue;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (1u << i)) idx.push_back(i);
    }
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(N) + 1, std::vector<Rational>(idx.size()));
    std::vector<Rational> rhs(static_cast<std::size_t>(N) + 1, Rational(0));
    for (std::size_t j = 0; j < idx.size(); ++j) {
      for (int i = 0; i < N; ++i) a[static_cast<std::size_t>(i)][j] = pts[idx[j]][static_cast<std::size_t>(i)];
      a[static_cast<std::size_t>(N)][j] = 1;
    }
    rhs[static_cast<std::size_t>(N)] = 1;
    const auto lambda = solve_tall(a, rhs);
    if (lambda && std::all_of(lambda->begin(), lambda->end(), [](const Rational& x) { return x >= 0; })) return true;
  }
  return false;
}

inline std::vector<IntVector> wedge_weights(int N, int k) {
  std::vector<IntVector> out;
  for (unsigned mask = 0; mask < (1u << N); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    IntVector w(static_cast<std::size_t>(N), 0);
    for (int i = 0; i < N; ++i) w[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
    out.push_back(w);
  }
  return out;
}

inline WeightedVector random_wedge_vector(std::mt19937& rng, int N, int k) {
  auto all = wedge_weights(N, k);
  std::shuffle(all.begin(), all.end(), rng);
  std::uniform_int_distribution<std::size_t> count(1, std::min<std::size_t>(all.size(), 5));
  all.resize(count(rng));
  return WeightedVector(N, all);
}

}  // namespace schubstab::oracle
