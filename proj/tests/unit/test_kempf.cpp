#include "schubstab/kempf.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

using namespace schubstab;
using namespace schubstab::oracle;

namespace {

// Checks the returned optimum against exhaustive search over [-b, b]^N.
void check_against_oracle(const WeightedVector& v, int b) {
  const DestabilizerResult res = optimal_destabilizer(v);
  const bool semistable = origin_in_hull(v);
  CHECK((res.status == KempfStatus::Semistable) == semistable);

  bool attained = false;
  for_each_cocharacter(v.dim(), b, [&](const IntVector& d) {
    const long long m = numerical_m(v, d);
    if (semistable) {
      CHECK(m >= 0);
      return;
    }
    const int cmp = compare_ratio(m, killing_norm_squared(d), *res.b_value);
    CHECK(cmp >= 0);
    if (cmp == 0) attained = true;
  });
  if (!semistable) {
    REQUIRE(res.delta_star);
    const IntVector& ds = *res.delta_star;
    CHECK(certificate_holds(v, ds, *res.b_value));
    CHECK(res.b_value->sign < 0);
    long long g = 0;
    for (long long x : ds) g = std::gcd(g, x < 0 ? -x : x);
    CHECK(g == 1);
    const bool fits = std::all_of(ds.begin(), ds.end(), [&](long long x) { return x >= -b && x <= b; });
    if (fits) CHECK(attained);
  }
}

}  // namespace

TEST_CASE("weighted vector validation") {
  CHECK_THROWS_AS(WeightedVector(4, {}), ValidationError);
  CHECK_THROWS_AS(WeightedVector(4, {{1, 0, 0, 1}, {1, 0, 0, 1}}), ValidationError);
  CHECK_THROWS_AS(WeightedVector(4, {{1, 0, 0}}), ValidationError);
  CHECK_THROWS_AS(WeightedVector(1, {{1}}), ValidationError);
}

TEST_CASE("pairing and norms") {
  CHECK(pairing({1, 0, 0, 1}, {-1, 1, 1, -1}) == -2);
  CHECK(pairing({5, -2, 7, 1}, {0, 0, 0, 0}) == 0);
  CHECK(pairing({0, 0, 1, 1}, {2, 2, -2, -2}) == -4);
  CHECK_THROWS_AS(pairing({1, 0, 0}, {1, -1}), ValidationError);
  CHECK_THROWS_AS(pairing({1, 0}, {1, 1}), ValidationError);

  CHECK(killing_norm({1, -1}) == doctest::Approx(2.0));
  CHECK(killing_norm({0, 0, 0}) == 0.0L);
  CHECK(killing_norm({-1, 1, 1, -1}) == doctest::Approx(4.0));
  CHECK(killing_norm_squared({-1, 1, 1, -1}) == 16);
}

TEST_CASE("numerical_m") {
  CHECK(numerical_m(WeightedVector(4, {{1, 0, 0, 1}}), {-1, 1, 1, -1}) == -2);
  CHECK(numerical_m(WeightedVector(4, {{1, 0, 0, 1}, {0, 1, 1, 0}}), {0, 0, 0, 0}) == 0);
  CHECK(numerical_m(WeightedVector(4, {{1, 1, 0, 0}, {0, 0, 1, 1}}), {1, 1, -1, -1}) == 2);
}

TEST_CASE("optimal destabilizer fixtures") {
  const auto e14 = optimal_destabilizer(WeightedVector(4, {{1, 0, 0, 1}}));
  CHECK(e14.status == KempfStatus::Unstable);
  REQUIRE(e14.b_value);
  CHECK(e14.b_value->exact() == Rational(-1, 2));
  CHECK(e14.b_value->str() == "-1/2");
  CHECK(*e14.delta_star == IntVector{-1, 1, 1, -1});

  const auto semi = optimal_destabilizer(WeightedVector(4, {{1, 0, 1, 0}, {0, 1, 0, 1}}));
  CHECK(semi.status == KempfStatus::Semistable);
  CHECK_FALSE(semi.b_value);
  CHECK_FALSE(semi.delta_star);

  const auto e12 = optimal_destabilizer(WeightedVector(4, {{1, 1, 0, 0}}));
  CHECK(e12.status == KempfStatus::Unstable);
  CHECK(e12.b_value->exact() == Rational(-1, 2));
  CHECK(*e12.delta_star == IntVector{-1, -1, 1, 1});

  check_against_oracle(WeightedVector(4, {{1, 0, 0, 1}}), 3);
  check_against_oracle(WeightedVector(4, {{1, 1, 0, 0}}), 3);
}

TEST_CASE("irrational optimum is reported as a decimal") {
  // Nearest point (1/3,1/3,-1/3,-1/3)... norms that are not perfect squares.
  const auto res = optimal_destabilizer(WeightedVector(3, {{1, 0, 0}}));
  REQUIRE(res.b_value);
  // p* = (2/3,-1/3,-1/3), |p*|^2 = 2/3, B = -sqrt(2/3)/sqrt(3) = -sqrt(2)/3.
  CHECK(res.b_value->square == Rational(2, 9));
  CHECK_FALSE(res.b_value->exact());
  CHECK(res.b_value->str() == "-0.471404520791");
  CHECK(*res.delta_star == IntVector{-2, 1, 1});
}

TEST_CASE("V minus membership") {
  CHECK(in_v_minus(WeightedVector(4, {{0, 0, 1, 1}}), {2, 2, -2, -2}));
  CHECK_FALSE(in_v_minus(WeightedVector(4, {{1, 1, 0, 0}}), {2, 2, -2, -2}));
  const WeightedVector flat(4, {{1, 0, 1, 0}, {0, 1, 0, 1}});
  CHECK(in_v_zero_minus(flat, {1, -1, 1, -1}) == false);
  CHECK(in_v_zero_minus(flat, {1, 1, -1, -1}));
  CHECK_FALSE(in_v_minus(flat, {1, 1, -1, -1}));
}

TEST_CASE("parse_weights") {
  CHECK(parse_weights("1,0,0,1;0,1,1,0") == std::vector<IntVector>{{1, 0, 0, 1}, {0, 1, 1, 0}});
  CHECK(parse_weights(" 1, 0 ;0,1 ") == std::vector<IntVector>{{1, 0}, {0, 1}});
  CHECK_THROWS_AS(parse_weights("1,x"), ValidationError);
  CHECK_THROWS_AS(parse_weights(""), ValidationError);
}

TEST_CASE("compare_ratio") {
  const SignedSqrt half{-1, Rational(1, 4)};
  CHECK(compare_ratio(-2, 16, half) == 0);
  CHECK(compare_ratio(-3, 16, half) < 0);
  CHECK(compare_ratio(-1, 16, half) > 0);
  CHECK(compare_ratio(0, 16, half) > 0);
  CHECK(compare_ratio(1, 16, SignedSqrt{1, Rational(1, 4)}) < 0);
}

TEST_CASE("wedge corpus against brute force") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 12; ++trial) {
    const int N = trial % 2 == 0 ? 4 : 5;
    const int k = 1 + trial % (N - 1);
    const WeightedVector v = random_wedge_vector(rng, N, k);
    CAPTURE(trial);
    check_against_oracle(v, N == 4 ? 6 : 4);
  }
}

TEST_CASE("random weights against brute force") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> entry(-2, 2);
  std::uniform_int_distribution<int> count(1, 4);
  for (int trial = 0; trial < 15; ++trial) {
    const int N = 3 + trial % 2;
    std::vector<IntVector> ws;
    const int c = count(rng);
    while (static_cast<int>(ws.size()) < c) {
      IntVector w(static_cast<std::size_t>(N));
      for (auto& x : w) x = entry(rng);
      if (std::find(ws.begin(), ws.end(), w) == ws.end()) ws.push_back(w);
    }
    CAPTURE(trial);
    check_against_oracle(WeightedVector(N, ws), N == 3 ? 8 : 5);
  }
}
