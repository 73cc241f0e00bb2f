#include "schubstab/rational.hpp"
#include "schubstab/stability.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace schubstab;

namespace {

GrassPermutation W(int m, int n, std::vector<int> idx) { return GrassPermutation(GrassSignature(m, n), std::move(idx)); }

Cocharacter C(std::vector<long long> v) { return Cocharacter(std::move(v)); }

// Random dominant sum-zero vector: sorted random integers, recentred by
// multiplying through by N.
Cocharacter random_dominant(std::mt19937& rng, int N, int spread) {
  std::uniform_int_distribution<int> dist(-spread, spread);
  std::vector<long long> v(static_cast<std::size_t>(N));
  long long sum = 0;
  for (auto& x : v) {
    x = dist(rng);
    sum += x;
  }
  for (auto& x : v) x = x * N - sum;
  std::sort(v.rbegin(), v.rend());
  return Cocharacter(v);
}

}  // namespace

TEST_CASE("cocharacter predicates") {
  CHECK(C({3, -1, -1, -1}).is_sum_zero());
  CHECK(C({3, -1, -1, -1}).is_dominant());
  CHECK_FALSE(C({-1, 3, -1, -1}).is_dominant());
  CHECK(C({0, 0}).is_trivial());
  CHECK(C({1, 1, -2}).joined() == "1;1;-2");
}

TEST_CASE("a_weight_vector") {
  CHECK(a_weight_vector(GrassSignature(2, 2)) == std::vector<long long>{2, 2, -2, -2});
  CHECK(a_weight_vector(GrassSignature(1, 1)) == std::vector<long long>{1, -1});
  CHECK(a_weight_vector(GrassSignature(2, 3)) == std::vector<long long>{3, 3, -2, -2, -2});
}

TEST_CASE("pairing_with_aw") {
  CHECK(pairing_with_aw(C({3, -1, -1, -1}), W(2, 2, {1, 4})) == 2);
  CHECK(pairing_with_aw(C({1, 1, 1, -3}), W(2, 2, {2, 3})) == 2);
  CHECK(pairing_with_aw(C({1, 1, -1, -1}), W(2, 2, {2, 4})) == 0);
  CHECK_THROWS_AS(pairing_with_aw(C({1, 0, 0, 0}), W(2, 2, {1, 4})), ValidationError);
  CHECK_THROWS_AS(pairing_with_aw(C({1, -1}), W(2, 2, {1, 4})), ValidationError);
}

TEST_CASE("extreme rays") {
  CHECK(extreme_ray(1, 4) == C({3, -1, -1, -1}));
  CHECK(extreme_ray(3, 4) == C({1, 1, 1, -3}));
  CHECK(extreme_ray(2, 4) == C({2, 2, -2, -2}));
  CHECK_THROWS_AS(extreme_ray(0, 4), ValidationError);
  CHECK_THROWS_AS(extreme_ray(4, 4), ValidationError);
  for (int N = 2; N <= 8; ++N) {
    for (int k = 1; k < N; ++k) {
      const auto r = extreme_ray(k, N);
      CHECK(r.is_sum_zero());
      CHECK(r.is_dominant());
      CHECK_FALSE(r.is_trivial());
    }
  }
}

TEST_CASE("classification on Gr(2,4)") {
  const auto c14 = classify_by_rays(W(2, 2, {1, 4}));
  CHECK(c14.cls == StabilityClass::Unstable);
  REQUIRE(c14.witness);
  CHECK(*c14.witness == C({3, -1, -1, -1}));
  CHECK(classify_by_rays(W(2, 2, {2, 4})).cls == StabilityClass::WeaklyUnstableOnly);
  const auto c34 = classify_by_rays(W(2, 2, {3, 4}));
  CHECK(c34.cls == StabilityClass::NotWeaklyUnstable);
  CHECK_FALSE(c34.witness);
  // All three rays pair negatively with (3,4).
  for (int k = 1; k <= 3; ++k) CHECK(pairing_with_aw(extreme_ray(k, 4), W(2, 2, {3, 4})) < 0);

  CHECK(classify_combinatorial(W(2, 2, {2, 3})) == StabilityClass::Unstable);
  CHECK(classify_combinatorial(W(2, 2, {2, 4})) == StabilityClass::WeaklyUnstableOnly);
  CHECK(classify_combinatorial(W(2, 2, {1, 2})) == StabilityClass::Unstable);

  CHECK(classify_brute_force(W(2, 2, {1, 4}), 4).cls == StabilityClass::Unstable);
  CHECK(classify_brute_force(W(2, 2, {2, 4}), 4).cls == StabilityClass::WeaklyUnstableOnly);
  CHECK(classify_brute_force(W(2, 2, {3, 4}), 4).cls == StabilityClass::NotWeaklyUnstable);
  CHECK(classify_brute_force(W(2, 2, {1, 2}), 6).cls == StabilityClass::Unstable);
  CHECK_THROWS_AS(classify_brute_force(W(2, 2, {1, 2}), 0), ValidationError);

  // The witnesses quoted for the worked example.
  CHECK(validate_certificate(W(2, 2, {1, 4}), {StabilityClass::Unstable, C({3, -1, -1, -1}), CertificateMethod::ExtremeRay}));
  CHECK(validate_certificate(W(2, 2, {2, 3}), {StabilityClass::Unstable, C({1, 1, 1, -3}), CertificateMethod::ExtremeRay}));
  CHECK(validate_certificate(W(2, 2, {2, 4}),
                             {StabilityClass::WeaklyUnstableOnly, C({1, 1, -1, -1}), CertificateMethod::ExtremeRay}));
}

TEST_CASE("validate_certificate rejects bad witnesses") {
  const auto w = W(2, 2, {1, 4});
  CHECK_FALSE(validate_certificate(w, {StabilityClass::Unstable, std::nullopt, CertificateMethod::ExtremeRay}));
  CHECK_FALSE(validate_certificate(w, {StabilityClass::Unstable, C({0, 0, 0, 0}), CertificateMethod::ExtremeRay}));
  CHECK_FALSE(validate_certificate(w, {StabilityClass::Unstable, C({-1, 3, -1, -1}), CertificateMethod::ExtremeRay}));
  CHECK_FALSE(validate_certificate(w, {StabilityClass::Unstable, C({1, 1, -1, -1}), CertificateMethod::ExtremeRay}));
  CHECK_FALSE(validate_certificate(w, {StabilityClass::NotWeaklyUnstable, C({3, -1, -1, -1}), CertificateMethod::ExtremeRay}));
}

TEST_CASE("three deciders agree") {
  for (int N = 2; N <= 10; ++N) {
    for (int m = 1; m < N; ++m) {
      for (const auto& w : enumerate_wp(GrassSignature(m, N - m))) {
        const auto rays = classify_by_rays(w);
        CHECK(rays.cls == classify_combinatorial(w));
        CHECK(validate_certificate(w, rays));
        if (N <= 6) {
          const auto brute = classify_brute_force(w, N);
          CHECK(brute.cls == rays.cls);
          CHECK(validate_certificate(w, brute));
        }
        // Pencil criterion.
        const auto pencil = best_pencil(w);
        StabilityClass from_pencil = StabilityClass::NotWeaklyUnstable;
        if (pencil && pencil->kind == PencilKind::Constraining) from_pencil = StabilityClass::Unstable;
        if (pencil && pencil->kind == PencilKind::WeaklyConstrainingOnly) from_pencil = StabilityClass::WeaklyUnstableOnly;
        CHECK(from_pencil == rays.cls);
      }
    }
  }
}

TEST_CASE("pairing is monotone along the Bruhat order") {
  CHECK(check_lemma_monotonicity(GrassSignature(2, 2), C({3, -1, -1, -1})));
  CHECK(check_lemma_monotonicity(GrassSignature(2, 3), C({2, 1, 0, -1, -2})));
  CHECK(check_lemma_monotonicity(GrassSignature(2, 3), C({0, 0, 0, 0, 0})));
  CHECK_THROWS_AS(check_lemma_monotonicity(GrassSignature(2, 2), C({-1, 3, -1, -1})), ValidationError);

  std::mt19937 rng(20240611);
  for (int N = 2; N <= 8; ++N) {
    for (int m = 1; m < N; ++m) {
      for (int trial = 0; trial < 20; ++trial) {
        CHECK(check_lemma_monotonicity(GrassSignature(m, N - m), random_dominant(rng, N, 5)));
      }
    }
  }
}

TEST_CASE("coprimality collapse") {
  for (int N = 2; N <= 10; ++N) {
    for (int m = 1; m < N; ++m) {
      const int n = N - m;
      if (std::gcd(m, n) != 1) continue;
      for (const auto& w : enumerate_wp(GrassSignature(m, n))) {
        CHECK(classify_combinatorial(w) != StabilityClass::WeaklyUnstableOnly);
      }
    }
  }
  CHECK(classify_combinatorial(W(2, 2, {2, 4})) == StabilityClass::WeaklyUnstableOnly);
}
