#include "schubstab/grassmann.hpp"
#include "schubstab/rational.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace schubstab;

namespace {

GrassPermutation W(int m, int n, std::vector<int> idx) { return GrassPermutation(GrassSignature(m, n), std::move(idx)); }

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::string> labels(const std::vector<PencilEntry>& entries) {
  std::vector<std::string> out;
  for (const auto& e : entries) out.push_back(e.permutation.label());
  return out;
}

}  // namespace

TEST_CASE("signature validation") {
  CHECK_THROWS_WITH_AS(GrassSignature(0, 2), "m must be ≥ 1", ValidationError);
  CHECK_THROWS_WITH_AS(GrassSignature(2, 0), "n must be ≥ 1", ValidationError);
  CHECK(GrassSignature(2, 3).N() == 5);
}

TEST_CASE("permutation validation") {
  CHECK_THROWS_AS(W(2, 2, {2, 1}), ValidationError);
  CHECK_THROWS_AS(W(2, 2, {1, 1}), ValidationError);
  CHECK_THROWS_AS(W(2, 2, {1, 5}), ValidationError);
  CHECK_THROWS_AS(W(2, 2, {0, 2}), ValidationError);
  CHECK_THROWS_AS(W(2, 2, {1}), ValidationError);
  CHECK(W(2, 2, {1, 4}).label() == "X_{14}");
  CHECK(W(2, 8, {1, 10}).label() == "X_{1,10}");
}

TEST_CASE("enumerate_wp") {
  const auto g11 = enumerate_wp(GrassSignature(1, 1));
  REQUIRE(g11.size() == 2);
  CHECK(g11[0].indices() == std::vector<int>{1});
  CHECK(g11[1].indices() == std::vector<int>{2});

  std::vector<std::string> names;
  for (const auto& w : enumerate_wp(GrassSignature(2, 2))) names.push_back(w.label());
  CHECK(names == std::vector<std::string>{"X_{12}", "X_{13}", "X_{14}", "X_{23}", "X_{24}", "X_{34}"});
  CHECK(enumerate_wp(GrassSignature(2, 3)).size() == 10);

  for (int N = 2; N <= 10; ++N) {
    for (int m = 1; m < N; ++m) {
      const auto all = enumerate_wp(GrassSignature(m, N - m));
      CHECK(static_cast<long long>(all.size()) == binomial(N, m));
      CHECK(std::is_sorted(all.begin(), all.end()));
      CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    }
  }
}

TEST_CASE("bruhat order") {
  CHECK(bruhat_leq(W(2, 2, {1, 3}), W(2, 2, {2, 4})));
  CHECK_FALSE(bruhat_leq(W(2, 2, {1, 4}), W(2, 2, {2, 3})));
  CHECK_FALSE(bruhat_leq(W(2, 2, {2, 3}), W(2, 2, {1, 4})));
  CHECK(bruhat_leq(W(2, 2, {2, 4}), W(2, 2, {2, 4})));
  CHECK_THROWS_AS(bruhat_leq(W(2, 2, {1, 2}), W(2, 3, {1, 2})), ValidationError);

  // Partial order axioms, exhaustively on small signatures.
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {2, 4}}) {
    const auto all = enumerate_wp(GrassSignature(m, n));
    for (const auto& a : all) {
      for (const auto& b : all) {
        if (bruhat_leq(a, b) && bruhat_leq(b, a)) CHECK(a == b);
        if (bruhat_leq(a, b)) CHECK(dimension(a) <= dimension(b));
        for (const auto& c : all) {
          if (bruhat_leq(a, b) && bruhat_leq(b, c)) CHECK(bruhat_leq(a, c));
        }
      }
    }
  }
}

TEST_CASE("dimension") {
  CHECK(dimension(W(2, 2, {1, 2})) == 0);
  CHECK(dimension(W(2, 2, {3, 4})) == 4);
  CHECK(dimension(W(2, 2, {2, 4})) == 3);
}

TEST_CASE("partitions") {
  CHECK(to_partition(W(2, 2, {3, 4})).parts() == std::vector<int>{0, 0});
  CHECK(to_partition(W(2, 2, {2, 4})).parts() == std::vector<int>{1, 0});
  CHECK(to_partition(W(2, 2, {1, 2})).parts() == std::vector<int>{2, 2});
  CHECK_THROWS_AS(Partition(GrassSignature(2, 2), {1, 2}), ValidationError);
  CHECK_THROWS_AS(Partition(GrassSignature(2, 2), {3, 0}), ValidationError);

  for (int N = 2; N <= 9; ++N) {
    for (int m = 1; m < N; ++m) {
      const GrassSignature sig(m, N - m);
      for (const auto& w : enumerate_wp(sig)) {
        const Partition lambda = to_partition(w);
        CHECK(from_partition(lambda) == w);
        CHECK(lambda.size() + dimension(w) == m * (N - m));
      }
    }
  }
}

TEST_CASE("outside corners and pencils") {
  const Partition p431(GrassSignature(3, 5), {4, 3, 1});
  const auto corners = outside_corners(p431);
  REQUIRE(corners.size() == 3);
  CHECK(corners[0] == Corner{1, 4});
  CHECK(corners[1] == Corner{2, 3});
  CHECK(corners[2] == Corner{3, 1});
  CHECK_FALSE(is_pencil(p431));

  CHECK(outside_corners(Partition(GrassSignature(2, 2), {0, 0})).empty());
  CHECK_FALSE(is_pencil(Partition(GrassSignature(2, 2), {0, 0})));
  const auto c33 = outside_corners(Partition(GrassSignature(2, 3), {3, 3}));
  REQUIRE(c33.size() == 1);
  CHECK(c33[0] == Corner{2, 3});
  CHECK(is_pencil(Partition(GrassSignature(2, 2), {1, 0})));
}

TEST_CASE("pencil_to_permutation") {
  CHECK(pencil_to_permutation(Pencil(GrassSignature(2, 3), 3, 2)) == W(2, 3, {2, 3}));
  CHECK(pencil_to_permutation(Pencil(GrassSignature(2, 2), 1, 1)) == W(2, 2, {1, 4}));
  CHECK(pencil_to_permutation(Pencil(GrassSignature(2, 2), 2, 1)) == W(2, 2, {2, 4}));
  // d > n + r: vacuous condition, whole Grassmannian.
  CHECK(pencil_to_permutation(Pencil(GrassSignature(3, 1), 3, 1)) == W(3, 1, {2, 3, 4}));

  CHECK_THROWS_AS(Pencil(GrassSignature(2, 2), 4, 1), ValidationError);
  CHECK_THROWS_AS(Pencil(GrassSignature(2, 2), 0, 1), ValidationError);
  CHECK_THROWS_AS(Pencil(GrassSignature(2, 2), 1, 2), ValidationError);
  CHECK_THROWS_AS(Pencil(GrassSignature(2, 2), 3, 3), ValidationError);
  CHECK_THROWS_AS(Pencil(GrassSignature(2, 2), 2, 0), ValidationError);

  // Every non-vacuous pencil is a single-corner diagram and vice versa.
  for (int N = 2; N <= 9; ++N) {
    for (int m = 1; m < N; ++m) {
      const GrassSignature sig(m, N - m);
      std::set<GrassPermutation> from_pencils;
      for (int d = 1; d < N; ++d) {
        for (int r = 1; r <= std::min(m, d); ++r) {
          if (d - r >= N - m) continue;  // empty diagram
          const auto w = pencil_to_permutation(Pencil(sig, d, r));
          CHECK(is_pencil(to_partition(w)));
          from_pencils.insert(w);
        }
      }
      for (const auto& w : enumerate_wp(sig)) {
        CHECK(is_pencil(to_partition(w)) == (from_pencils.count(w) == 1));
      }
    }
  }
}

TEST_CASE("classify_pencil") {
  CHECK(classify_pencil(Pencil(GrassSignature(2, 3), 2, 1)) == PencilKind::Constraining);
  CHECK(classify_pencil(Pencil(GrassSignature(2, 2), 2, 1)) == PencilKind::WeaklyConstrainingOnly);
  CHECK(classify_pencil(Pencil(GrassSignature(2, 2), 3, 1)) == PencilKind::NotConstraining);
}

TEST_CASE("best_pencil") {
  auto p14 = best_pencil(W(2, 2, {1, 4}));
  REQUIRE(p14);
  CHECK(p14->pencil == Pencil(GrassSignature(2, 2), 1, 1));
  CHECK(p14->kind == PencilKind::Constraining);

  auto p24 = best_pencil(W(2, 2, {2, 4}));
  REQUIRE(p24);
  CHECK(p24->pencil == Pencil(GrassSignature(2, 2), 2, 1));
  CHECK(p24->kind == PencilKind::WeaklyConstrainingOnly);

  CHECK_FALSE(best_pencil(W(2, 2, {3, 4})).has_value());

  // X_w lies in its pencil: the pencil's cell is Bruhat-above w.
  for (int N = 2; N <= 9; ++N) {
    for (int m = 1; m < N; ++m) {
      for (const auto& w : enumerate_wp(GrassSignature(m, N - m))) {
        const auto choice = best_pencil(w);
        if (!choice) {
          CHECK(dimension(w) == m * (N - m));
          continue;
        }
        CHECK(bruhat_leq(w, pencil_to_permutation(choice->pencil)));
      }
    }
  }
}

TEST_CASE("list_pencils") {
  const GrassSignature g25(2, 3);
  CHECK(labels(list_pencils(g25, PencilFilter::Constraining, false)) ==
        std::vector<std::string>{"X_{12}", "X_{15}", "X_{23}", "X_{25}", "X_{34}"});
  CHECK(labels(list_pencils(g25, PencilFilter::Constraining, true)) ==
        std::vector<std::string>{"X_{25}", "X_{34}"});

  const auto g11 = list_pencils(GrassSignature(1, 1), PencilFilter::Constraining, false);
  REQUIRE(g11.size() == 1);
  CHECK(g11[0].pencil == Pencil(GrassSignature(1, 1), 1, 1));
  CHECK(g11[0].permutation.indices() == std::vector<int>{1});

  // The weak filter is a superset of the strict one; "all" is a superset of both.
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}, {2, 4}}) {
    const GrassSignature sig(m, n);
    const auto strict = list_pencils(sig, PencilFilter::Constraining, false);
    const auto weak = list_pencils(sig, PencilFilter::Weakly, false);
    const auto all = list_pencils(sig, PencilFilter::All, false);
    CHECK(strict.size() <= weak.size());
    CHECK(weak.size() <= all.size());
    for (const auto& e : weak) CHECK(e.kind != PencilKind::NotConstraining);
  }
}

TEST_CASE("dual_pencil") {
  const Pencil d31 = dual_pencil(Pencil(GrassSignature(2, 2), 3, 1));
  CHECK(d31 == Pencil(GrassSignature(2, 2), 1, 1));
  CHECK(classify_pencil(Pencil(GrassSignature(2, 2), 3, 1)) == PencilKind::NotConstraining);
  CHECK(classify_pencil(d31) == PencilKind::Constraining);

  const Pencil d21 = dual_pencil(Pencil(GrassSignature(2, 2), 2, 1));
  CHECK(d21 == Pencil(GrassSignature(2, 2), 2, 1));
  CHECK(classify_pencil(d21) == PencilKind::WeaklyConstrainingOnly);

  CHECK(dual_pencil(Pencil(GrassSignature(2, 3), 4, 1)) == Pencil(GrassSignature(2, 3), 1, 1));
  CHECK_THROWS_AS(dual_pencil(Pencil(GrassSignature(2, 2), 2, 2)), ValidationError);

  // Duality is an involution and swaps strict constraining with strict non-constraining.
  for (int N = 3; N <= 9; ++N) {
    for (int m = 2; m < N; ++m) {
      const GrassSignature sig(m, N - m);
      for (int d = 1; d < N; ++d) {
        for (int r = 1; r < std::min(m, d + 1) && r < m; ++r) {
          if (r > d || d - r > N - m) continue;
          const Pencil p(sig, d, r);
          const Pencil q = dual_pencil(p);
          CHECK(dual_pencil(q) == p);
          const PencilKind kp = classify_pencil(p);
          const PencilKind kq = classify_pencil(q);
          if (kp == PencilKind::WeaklyConstrainingOnly) CHECK(kq == PencilKind::WeaklyConstrainingOnly);
          if (kp == PencilKind::Constraining) CHECK(kq == PencilKind::NotConstraining);
          if (kp == PencilKind::NotConstraining) CHECK(kq == PencilKind::Constraining);
        }
      }
    }
  }
}

TEST_CASE("hasse_edges") {
  const auto e = hasse_edges(GrassSignature(2, 2));
  CHECK(e.size() == 6);
  std::set<std::pair<std::string, std::string>> named;
  for (const auto& [lo, hi] : e) named.insert({lo.label(), hi.label()});
  CHECK(named == std::set<std::pair<std::string, std::string>>{{"X_{12}", "X_{13}"},
                                                               {"X_{13}", "X_{14}"},
                                                               {"X_{13}", "X_{23}"},
                                                               {"X_{14}", "X_{24}"},
                                                               {"X_{23}", "X_{24}"},
                                                               {"X_{24}", "X_{34}"}});
  CHECK(hasse_edges(GrassSignature(1, 1)).size() == 1);
  CHECK(hasse_edges(GrassSignature(1, 2)).size() == 2);

  // Cover relations cross-checked against bruhat_leq by brute force.
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}, {2, 5}, {3, 4}}) {
    const auto all = enumerate_wp(GrassSignature(m, n));
    std::set<std::pair<GrassPermutation, GrassPermutation>> oracle;
    for (const auto& a : all) {
      for (const auto& b : all) {
        if (a == b || !bruhat_leq(a, b)) continue;
        const bool has_between = std::any_of(all.begin(), all.end(), [&](const GrassPermutation& c) {
          return c != a && c != b && bruhat_leq(a, c) && bruhat_leq(c, b);
        });
        if (!has_between) oracle.insert({a, b});
      }
    }
    const auto edges = hasse_edges(GrassSignature(m, n));
    CHECK(std::set<std::pair<GrassPermutation, GrassPermutation>>(edges.begin(), edges.end()) == oracle);
    CHECK(edges.size() == oracle.size());
    for (const auto& [lo, hi] : edges) CHECK(dimension(hi) == dimension(lo) + 1);
  }
}

TEST_CASE("node grid") {
  const auto g33 = node_grid(GrassSignature(3, 3));
  int unstable = 0, weakly = 0;
  for (const auto& row : g33) {
    for (NodeClass c : row) {
      unstable += c == NodeClass::Unstable;
      weakly += c == NodeClass::Weakly;
    }
  }
  CHECK(unstable == 6);
  CHECK(weakly == 4);
  CHECK(node_class(GrassSignature(3, 3), 3, 0) == NodeClass::Weakly);
  CHECK(node_class(GrassSignature(2, 3), 3, 0) == NodeClass::Weakly);

  // gcd(m, n) = 1: only the two endpoints of the diagonal are on it.
  const GrassSignature g23(2, 3);
  for (int x = 0; x <= 3; ++x) {
    for (int y = 0; y <= 2; ++y) {
      const bool endpoint = (x == 3 && y == 0) || (x == 0 && y == 2);
      if (!endpoint) CHECK(node_class(g23, x, y) != NodeClass::Weakly);
    }
  }
  CHECK_THROWS_AS(node_class(g23, 4, 0), ValidationError);
}
