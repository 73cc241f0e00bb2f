#include "schubstab/grassmann.hpp"

#include "schubstab/rational.hpp"

#include <algorithm>
#include <numeric>

namespace schubstab {

GrassSignature::GrassSignature(int m, int n) : m_(m), n_(n) {
  if (m < 1) throw ValidationError("m must be ≥ 1");
  if (n < 1) throw ValidationError("n must be ≥ 1");
}

GrassPermutation::GrassPermutation(GrassSignature sig, std::vector<int> indices)
    : sig_(sig), idx_(std::move(indices)) {
  if (static_cast<int>(idx_.size()) != sig_.m()) {
    throw ValidationError("permutation must have exactly m = " + std::to_string(sig_.m()) +
                          " indices");
  }
  for (std::size_t k = 0; k < idx_.size(); ++k) {
    if (idx_[k] < 1 || idx_[k] > sig_.N()) {
      throw ValidationError("permutation index " + std::to_string(idx_[k]) + " outside [1, " +
                            std::to_string(sig_.N()) + "]");
    }
    if (k > 0 && idx_[k] <= idx_[k - 1]) {
      throw ValidationError("permutation indices must be strictly increasing");
    }
  }
}

std::string GrassPermutation::label() const {
  std::string out = "X_{";
  const bool wide = sig_.N() >= 10;
  for (std::size_t k = 0; k < idx_.size(); ++k) {
    if (wide && k > 0) out += ',';
    out += std::to_string(idx_[k]);
  }
  return out + "}";
}

std::string GrassPermutation::joined() const {
  std::string out;
  for (std::size_t k = 0; k < idx_.size(); ++k) {
    if (k > 0) out += ';';
    out += std::to_string(idx_[k]);
  }
  return out;
}

Partition::Partition(GrassSignature sig, std::vector<int> parts)
    : sig_(sig), parts_(std::move(parts)) {
  if (static_cast<int>(parts_.size()) != sig_.m()) {
    throw ValidationError("partition must have exactly m = " + std::to_string(sig_.m()) + " parts");
  }
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0 || parts_[i] > sig_.n()) {
      throw ValidationError("partition parts must lie in [0, n]");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw ValidationError("partition parts must be weakly decreasing");
    }
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::joined() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ';';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Pencil::Pencil(GrassSignature sig, int d, int r) : sig_(sig), d_(d), r_(r) {
  if (d < 1 || d >= sig.N()) {
    throw ValidationError("pencil dimension d must lie in [1, m+n-1]");
  }
  if (r < 1 || r > std::min(sig.m(), d)) {
    throw ValidationError("pencil rank r must lie in [1, min(m, d)]");
  }
}

std::string to_string(PencilKind kind) {
  switch (kind) {
    case PencilKind::Constraining:
      return "CONSTRAINING";
    case PencilKind::WeaklyConstrainingOnly:
      return "WEAKLY_CONSTRAINING_ONLY";
    case PencilKind::NotConstraining:
      return "NOT_CONSTRAINING";
  }
  return "?";
}

std::string to_string(NodeClass c) {
  switch (c) {
    case NodeClass::Unstable:
      return "UNSTABLE";
    case NodeClass::Weakly:
      return "WEAKLY";
    case NodeClass::Neither:
      return "NEITHER";
  }
  return "?";
}

std::vector<GrassPermutation> enumerate_wp(const GrassSignature& sig) {
  std::vector<GrassPermutation> out;
  std::vector<int> current(static_cast<std::size_t>(sig.m()));
  std::iota(current.begin(), current.end(), 1);
  const int m = sig.m();
  const int N = sig.N();
  while (true) {
    out.emplace_back(sig, current);
    int k = m - 1;
    while (k >= 0 && current[static_cast<std::size_t>(k)] == N - m + k + 1) --k;
    if (k < 0) break;
    ++current[static_cast<std::size_t>(k)];
    for (int j = k + 1; j < m; ++j) {
      current[static_cast<std::size_t>(j)] = current[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

bool bruhat_leq(const GrassPermutation& w, const GrassPermutation& v) {
  if (!(w.signature() == v.signature())) {
    throw ValidationError("bruhat_leq: signature mismatch");
  }
  for (int k = 1; k <= w.signature().m(); ++k) {
    if (w[k] > v[k]) return false;
  }
  return true;
}

int dimension(const GrassPermutation& w) {
  int total = 0;
  for (int k = 1; k <= w.signature().m(); ++k) total += w[k] - k;
  return total;
}

Partition to_partition(const GrassPermutation& w) {
  const auto& sig = w.signature();
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(sig.m()));
  for (int i = 1; i <= sig.m(); ++i) parts.push_back(sig.n() + i - w[i]);
  return Partition(sig, std::move(parts));
}

GrassPermutation from_partition(const Partition& lambda) {
  const auto& sig = lambda.signature();
  std::vector<int> idx;
  idx.reserve(static_cast<std::size_t>(sig.m()));
  for (int i = 1; i <= sig.m(); ++i) idx.push_back(sig.n() + i - lambda[i]);
  return GrassPermutation(sig, std::move(idx));
}

std::vector<Corner> outside_corners(const Partition& lambda) {
  std::vector<Corner> out;
  const int m = lambda.signature().m();
  for (int i = 1; i <= m; ++i) {
    const int next = i < m ? lambda[i + 1] : 0;
    if (lambda[i] > 0 && lambda[i] > next) out.push_back({i, lambda[i]});
  }
  return out;
}

bool is_pencil(const Partition& lambda) { return outside_corners(lambda).size() == 1; }

GrassPermutation pencil_to_permutation(const Pencil& p) {
  const auto& sig = p.signature();
  std::vector<int> idx;
  idx.reserve(static_cast<std::size_t>(sig.m()));
  for (int k = 1; k <= sig.m(); ++k) {
    if (k <= p.r()) {
      idx.push_back(std::min(p.d() - p.r() + k, sig.n() + k));
    } else {
      idx.push_back(sig.n() + k);
    }
  }
  return GrassPermutation(sig, std::move(idx));
}

PencilKind classify_pencil(const Pencil& p) {
  const long long lhs = static_cast<long long>(p.signature().m()) * p.d();
  const long long rhs = static_cast<long long>(p.signature().N()) * p.r();
  if (lhs < rhs) return PencilKind::Constraining;
  if (lhs == rhs) return PencilKind::WeaklyConstrainingOnly;
  return PencilKind::NotConstraining;
}

std::optional<PencilChoice> best_pencil(const GrassPermutation& w) {
  const auto& sig = w.signature();
  int best_k = 0;
  for (int k = 1; k <= sig.m(); ++k) {
    if (w[k] >= sig.n() + k) continue;
    // w_k / k < w_best / best  <=>  w_k * best < w_best * k
    if (best_k == 0 || static_cast<long long>(w[k]) * best_k <
                           static_cast<long long>(w[best_k]) * k) {
      best_k = k;
    }
  }
  if (best_k == 0) return std::nullopt;
  Pencil p(sig, w[best_k], best_k);
  return PencilChoice{p, classify_pencil(p)};
}

namespace {

bool passes(PencilKind kind, PencilFilter filter) {
  switch (filter) {
    case PencilFilter::Constraining:
      return kind == PencilKind::Constraining;
    case PencilFilter::Weakly:
      return kind != PencilKind::NotConstraining;
    case PencilFilter::All:
      return true;
  }
  return false;
}

}  // namespace

std::vector<PencilEntry> list_pencils(const GrassSignature& sig, PencilFilter filter,
                                      bool maximal_only) {
  std::vector<PencilEntry> all;
  for (int d = 1; d < sig.N(); ++d) {
    for (int r = 1; r <= std::min(sig.m(), d); ++r) {
      Pencil p(sig, d, r);
      const PencilKind kind = classify_pencil(p);
      if (!passes(kind, filter)) continue;
      all.push_back({p, kind, pencil_to_permutation(p)});
    }
  }
  std::stable_sort(all.begin(), all.end(), [](const PencilEntry& a, const PencilEntry& b) {
    return a.permutation < b.permutation;
  });
  if (!maximal_only) return all;

  std::vector<PencilEntry> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < all.size() && !dominated; ++j) {
      if (i == j) continue;
      if (all[i].permutation == all[j].permutation) {
        dominated = j < i;
      } else {
        dominated = bruhat_leq(all[i].permutation, all[j].permutation);
      }
    }
    if (!dominated) out.push_back(all[i]);
  }
  return out;
}

Pencil dual_pencil(const Pencil& p) {
  const auto& sig = p.signature();
  if (p.r() >= sig.m()) throw ValidationError("dual pencil requires r < m");
  if (p.d() - p.r() > sig.n()) {
    throw ValidationError("dual pencil undefined: dim(V ∩ W) >= r holds for every V");
  }
  return Pencil(sig, sig.N() - p.d(), sig.m() - p.r());
}

std::vector<std::pair<GrassPermutation, GrassPermutation>> hasse_edges(const GrassSignature& sig) {
  // In W^P, v covers w exactly when v is obtained from w by raising a single
  // index by one (both lie in Young's lattice, where covers add one box).
  std::vector<std::pair<GrassPermutation, GrassPermutation>> edges;
  for (const auto& w : enumerate_wp(sig)) {
    for (int k = 1; k <= sig.m(); ++k) {
      const int raised = w[k] + 1;
      const bool blocked = raised > sig.N() || (k < sig.m() && raised == w[k + 1]);
      if (blocked) continue;
      std::vector<int> idx = w.indices();
      idx[static_cast<std::size_t>(k - 1)] = raised;
      edges.emplace_back(w, GrassPermutation(sig, std::move(idx)));
    }
  }
  return edges;
}

NodeClass node_class(const GrassSignature& sig, int x, int y) {
  if (x < 0 || x > sig.n() || y < 0 || y > sig.m()) {
    throw ValidationError("node (" + std::to_string(x) + ", " + std::to_string(y) + ") lies outside the " +
                          std::to_string(sig.m()) + " x " + std::to_string(sig.n()) + " box");
  }
  const long long lhs = static_cast<long long>(sig.m()) * x + static_cast<long long>(sig.n()) * y;
  const long long rhs = static_cast<long long>(sig.m()) * sig.n();
  if (lhs > rhs) return NodeClass::Unstable;
  if (lhs == rhs) return NodeClass::Weakly;
  return NodeClass::Neither;
}

std::vector<std::vector<NodeClass>> node_grid(const GrassSignature& sig) {
  std::vector<std::vector<NodeClass>> grid(static_cast<std::size_t>(sig.m() + 1));
  for (int y = 0; y <= sig.m(); ++y) {
    for (int x = 0; x <= sig.n(); ++x) grid[static_cast<std::size_t>(y)].push_back(node_class(sig, x, y));
  }
  return grid;
}

}  // namespace schubstab
