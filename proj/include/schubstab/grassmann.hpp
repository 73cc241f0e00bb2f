#pragma once

// Combinatorics of the Grassmannian Gr(m, m+n): Schubert cells indexed by
// m-subsets of {1..m+n}, the Bruhat order, Young diagrams in the m x n box,
// and pencils {V : dim(V ∩ W) >= r} with W a standard flag subspace F_d.

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace schubstab {

/// Shape of Gr(m, m+n). N = m + n is the ambient dimension.
class GrassSignature {
 public:
  GrassSignature(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  int N() const { return m_ + n_; }

  friend bool operator==(const GrassSignature&, const GrassSignature&) = default;

 private:
  int m_;
  int n_;
};

/// Minimal coset representative w in W^P, stored as the increasing tuple
/// (w_1 < ... < w_m) of 1-based indices in [1, m+n].
class GrassPermutation {
 public:
  GrassPermutation(GrassSignature sig, std::vector<int> indices);

  const GrassSignature& signature() const { return sig_; }
  const std::vector<int>& indices() const { return idx_; }
  /// 1-based access, matching w_k.
  int operator[](int k) const { return idx_[static_cast<std::size_t>(k - 1)]; }

  /// "X_{14}" style label; indices are comma separated when m+n >= 10.
  std::string label() const;
  /// Indices joined with ';', used in CSV cells.
  std::string joined() const;

  friend bool operator==(const GrassPermutation&, const GrassPermutation&) = default;
  friend auto operator<=>(const GrassPermutation& a, const GrassPermutation& b) {
    return a.idx_ <=> b.idx_;
  }

 private:
  GrassSignature sig_;
  std::vector<int> idx_;
};

/// Partition in Π_{m,n}: m weakly decreasing parts, each in [0, n].
class Partition {
 public:
  Partition(GrassSignature sig, std::vector<int> parts);

  const GrassSignature& signature() const { return sig_; }
  const std::vector<int>& parts() const { return parts_; }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i - 1)]; }
  int size() const;  // number of boxes
  std::string joined() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  GrassSignature sig_;
  std::vector<int> parts_;
};

/// The pencil {V : dim(V ∩ F_d) >= r}.
class Pencil {
 public:
  Pencil(GrassSignature sig, int d, int r);

  const GrassSignature& signature() const { return sig_; }
  int d() const { return d_; }
  int r() const { return r_; }

  friend bool operator==(const Pencil&, const Pencil&) = default;

 private:
  GrassSignature sig_;
  int d_;
  int r_;
};

enum class PencilKind { Constraining, WeaklyConstrainingOnly, NotConstraining };

std::string to_string(PencilKind kind);

struct Corner {
  int row;     // 1-based row i
  int column;  // λ_i
  friend bool operator==(const Corner&, const Corner&) = default;
};

enum class NodeClass { Unstable, Weakly, Neither };

std::string to_string(NodeClass c);

/// All C(m+n, m) elements of W^P in lexicographic order.
std::vector<GrassPermutation> enumerate_wp(const GrassSignature& sig);

/// Componentwise comparison of sorted tuples. Throws on signature mismatch.
bool bruhat_leq(const GrassPermutation& w, const GrassPermutation& v);

/// dim X_w = Σ (w_k - k).
int dimension(const GrassPermutation& w);

/// λ_i = n + i - w_i.
Partition to_partition(const GrassPermutation& w);
GrassPermutation from_partition(const Partition& lambda);

std::vector<Corner> outside_corners(const Partition& lambda);
bool is_pencil(const Partition& lambda);

/// The Schubert cell index whose variety equals the pencil. For r <= d <= n + r
/// this is (d-r+1, ..., d, n+r+1, ..., m+n); when d > n + r the condition is
/// vacuous and the whole Grassmannian (n+1, ..., m+n) is returned.
GrassPermutation pencil_to_permutation(const Pencil& p);

/// Exact comparison of m*d against (m+n)*r.
PencilKind classify_pencil(const Pencil& p);

struct PencilChoice {
  Pencil pencil;
  PencilKind kind;
};

/// Standard pencil F_{w_k}, r = k of least slope w_k / k among the rows whose
/// condition is not vacuous (w_k < n + k). Smallest k wins ties. Empty only
/// for the top cell (n+1, ..., m+n).
std::optional<PencilChoice> best_pencil(const GrassPermutation& w);

enum class PencilFilter { Constraining, Weakly, All };

struct PencilEntry {
  Pencil pencil;
  PencilKind kind;
  GrassPermutation permutation;
};

/// Every valid (d, r) passing `filter`, ordered by permutation, then d, then r.
/// `Weakly` keeps constraining and weakly constraining pencils. With
/// `maximal_only`, entries Bruhat-below another entry are dropped and
/// entries sharing a permutation are collapsed to the first.
std::vector<PencilEntry> list_pencils(const GrassSignature& sig, PencilFilter filter,
                                      bool maximal_only);

/// (d, r) -> (m+n-d, m-r). Requires r < m and a non-vacuous pencil (d - r <= n).
Pencil dual_pencil(const Pencil& p);

/// Cover relations (lower, upper) of the Bruhat order.
std::vector<std::pair<GrassPermutation, GrassPermutation>> hasse_edges(const GrassSignature& sig);

/// Node classes on the (n+1) x (m+1) lattice of box vertices, indexed
/// [y][x] with x in [0, n] counted from the left and y in [0, m] from the top.
std::vector<std::vector<NodeClass>> node_grid(const GrassSignature& sig);

NodeClass node_class(const GrassSignature& sig, int x, int y);

}  // namespace schubstab
