#pragma once

// Instability of Schubert varieties X_w with respect to
// a(t) = diag(t^n, ..., t^n, t^-m, ..., t^-m), decided three ways:
// slope inequalities on w, the generating rays of the dominant sum-zero
// cone, and a bounded brute-force search over integer cocharacters.

#include "schubstab/grassmann.hpp"

#include <optional>
#include <string>
#include <vector>

namespace schubstab {

/// Integer cocharacter (t_1, ..., t_N) of the diagonal torus of SL_N.
class Cocharacter {
 public:
  explicit Cocharacter(std::vector<long long> entries);

  const std::vector<long long>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  long long operator[](int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }

  bool is_sum_zero() const;
  bool is_dominant() const;  // weakly decreasing
  bool is_trivial() const;
  std::string joined() const;  // ';'-separated

  friend bool operator==(const Cocharacter&, const Cocharacter&) = default;

 private:
  std::vector<long long> entries_;
};

enum class StabilityClass { Unstable, WeaklyUnstableOnly, NotWeaklyUnstable };
enum class CertificateMethod { Combinatorial, ExtremeRay, BruteForce };

std::string to_string(StabilityClass c);
std::string to_string(CertificateMethod m);

struct StabilityCertificate {
  StabilityClass cls;
  std::optional<Cocharacter> witness;
  CertificateMethod method;
};

/// (n repeated m times, -m repeated n times).
std::vector<long long> a_weight_vector(const GrassSignature& sig);

/// Σ_j δ_{w_j}; same sign as (δ, a^w). Throws unless δ is sum-zero of length m+n.
long long pairing_with_aw(const Cocharacter& delta, const GrassPermutation& w);

/// ((N-k) repeated k times, (-k) repeated N-k times), 1 <= k <= N-1.
Cocharacter extreme_ray(int k, int N);

StabilityCertificate classify_by_rays(const GrassPermutation& w);

StabilityClass classify_combinatorial(const GrassPermutation& w);

/// Exhaustive search over dominant sum-zero integer vectors with entries in
/// [-bound, bound]. bound = m+n is enough to contain every ray witness.
StabilityCertificate classify_brute_force(const GrassPermutation& w, int bound);

/// Re-checks a certificate against the feasibility system by substitution:
/// the witness must be nontrivial, dominant, sum-zero, with pairing > 0 for
/// UNSTABLE and == 0 for WEAKLY_UNSTABLE_ONLY.
bool validate_certificate(const GrassPermutation& w, const StabilityCertificate& cert);

/// (δ, a^{w'}) >= (δ, a^w) for every Bruhat pair w' <= w. Throws on non-dominant δ.
bool check_lemma_monotonicity(const GrassSignature& sig, const Cocharacter& delta);

}  // namespace schubstab
