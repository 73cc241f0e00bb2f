#include "schubstab/stability.hpp"

#include "schubstab/rational.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace schubstab {

Cocharacter::Cocharacter(std::vector<long long> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw ValidationError("cocharacter must be non-empty");
}

bool Cocharacter::is_sum_zero() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0LL) == 0;
}

bool Cocharacter::is_dominant() const {
  return std::is_sorted(entries_.begin(), entries_.end(), std::greater<>());
}

bool Cocharacter::is_trivial() const {
  return std::all_of(entries_.begin(), entries_.end(), [](long long x) { return x == 0; });
}

std::string Cocharacter::joined() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out += ';';
    out += std::to_string(entries_[i]);
  }
  return out;
}

std::string to_string(StabilityClass c) {
  switch (c) {
    case StabilityClass::Unstable:
      return "UNSTABLE";
    case StabilityClass::WeaklyUnstableOnly:
      return "WEAKLY_UNSTABLE_ONLY";
    case StabilityClass::NotWeaklyUnstable:
      return "NOT_WEAKLY_UNSTABLE";
  }
  return "?";
}

std::string to_string(CertificateMethod m) {
  switch (m) {
    case CertificateMethod::Combinatorial:
      return "COMBINATORIAL";
    case CertificateMethod::ExtremeRay:
      return "EXTREME_RAY";
    case CertificateMethod::BruteForce:
      return "BRUTE_FORCE";
  }
  return "?";
}

std::vector<long long> a_weight_vector(const GrassSignature& sig) {
  std::vector<long long> out(static_cast<std::size_t>(sig.N()), -sig.m());
  std::fill_n(out.begin(), sig.m(), sig.n());
  return out;
}

long long pairing_with_aw(const Cocharacter& delta, const GrassPermutation& w) {
  if (delta.size() != w.signature().N()) {
    throw ValidationError("cocharacter length must equal m+n");
  }
  if (!delta.is_sum_zero()) throw ValidationError("cocharacter entries must sum to zero");
  long long total = 0;
  for (int idx : w.indices()) total += delta[idx];
  return total;
}

Cocharacter extreme_ray(int k, int N) {
  if (N < 2 || k < 1 || k > N - 1) {
    throw ValidationError("extreme_ray: k must lie in [1, N-1]");
  }
  std::vector<long long> entries(static_cast<std::size_t>(N), -k);
  std::fill_n(entries.begin(), k, N - k);
  return Cocharacter(std::move(entries));
}

StabilityCertificate classify_by_rays(const GrassPermutation& w) {
  const int N = w.signature().N();
  std::optional<Cocharacter> best;
  long long best_value = 0;
  for (int k = 1; k <= N - 1; ++k) {
    Cocharacter ray = extreme_ray(k, N);
    const long long value = pairing_with_aw(ray, w);
    if (!best || value > best_value) {
      best = ray;
      best_value = value;
    }
  }
  if (best_value > 0) return {StabilityClass::Unstable, best, CertificateMethod::ExtremeRay};
  if (best_value == 0) {
    return {StabilityClass::WeaklyUnstableOnly, best, CertificateMethod::ExtremeRay};
  }
  return {StabilityClass::NotWeaklyUnstable, std::nullopt, CertificateMethod::ExtremeRay};
}

StabilityClass classify_combinatorial(const GrassPermutation& w) {
  const auto& sig = w.signature();
  const long long m = sig.m();
  const long long N = sig.N();
  bool weak = false;
  for (int i = 1; i <= sig.m(); ++i) {
    const long long lhs = m * w[i];
    const long long rhs = N * i;
    if (lhs < rhs) return StabilityClass::Unstable;
    if (lhs == rhs && w[i] < N) weak = true;
  }
  return weak ? StabilityClass::WeaklyUnstableOnly : StabilityClass::NotWeaklyUnstable;
}

namespace {

// Visits weakly decreasing integer vectors in [-bound, bound]^N with zero sum,
// largest leading entries first. Stops when `visit` returns false.
void for_each_dominant(int N, int bound, const std::function<bool(const std::vector<long long>&)>& visit) {
  std::vector<long long> current(static_cast<std::size_t>(N));
  bool stop = false;
  std::function<void(int, long long, long long)> rec = [&](int pos, long long upper, long long sum) {
    if (stop) return;
    const int remaining = N - pos;
    if (remaining == 0) {
      if (sum == 0 && !visit(current)) stop = true;
      return;
    }
    for (long long v = upper; v >= -bound && !stop; --v) {
      // Remaining entries lie in [-bound, v], so the final sum is bounded.
      const long long max_sum = sum + v * remaining;
      const long long min_sum = sum + v - static_cast<long long>(bound) * (remaining - 1);
      if (max_sum < 0) break;
      if (min_sum > 0) continue;
      current[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, v, sum + v);
    }
  };
  rec(0, bound, 0);
}

}  // namespace

StabilityCertificate classify_brute_force(const GrassPermutation& w, int bound) {
  if (bound < 1) throw ValidationError("brute force bound must be ≥ 1");
  const int N = w.signature().N();
  std::optional<Cocharacter> strict;
  std::optional<Cocharacter> weak;
  for_each_dominant(N, bound, [&](const std::vector<long long>& t) {
    long long total = 0;
    bool nontrivial = false;
    for (long long x : t) nontrivial = nontrivial || x != 0;
    if (!nontrivial) return true;
    for (int idx : w.indices()) total += t[static_cast<std::size_t>(idx - 1)];
    if (total > 0) {
      strict = Cocharacter(t);
      return false;
    }
    if (total == 0 && !weak) weak = Cocharacter(t);
    return true;
  });
  if (strict) return {StabilityClass::Unstable, strict, CertificateMethod::BruteForce};
  if (weak) return {StabilityClass::WeaklyUnstableOnly, weak, CertificateMethod::BruteForce};
  return {StabilityClass::NotWeaklyUnstable, std::nullopt, CertificateMethod::BruteForce};
}

bool validate_certificate(const GrassPermutation& w, const StabilityCertificate& cert) {
  if (cert.cls == StabilityClass::NotWeaklyUnstable) return !cert.witness.has_value();
  if (!cert.witness) return false;
  const Cocharacter& delta = *cert.witness;
  if (delta.size() != w.signature().N() || !delta.is_sum_zero() || !delta.is_dominant() ||
      delta.is_trivial()) {
    return false;
  }
  const long long value = pairing_with_aw(delta, w);
  return cert.cls == StabilityClass::Unstable ? value > 0 : value == 0;
}

bool check_lemma_monotonicity(const GrassSignature& sig, const Cocharacter& delta) {
  if (!delta.is_dominant()) throw ValidationError("cocharacter must be dominant");
  const auto all = enumerate_wp(sig);
  std::vector<long long> values;
  values.reserve(all.size());
  for (const auto& w : all) values.push_back(pairing_with_aw(delta, w));
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (bruhat_leq(all[i], all[j]) && values[i] < values[j]) return false;
    }
  }
  return true;
}

}  // namespace schubstab
