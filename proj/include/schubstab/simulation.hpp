#pragma once

// Sampling the translated lattices a(t) u_φ(s) Z^{m+n} over (s, t) grids and
// the statistics read off them: the fraction of s whose lattice stays
// outside the cusp (systole >= ε), and a finite-horizon estimate of the
// fraction of s that are not Dirichlet-improvable.

#include "schubstab/lattice.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace schubstab {

struct SimulationRecord {
  Rational s;
  Real t = 1;
  Real delta_sup = 0;
  std::vector<long long> shortest;
  std::vector<std::pair<Real, long long>> siegel_counts;  // (radius, count) in radii order
};

/// from + k (to - from)/(count - 1), exactly.
std::vector<Rational> linear_grid(const Rational& from, const Rational& to, int count);
/// One sample in each of `count` equal cells of [from, to], at relative
/// offset frac(k * golden ratio) inside cell k, rounded to a multiple of
/// 2^-40. The denominators (~10^14) keep samples clear of the
/// small-denominator rationals where u_φ(s) Z^N is itself degenerate.
std::vector<Rational> stratified_grid(const Rational& from, const Rational& to, int count);
/// from * ratio^k.
std::vector<Real> geometric_grid(Real from, Real ratio, int count);

/// One record per (s, t), ordered by (s index, t index). Parallel over the
/// grid; `threads` = 0 picks the hardware concurrency.
std::vector<SimulationRecord> simulate(const PolynomialMatrixCurve& curve, const std::vector<Rational>& s_grid,
                                       const std::vector<Real>& t_grid, const std::vector<Real>& radii,
                                       unsigned threads = 0);

/// For each distinct t (ascending): fraction of s with delta_sup >= ε.
std::vector<std::pair<Real, double>> nondivergence_statistic(const std::vector<SimulationRecord>& records,
                                                             Real epsilon);

struct DtStatistic {
  double fraction = 0;      // not-improvable s / decided s
  int not_improvable = 0;
  int improvable = 0;
  int boundary = 0;         // excluded: max over the horizon sits at the threshold
};

/// An s counts as not DT-improvable when delta_sup > μ' at some t in the
/// upper half of the t grid. Records within 1e-9 (relative) of μ' at the
/// maximizing t are boundary cases and excluded. μ must lie in (0, 1).
DtStatistic dt_statistic(const std::vector<SimulationRecord>& records, Real mu, Real mu_prime);

struct SimulationConfig {
  std::string curve_path;  // resolved relative to the config file
  Rational s_from, s_to;
  int s_count = 0;
  bool s_stratified = false;  // "sampling": "uniform" (default) | "stratified"
  Real t_from = 1, t_ratio = 1;
  int t_count = 0;
  std::vector<Real> radii;
  Real mu = 0.5;
  Real mu_prime = 0.5;  // defaults to mu
  Real epsilon = 0.01;
};

/// JSON config:
/// {"curve": "curve.json",
///  "s_grid": {"from": "1", "to": "2", "count": 200, "sampling": "stratified"},
///  "t_grid": {"from": 10, "ratio": 1.4384, "count": 20}, "radii": [1, 2],
///  "mu": 0.5, "mu_prime": 0.5, "epsilon": 0.01}
SimulationConfig parse_simulation_config(const std::string& text, const std::string& base_dir);
SimulationConfig read_simulation_config(const std::string& path);
std::vector<Rational> s_grid_of(const SimulationConfig& cfg);
std::vector<Real> t_grid_of(const SimulationConfig& cfg);

/// Header s,t,delta_sup,shortest_coeffs,count_R1,...; decimals with 12 significant digits.
std::string report_csv(const std::vector<SimulationRecord>& records, const std::vector<Real>& radii);

}  // namespace schubstab
