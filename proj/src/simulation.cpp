#include "schubstab/simulation.hpp"

#include "schubstab/curve_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace schubstab {

using nlohmann::json;

std::vector<Rational> linear_grid(const Rational& from, const Rational& to, int count) {
  if (count < 1) throw ValidationError("grid count must be ≥ 1");
  if (count == 1) return {from};
  std::vector<Rational> grid;
  grid.reserve(static_cast<std::size_t>(count));
  const Rational step = (to - from) / Rational(count - 1);
  for (int k = 0; k < count; ++k) grid.push_back(from + step * Rational(k));
  return grid;
}

std::vector<Rational> stratified_grid(const Rational& from, const Rational& to, int count) {
  if (count < 1) throw ValidationError("grid count must be ≥ 1");
  if (!(from < to)) throw ValidationError("stratified grid needs from < to");
  const BigInt scale = BigInt(1) << 40;
  const Rational golden = (std::sqrt(5.0L) - 1) / 2;  // as an exact binary fraction
  std::vector<Rational> grid;
  grid.reserve(static_cast<std::size_t>(count));
  const Rational cell = (to - from) / Rational(count);
  for (int k = 0; k < count; ++k) {
    Rational u = golden * Rational(k + 1);
    u -= Rational(numerator(u) / denominator(u));  // fractional part
    const BigInt q = numerator(u * Rational(scale)) / denominator(u * Rational(scale));
    grid.push_back(from + cell * (Rational(k) + Rational(q, scale)));
  }
  return grid;
}

std::vector<Real> geometric_grid(Real from, Real ratio, int count) {
  if (count < 1) throw ValidationError("grid count must be ≥ 1");
  if (!(from > 0) || !(ratio > 0)) throw ValidationError("geometric grid needs positive start and ratio");
  std::vector<Real> grid;
  grid.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) grid.push_back(from * std::pow(ratio, static_cast<Real>(k)));
  return grid;
}

std::vector<SimulationRecord> simulate(const PolynomialMatrixCurve& curve, const std::vector<Rational>& s_grid,
                                       const std::vector<Real>& t_grid, const std::vector<Real>& radii,
                                       unsigned threads) {
  if (s_grid.empty() || t_grid.empty()) throw ValidationError("simulation grids must be non-empty");
  if (curve.rows() + curve.cols() > kMaxLatticeDim) {
    throw ValidationError("lattice dimension " + std::to_string(curve.rows() + curve.cols()) +
                          " exceeds the limit of " + std::to_string(kMaxLatticeDim));
  }
  for (Real r : radii) {
    if (!(r > 0)) throw ValidationError("count radius must be positive");
  }
  for (const auto& s : s_grid) {
    if (!curve.contains(s)) throw ValidationError("sample s = " + to_string(s) + " lies outside the curve interval");
  }

  const std::size_t total = s_grid.size() * t_grid.size();
  std::vector<SimulationRecord> out(total);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= total) return;
      try {
        const auto& s = s_grid[idx / t_grid.size()];
        const Real t = t_grid[idx % t_grid.size()];
        const LatticeBasis basis = translated_basis(curve, s, t);
        const ShortestVector sv = shortest_sup(basis);
        SimulationRecord rec{s, t, sv.delta_sup, sv.coeffs, {}};
        for (Real r : radii) rec.siegel_counts.emplace_back(r, siegel_count(basis, r));
        out[idx] = std::move(rec);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(total);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<std::pair<Real, double>> nondivergence_statistic(const std::vector<SimulationRecord>& records,
                                                             Real epsilon) {
  std::map<Real, std::pair<long, long>> tally;  // t -> (inside, total)
  for (const auto& r : records) {
    auto& [inside, all] = tally[r.t];
    ++all;
    if (r.delta_sup >= epsilon) ++inside;
  }
  std::vector<std::pair<Real, double>> out;
  for (const auto& [t, c] : tally) out.emplace_back(t, static_cast<double>(c.first) / static_cast<double>(c.second));
  return out;
}

DtStatistic dt_statistic(const std::vector<SimulationRecord>& records, Real mu, Real mu_prime) {
  if (!(mu > 0 && mu < 1)) throw ValidationError("mu must lie strictly between 0 and 1");
  if (!(mu_prime > 0)) throw ValidationError("mu_prime must be positive");
  std::set<Real> ts;
  for (const auto& r : records) ts.insert(r.t);
  if (ts.empty()) return {};
  std::vector<Real> sorted(ts.begin(), ts.end());
  const Real cutoff = sorted[sorted.size() / 2];

  // Max delta_sup over the upper half of the horizon, per s.
  std::map<Rational, Real> best;
  for (const auto& r : records) {
    if (r.t < cutoff) continue;
    auto it = best.find(r.s);
    if (it == best.end()) best.emplace(r.s, r.delta_sup);
    else it->second = std::max(it->second, r.delta_sup);
  }
  const Real tol = 1e-9L * mu_prime;
  DtStatistic stat;
  for (const auto& [s, value] : best) {
    if (std::fabs(value - mu_prime) <= tol) ++stat.boundary;
    else if (value > mu_prime) ++stat.not_improvable;
    else ++stat.improvable;
  }
  const int decided = stat.not_improvable + stat.improvable;
  stat.fraction = decided == 0 ? 0.0 : static_cast<double>(stat.not_improvable) / decided;
  return stat;
}

namespace {

Real number_field(const json& doc, const char* key, Real fallback, bool required) {
  if (!doc.contains(key)) {
    if (required) throw ValidationError(std::string("simulation config: missing field '") + key + "'");
    return fallback;
  }
  const json& v = doc[key];
  if (v.is_number()) return static_cast<Real>(v.get<double>());
  if (v.is_string()) return to_long_double(parse_rational(v.get<std::string>()));
  throw ValidationError(std::string("simulation config: field '") + key + "' must be a number");
}

Rational rational_field(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ValidationError(std::string("simulation config: missing field '") + key + "'");
  const json& v = doc[key];
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number()) return parse_rational(json(v).dump());
  throw ValidationError(std::string("simulation config: field '") + key + "' must be a rational");
}

int count_field(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<long long>() < 1) {
    throw ValidationError(std::string("simulation config: '") + key + "' must be a positive integer");
  }
  return doc[key].get<int>();
}

}  // namespace

SimulationConfig parse_simulation_config(const std::string& text, const std::string& base_dir) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("simulation config: invalid JSON (") + e.what() + ")");
  }
  if (!doc.is_object()) throw ValidationError("simulation config: top level must be an object");
  SimulationConfig cfg;
  if (!doc.contains("curve") || !doc["curve"].is_string()) {
    throw ValidationError("simulation config: 'curve' must be a file path");
  }
  std::filesystem::path curve = doc["curve"].get<std::string>();
  if (curve.is_relative() && !base_dir.empty()) curve = std::filesystem::path(base_dir) / curve;
  cfg.curve_path = curve.string();

  if (!doc.contains("s_grid") || !doc["s_grid"].is_object()) {
    throw ValidationError("simulation config: missing 's_grid' object");
  }
  const json& sg = doc["s_grid"];
  cfg.s_from = rational_field(sg, "from");
  cfg.s_to = rational_field(sg, "to");
  cfg.s_count = count_field(sg, "count");
  if (sg.contains("sampling")) {
    const std::string mode = sg["sampling"].is_string() ? sg["sampling"].get<std::string>() : "";
    if (mode == "stratified") cfg.s_stratified = true;
    else if (mode != "uniform") throw ValidationError("simulation config: sampling must be \"uniform\" or \"stratified\"");
  }

  if (!doc.contains("t_grid") || !doc["t_grid"].is_object()) {
    throw ValidationError("simulation config: missing 't_grid' object");
  }
  const json& tg = doc["t_grid"];
  cfg.t_from = number_field(tg, "from", 1, true);
  cfg.t_ratio = number_field(tg, "ratio", 1, true);
  cfg.t_count = count_field(tg, "count");

  if (doc.contains("radii")) {
    if (!doc["radii"].is_array()) throw ValidationError("simulation config: 'radii' must be a list");
    for (const auto& r : doc["radii"]) {
      if (!r.is_number()) throw ValidationError("simulation config: radii must be numbers");
      cfg.radii.push_back(static_cast<Real>(r.get<double>()));
    }
  }
  cfg.mu = number_field(doc, "mu", 0.5L, false);
  cfg.mu_prime = number_field(doc, "mu_prime", cfg.mu, false);
  cfg.epsilon = number_field(doc, "epsilon", 0.01L, false);
  if (!(cfg.mu > 0 && cfg.mu < 1)) throw ValidationError("simulation config: mu must lie strictly between 0 and 1");
  if (!(cfg.t_from > 0) || !(cfg.t_ratio > 0)) throw ValidationError("simulation config: t_grid needs positive from/ratio");
  return cfg;
}

SimulationConfig read_simulation_config(const std::string& path) {
  const auto dir = std::filesystem::path(path).parent_path().string();
  return parse_simulation_config(read_text_file(path), dir);
}

std::vector<Rational> s_grid_of(const SimulationConfig& cfg) {
  return cfg.s_stratified ? stratified_grid(cfg.s_from, cfg.s_to, cfg.s_count)
                          : linear_grid(cfg.s_from, cfg.s_to, cfg.s_count);
}

std::vector<Real> t_grid_of(const SimulationConfig& cfg) { return geometric_grid(cfg.t_from, cfg.t_ratio, cfg.t_count); }

std::string report_csv(const std::vector<SimulationRecord>& records, const std::vector<Real>& radii) {
  std::ostringstream out;
  out << "s,t,delta_sup,shortest_coeffs";
  for (std::size_t i = 0; i < radii.size(); ++i) out << ",count_R" << (i + 1);
  out << "\n";
  for (const auto& r : records) {
    out << format_decimal(to_long_double(r.s)) << "," << format_decimal(r.t) << "," << format_decimal(r.delta_sup) << ",";
    for (std::size_t i = 0; i < r.shortest.size(); ++i) {
      if (i > 0) out << ";";
      out << r.shortest[i];
    }
    for (const auto& [radius, count] : r.siegel_counts) out << "," << count;
    out << "\n";
  }
  return out.str();
}

}  // namespace schubstab
