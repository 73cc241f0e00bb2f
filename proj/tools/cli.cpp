#include "schubstab/curve_io.hpp"
#include "schubstab/export.hpp"
#include "schubstab/rational.hpp"
#include "schubstab/simulation.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace schubstab;

namespace {

std::vector<long long> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<long long> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw ValidationError(what + ": empty entry in '" + text + "'");
    item = item.substr(first, last - first + 1);
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw ValidationError(what + ": '" + item + "' is not an integer");
    out.push_back(v);
  }
  if (out.empty()) throw ValidationError(what + ": expected a comma-separated list of integers");
  return out;
}

struct Options {
  int m = 0, n = 0;
  std::string w;
  bool all = false;
  std::string format = "csv";
  std::string dot;
  bool annotate = false;
  std::string kind = "constraining";
  bool maximal = false;
  int d = 0, r = 0;
  int dim = 0;
  std::string weights;
  std::string curve;
  std::string a;
  int K = 0;
  std::string w_basis;
  std::string config;
  std::string out;
};

int run_classify(const Options& o) {
  const GrassSignature sig(o.m, o.n);
  if (o.all == !o.w.empty()) throw ValidationError("schubert classify: give exactly one of --w or --all");
  std::vector<ClassificationRow> rows;
  if (o.all) {
    rows = classify_all(sig);
  } else {
    std::vector<int> idx;
    for (long long v : parse_int_list(o.w, "--w")) idx.push_back(static_cast<int>(v));
    rows.push_back(classify_row(GrassPermutation(sig, idx)));
  }
  std::cout << (o.format == "json" ? classification_json(rows) : classification_csv(rows));
  return 0;
}

int run_hasse(const Options& o) {
  const GrassSignature sig(o.m, o.n);
  write_text_file(o.dot, hasse_dot(sig, o.annotate));
  std::cout << "wrote " << hasse_edges(sig).size() << " edges to " << o.dot << "\n";
  return 0;
}

int run_pencil_list(const Options& o) {
  const GrassSignature sig(o.m, o.n);
  const PencilFilter filter = o.kind == "all"      ? PencilFilter::All
                              : o.kind == "weakly" ? PencilFilter::Weakly
                                                   : PencilFilter::Constraining;
  std::cout << pencil_list_csv(list_pencils(sig, filter, o.maximal));
  return 0;
}

int run_pencil_dual(const Options& o) {
  const GrassSignature sig(o.m, o.n);
  const Pencil p(sig, o.d, o.r);
  const Pencil q = dual_pencil(p);
  std::cout << "d,r,w,kind\n";
  std::cout << q.d() << ',' << q.r() << ',' << pencil_to_permutation(q).label() << ',' << to_string(classify_pencil(q))
            << '\n';
  return 0;
}

int run_kempf(const Options& o) {
  const WeightedVector v(o.dim, parse_weights(o.weights));
  std::cout << destabilizer_report(optimal_destabilizer(v));
  return 0;
}

std::vector<long long> a_exponents(const Options& o, const CurveFile& file) {
  if (!o.a.empty()) return parse_int_list(o.a, "--a");
  if (file.square) throw ValidationError("curve leading: --a is required for square curves");
  std::vector<long long> a(static_cast<std::size_t>(file.curve.rows()), file.curve.cols());
  a.resize(static_cast<std::size_t>(file.curve.rows() + file.curve.cols()), -file.curve.rows());
  return a;
}

int run_leading(const Options& o) {
  const CurveFile file = read_curve_file(o.curve);
  const PolyMatrix g = file.group_curve();
  const auto a = a_exponents(o, file);
  const LeadingDirection ld = o.K > 0 ? leading_direction(g, a, o.K) : leading_direction_auto(g, a);
  std::cout << leading_report(ld);
  return 0;
}

int run_check_pencil(const Options& o) {
  const CurveFile file = read_curve_file(o.curve);
  if (file.square) throw ValidationError("curve check-pencil: the curve must be given in the m/n form");
  const bool inside = pencil_membership(file.curve, read_basis_file(o.w_basis), o.r);
  std::cout << "in_pencil: " << (inside ? "true" : "false") << "\n";
  return 0;
}

int run_simulate(const Options& o) {
  const SimulationConfig cfg = read_simulation_config(o.config);
  const CurveFile file = read_curve_file(cfg.curve_path);
  if (file.square) throw ValidationError("simulate: the curve must be given in the m/n form");
  const auto s_grid = s_grid_of(cfg);
  const auto t_grid = t_grid_of(cfg);
  const auto records = simulate(file.curve, s_grid, t_grid, cfg.radii);
  write_text_file(o.out, report_csv(records, cfg.radii));

  std::cout << "records: " << records.size() << "\n";
  std::cout << "t,nondivergence_fraction\n";
  for (const auto& [t, frac] : nondivergence_statistic(records, cfg.epsilon)) {
    std::cout << format_decimal(t) << ',' << format_decimal(frac) << "\n";
  }
  const DtStatistic dt = dt_statistic(records, cfg.mu, cfg.mu_prime);
  std::cout << "dt_not_improvable_fraction: " << format_decimal(dt.fraction) << "\n";
  std::cout << "dt_boundary_excluded: " << dt.boundary << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stability of Schubert varieties, Kempf destabilizers and lattice simulations"};
  app.require_subcommand(1);
  Options o;

  auto* schubert = app.add_subcommand("schubert", "Schubert varieties in Gr(m, m+n)");
  schubert->require_subcommand(1);
  auto* classify = schubert->add_subcommand("classify", "stability class of Schubert varieties");
  classify->add_option("--m", o.m)->required();
  classify->add_option("--n", o.n)->required();
  auto* w_opt = classify->add_option("--w", o.w, "indices i,j,... of one cell");
  auto* all_flag = classify->add_flag("--all", o.all, "every cell");
  w_opt->excludes(all_flag);
  classify->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));

  auto* hasse = schubert->add_subcommand("hasse", "Bruhat order Hasse diagram");
  hasse->add_option("--m", o.m)->required();
  hasse->add_option("--n", o.n)->required();
  hasse->add_option("--dot", o.dot, "output DOT file")->required();
  hasse->add_flag("--annotate", o.annotate, "colour nodes by stability class");

  auto* pencil = app.add_subcommand("pencil", "pencils {V : dim(V ∩ F_d) >= r}");
  pencil->require_subcommand(1);
  auto* plist = pencil->add_subcommand("list", "list pencils");
  plist->add_option("--m", o.m)->required();
  plist->add_option("--n", o.n)->required();
  plist->add_option("--kind", o.kind)->check(CLI::IsMember({"constraining", "weakly", "all"}));
  plist->add_flag("--maximal", o.maximal, "only Bruhat-maximal entries");
  auto* pdual = pencil->add_subcommand("dual", "dual pencil");
  pdual->add_option("--m", o.m)->required();
  pdual->add_option("--n", o.n)->required();
  pdual->add_option("--d", o.d)->required();
  pdual->add_option("--r", o.r)->required();

  auto* kempf = app.add_subcommand("kempf", "Kempf optimal destabilizers");
  kempf->require_subcommand(1);
  auto* destab = kempf->add_subcommand("destabilize", "optimal one-parameter subgroup of a weight vector");
  destab->add_option("--dim", o.dim)->required();
  destab->add_option("--weights", o.weights, "weights, e.g. \"1,0,0,1;0,1,1,0\"")->required();

  auto* curve = app.add_subcommand("curve", "polynomial curves");
  curve->require_subcommand(1);
  auto* leading = curve->add_subcommand("leading", "leading direction under a(t)");
  leading->add_option("--curve", o.curve)->required();
  leading->add_option("--a", o.a, "exponents of a(t), e.g. \"2,-1,-1\"");
  leading->add_option("--K", o.K, "truncation order (default: smallest valid)");
  auto* check = curve->add_subcommand("check-pencil", "test whether the curve lies in a pencil");
  check->add_option("--curve", o.curve)->required();
  check->add_option("--w-basis", o.w_basis)->required();
  check->add_option("--r", o.r)->required();

  auto* sim = app.add_subcommand("simulate", "lattice simulation over an (s, t) grid");
  sim->add_option("--config", o.config)->required();
  sim->add_option("--out", o.out, "report CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (classify->parsed()) return run_classify(o);
    if (hasse->parsed()) return run_hasse(o);
    if (plist->parsed()) return run_pencil_list(o);
    if (pdual->parsed()) return run_pencil_dual(o);
    if (destab->parsed()) return run_kempf(o);
    if (leading->parsed()) return run_leading(o);
    if (check->parsed()) return run_check_pencil(o);
    if (sim->parsed()) return run_simulate(o);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ComputationError& e) {
    std::cerr << "computation failed: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "computation failed: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
