#include "schubstab/curve_io.hpp"
#include "schubstab/export.hpp"
#include "schubstab/simulation.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace schubstab;

namespace {

py::dict record_dict(const ClassificationRecord& r) {
  py::dict d;
  d["m"] = r.m;
  d["n"] = r.n;
  d["w"] = r.w;
  d["lambda"] = r.lambda;
  d["dimension"] = r.dimension;
  d["pencil_d"] = r.pencil_d;
  d["pencil_r"] = r.pencil_r;
  d["pencil_kind"] = r.pencil_kind;
  d["class"] = r.cls;
  d["witness"] = r.witness;
  d["method"] = r.method;
  return d;
}

PencilFilter filter_of(const std::string& kind) {
  if (kind == "constraining") return PencilFilter::Constraining;
  if (kind == "weakly") return PencilFilter::Weakly;
  if (kind == "all") return PencilFilter::All;
  throw ValidationError("kind must be one of constraining, weakly, all");
}

LatticeBasis basis_of(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  LatticeBasis b{RealMatrix::Zero(n, n)};
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n) {
      throw ValidationError("basis must be square");
    }
    for (int j = 0; j < n; ++j) b.columns(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return b;
}

}  // namespace

PYBIND11_MODULE(_schubstab, mod) {
  mod.doc() = "Schubert variety stability, Kempf destabilizers and lattice simulations";

  py::register_exception<ValidationError>(mod, "ValidationError", PyExc_ValueError);
  py::register_exception<ComputationError>(mod, "ComputationError", PyExc_RuntimeError);

  mod.def(
      "classify",
      [](int m, int n, std::vector<int> w) {
        return record_dict(to_record(classify_row(GrassPermutation(GrassSignature(m, n), std::move(w)))));
      },
      py::arg("m"), py::arg("n"), py::arg("w"));

  mod.def(
      "classify_all",
      [](int m, int n) {
        py::list out;
        for (const auto& row : classify_all(GrassSignature(m, n))) out.append(record_dict(to_record(row)));
        return out;
      },
      py::arg("m"), py::arg("n"));

  mod.def(
      "classification_csv", [](int m, int n) { return classification_csv(classify_all(GrassSignature(m, n))); },
      py::arg("m"), py::arg("n"));
  mod.def(
      "classification_json", [](int m, int n) { return classification_json(classify_all(GrassSignature(m, n))); },
      py::arg("m"), py::arg("n"));

  mod.def(
      "hasse_dot", [](int m, int n, bool annotate) { return hasse_dot(GrassSignature(m, n), annotate); },
      py::arg("m"), py::arg("n"), py::arg("annotate") = false);

  mod.def(
      "dimension", [](int m, int n, std::vector<int> w) { return dimension(GrassPermutation(GrassSignature(m, n), std::move(w))); },
      py::arg("m"), py::arg("n"), py::arg("w"));

  mod.def(
      "list_pencils",
      [](int m, int n, const std::string& kind, bool maximal) {
        py::list out;
        for (const auto& e : list_pencils(GrassSignature(m, n), filter_of(kind), maximal)) {
          out.append(py::make_tuple(e.pencil.d(), e.pencil.r(), e.permutation.indices(), to_string(e.kind)));
        }
        return out;
      },
      py::arg("m"), py::arg("n"), py::arg("kind") = "constraining", py::arg("maximal") = false);

  mod.def(
      "dual_pencil",
      [](int m, int n, int d, int r) {
        const Pencil dual = dual_pencil(Pencil(GrassSignature(m, n), d, r));
        return py::make_tuple(dual.d(), dual.r());
      },
      py::arg("m"), py::arg("n"), py::arg("d"), py::arg("r"));

  mod.def(
      "optimal_destabilizer",
      [](int dim, const std::vector<IntVector>& weights) {
        const auto res = optimal_destabilizer(WeightedVector(dim, weights));
        py::dict d;
        d["status"] = to_string(res.status);
        d["b_value"] = res.b_value ? py::cast(res.b_value->str()) : py::none();
        d["b_approx"] = res.b_value ? py::cast(static_cast<double>(res.b_value->approx())) : py::none();
        d["delta_star"] = res.delta_star ? py::cast(*res.delta_star) : py::none();
        std::vector<std::string> p;
        for (const auto& x : res.nearest_point) p.push_back(to_string(x));
        d["nearest_point"] = p;
        return d;
      },
      py::arg("dim"), py::arg("weights"));

  mod.def(
      "leading_report",
      [](const std::string& curve_json, const std::vector<long long>& a) {
        const CurveFile file = parse_curve(curve_json);
        return leading_report(leading_direction_auto(file.group_curve(), a));
      },
      py::arg("curve_json"), py::arg("a"));

  mod.def(
      "shortest_sup",
      [](const std::vector<std::vector<double>>& rows) {
        const auto sv = shortest_sup(basis_of(rows));
        return py::make_tuple(static_cast<double>(sv.delta_sup), sv.coeffs);
      },
      py::arg("basis"), "Rows of the matrix whose columns generate the lattice.");

  mod.def(
      "siegel_count",
      [](const std::vector<std::vector<double>>& rows, double radius) { return siegel_count(basis_of(rows), radius); },
      py::arg("basis"), py::arg("radius"));

  mod.def(
      "simulate_config",
      [](const std::string& config_path) {
        const SimulationConfig cfg = read_simulation_config(config_path);
        const auto curve = read_curve_file(cfg.curve_path).curve;
        std::vector<SimulationRecord> recs;
        {
          py::gil_scoped_release release;
          recs = simulate(curve, s_grid_of(cfg), t_grid_of(cfg), cfg.radii);
        }
        return report_csv(recs, cfg.radii);
      },
      py::arg("config_path"), "Runs a simulation config and returns the report CSV.");
}
