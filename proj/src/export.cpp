#include "schubstab/export.hpp"

#include "schubstab/rational.hpp"

#include <json.hpp>

#include <climits>
#include <sstream>

namespace schubstab {

using nlohmann::json;

ClassificationRow classify_row(const GrassPermutation& w) {
  StabilityCertificate cert = classify_by_rays(w);
  const StabilityClass slope = classify_combinatorial(w);
  if (cert.cls != slope) {
    throw ComputationError("classification of " + w.label() + " disagrees: rays give " + to_string(cert.cls) +
                           ", slope rule gives " + to_string(slope));
  }
  if (!validate_certificate(w, cert)) {
    throw ComputationError("certificate for " + w.label() + " failed re-validation");
  }
  return ClassificationRow{w, to_partition(w), dimension(w), best_pencil(w), std::move(cert)};
}

std::vector<ClassificationRow> classify_all(const GrassSignature& sig) {
  std::vector<ClassificationRow> rows;
  for (const auto& w : enumerate_wp(sig)) rows.push_back(classify_row(w));
  return rows;
}

ClassificationRecord to_record(const ClassificationRow& row) {
  ClassificationRecord r;
  r.m = row.w.signature().m();
  r.n = row.w.signature().n();
  r.w = row.w.joined();
  r.lambda = row.lambda.joined();
  r.dimension = row.dimension;
  if (row.pencil) {
    r.pencil_d = std::to_string(row.pencil->pencil.d());
    r.pencil_r = std::to_string(row.pencil->pencil.r());
    r.pencil_kind = to_string(row.pencil->kind);
  }
  r.cls = to_string(row.certificate.cls);
  if (row.certificate.witness) r.witness = row.certificate.witness->joined();
  r.method = to_string(row.certificate.method);
  return r;
}

std::string classification_csv(const std::vector<ClassificationRow>& rows) {
  std::ostringstream out;
  out << "m,n,w,lambda,dimension,pencil_d,pencil_r,pencil_kind,class,witness,method\n";
  for (const auto& row : rows) {
    const auto r = to_record(row);
    out << r.m << ',' << r.n << ',' << r.w << ',' << r.lambda << ',' << r.dimension << ',' << r.pencil_d << ','
        << r.pencil_r << ',' << r.pencil_kind << ',' << r.cls << ',' << r.witness << ',' << r.method << '\n';
  }
  return out.str();
}

std::string classification_json(const std::vector<ClassificationRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    const auto r = to_record(row);
    nlohmann::ordered_json o = nlohmann::ordered_json::object();
    o["m"] = r.m;
    o["n"] = r.n;
    o["w"] = r.w;
    o["lambda"] = r.lambda;
    o["dimension"] = r.dimension;
    o["pencil_d"] = r.pencil_d;
    o["pencil_r"] = r.pencil_r;
    o["pencil_kind"] = r.pencil_kind;
    o["class"] = r.cls;
    o["witness"] = r.witness;
    o["method"] = r.method;
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

std::vector<ClassificationRecord> parse_classification_json(const std::string& text) {
  std::vector<ClassificationRecord> out;
  try {
    for (const auto& o : json::parse(text)) {
      ClassificationRecord r;
      r.m = o.at("m").get<int>();
      r.n = o.at("n").get<int>();
      r.w = o.at("w").get<std::string>();
      r.lambda = o.at("lambda").get<std::string>();
      r.dimension = o.at("dimension").get<int>();
      r.pencil_d = o.at("pencil_d").get<std::string>();
      r.pencil_r = o.at("pencil_r").get<std::string>();
      r.pencil_kind = o.at("pencil_kind").get<std::string>();
      r.cls = o.at("class").get<std::string>();
      r.witness = o.at("witness").get<std::string>();
      r.method = o.at("method").get<std::string>();
      out.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("classification JSON: ") + e.what());
  }
  return out;
}

namespace {

const char* fill_colour(StabilityClass c) {
  switch (c) {
    case StabilityClass::Unstable:
      return "#f4a6a6";
    case StabilityClass::WeaklyUnstableOnly:
      return "#f7e08c";
    case StabilityClass::NotWeaklyUnstable:
      break;
  }
  return "#b9e3b0";
}

std::string node_id(const GrassPermutation& w) {
  std::string id = "w";
  for (int i : w.indices()) id += "_" + std::to_string(i);
  return id;
}

}  // namespace

std::string hasse_dot(const GrassSignature& sig, bool annotate) {
  std::ostringstream out;
  out << "digraph bruhat_" << sig.m() << "_" << sig.N() << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box" << (annotate ? ", style=filled" : "") << "];\n";
  for (const auto& w : enumerate_wp(sig)) {
    const StabilityClass cls = classify_combinatorial(w);
    out << "  " << node_id(w) << " [label=\"" << w.label() << " [dim=" << dimension(w) << "] [" << to_string(cls)
        << "]\"";
    if (annotate) out << ", fillcolor=\"" << fill_colour(cls) << "\"";
    out << "];\n";
  }
  for (const auto& [lo, hi] : hasse_edges(sig)) out << "  " << node_id(lo) << " -> " << node_id(hi) << ";\n";
  out << "}\n";
  return out.str();
}

std::string pencil_list_csv(const std::vector<PencilEntry>& entries) {
  std::ostringstream out;
  out << "d,r,w,kind\n";
  for (const auto& e : entries) {
    out << e.pencil.d() << ',' << e.pencil.r() << ',' << e.permutation.label() << ',' << to_string(e.kind) << '\n';
  }
  return out.str();
}

std::string destabilizer_report(const DestabilizerResult& result) {
  std::ostringstream out;
  out << "status: " << to_string(result.status) << "\n";
  out << "B_v: " << (result.b_value ? result.b_value->str() : std::string("none")) << "\n";
  out << "delta_star: ";
  if (result.delta_star) {
    for (std::size_t i = 0; i < result.delta_star->size(); ++i) out << (i ? "," : "") << (*result.delta_star)[i];
  } else {
    out << "none";
  }
  out << "\n";
  out << "nearest_point: ";
  for (std::size_t i = 0; i < result.nearest_point.size(); ++i) {
    out << (i ? "," : "") << to_string(result.nearest_point[i]);
  }
  out << "\n";
  return out.str();
}

std::string leading_report(const LeadingDirection& ld) {
  std::ostringstream out;
  out << "kappa: " << to_string(ld.kappa) << "\n";
  out << "truncation: " << ld.truncation << "\n";
  out << "leading_orders: ";
  for (std::size_t i = 0; i < ld.leading.size(); ++i) out << (i ? "," : "") << ld.leading[i];
  out << "\n";
  out << "top_weights: ";
  for (std::size_t i = 0; i < ld.top_weights.size(); ++i) {
    out << (i ? "," : "");
    if (ld.top_weights[i] == INT_MIN) out << "-";
    else out << ld.top_weights[i];
  }
  out << "\n";
  out << "decay_exponent: " << to_string(ld.decay_exponent) << "\n";
  out << "Y:\n";
  for (int i = 0; i < ld.y.rows(); ++i) {
    out << "  [";
    for (int j = 0; j < ld.y.cols(); ++j) out << (j ? ", " : "") << ld.y(i, j).str();
    out << "]\n";
  }
  return out.str();
}

}  // namespace schubstab
