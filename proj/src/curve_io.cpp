#include "schubstab/curve_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace schubstab {

using nlohmann::json;

namespace {

Rational rational_field(const json& value, const std::string& where) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long long>());
  throw ValidationError(where + ": expected a rational string \"p/q\"");
}

int int_field(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) {
    throw ValidationError(std::string("curve file: missing integer field '") + key + "'");
  }
  return doc[key].get<int>();
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(what + ": invalid JSON (" + std::string(e.what()) + ")");
  }
}

}  // namespace

PolyMatrix CurveFile::group_curve() const {
  return square ? curve.entries() : unipotent_embed(curve.entries());
}

CurveFile parse_curve(const std::string& text) {
  const json doc = parse_json(text, "curve file");
  if (!doc.is_object()) throw ValidationError("curve file: top level must be an object");
  const bool square = doc.contains("N");
  int rows = 0;
  int cols = 0;
  if (square) {
    if (doc.contains("m") || doc.contains("n")) {
      throw ValidationError("curve file: give either N or m/n, not both");
    }
    rows = cols = int_field(doc, "N");
  } else {
    rows = int_field(doc, "m");
    cols = int_field(doc, "n");
  }
  if (rows < 1 || cols < 1) throw ValidationError("curve file: dimensions must be ≥ 1");

  if (!doc.contains("interval") || !doc["interval"].is_array() || doc["interval"].size() != 2) {
    throw ValidationError("curve file: 'interval' must be a pair [a, b]");
  }
  const Rational a = rational_field(doc["interval"][0], "interval");
  const Rational b = rational_field(doc["interval"][1], "interval");

  if (!doc.contains("entries") || !doc["entries"].is_array()) {
    throw ValidationError("curve file: missing 'entries' list");
  }
  const json& entries = doc["entries"];
  if (entries.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    throw ValidationError("curve file: expected " + std::to_string(rows * cols) + " entries, got " +
                          std::to_string(entries.size()));
  }
  PolyMatrix matrix(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const json& cell = entries[static_cast<std::size_t>(i * cols + j)];
      if (!cell.is_array()) throw ValidationError("curve file: each entry must be a coefficient list");
      std::vector<Rational> coeffs;
      for (const auto& c : cell) coeffs.push_back(rational_field(c, "entries"));
      matrix(i, j) = Polynomial(std::move(coeffs));
    }
  }
  return CurveFile{PolynomialMatrixCurve(std::move(matrix), a, b), square};
}

std::string write_curve(const CurveFile& file) {
  const auto& c = file.curve;
  // Keys are emitted in a fixed order rather than nlohmann's sorted order.
  std::ostringstream out;
  out << "{\n";
  if (file.square) {
    out << "  \"N\": " << c.rows() << ",\n";
  } else {
    out << "  \"m\": " << c.rows() << ",\n  \"n\": " << c.cols() << ",\n";
  }
  out << "  \"interval\": [" << json(to_string(c.lower())).dump() << ", "
      << json(to_string(c.upper())).dump() << "],\n";
  out << "  \"entries\": [";
  for (int i = 0; i < c.rows(); ++i) {
    for (int j = 0; j < c.cols(); ++j) {
      if (i + j > 0) out << ",";
      out << "\n    [";
      const auto& coeffs = c.entries()(i, j).coeffs();
      for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (k > 0) out << ", ";
        out << json(to_string(coeffs[k])).dump();
      }
      out << "]";
    }
  }
  out << "\n  ]\n}\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw ValidationError("failed writing '" + path + "'");
}

CurveFile read_curve_file(const std::string& path) { return parse_curve(read_text_file(path)); }

void write_curve_file(const std::string& path, const CurveFile& file) {
  write_text_file(path, write_curve(file));
}

std::vector<std::vector<Rational>> parse_basis(const std::string& text) {
  const json doc = parse_json(text, "basis file");
  if (!doc.is_object() || !doc.contains("basis") || !doc["basis"].is_array()) {
    throw ValidationError("basis file: expected {\"basis\": [[...], ...]}");
  }
  std::vector<std::vector<Rational>> basis;
  for (const auto& row : doc["basis"]) {
    if (!row.is_array()) throw ValidationError("basis file: each vector must be a list");
    std::vector<Rational> v;
    for (const auto& x : row) v.push_back(rational_field(x, "basis"));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Rational>> read_basis_file(const std::string& path) {
  return parse_basis(read_text_file(path));
}

}  // namespace schubstab
