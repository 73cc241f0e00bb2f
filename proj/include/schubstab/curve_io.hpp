#pragma once

// Curve files are JSON objects:
//
//   { "m": 1, "n": 2, "interval": ["1", "2"],
//     "entries": [["0", "1"], ["0", "0", "1"]] }
//
// `entries` is the row-major list of coefficient lists (index = degree),
// every coefficient a rational string "p" or "p/q". Square curves into SL_N
// use a single "N" key instead of "m"/"n". Writing is canonical, so
// write(read(text)) reproduces canonical text byte for byte.

#include "schubstab/curves.hpp"

#include <string>
#include <vector>

namespace schubstab {

struct CurveFile {
  PolynomialMatrixCurve curve;
  bool square = false;  // true for the "N" form

  /// The group-valued curve: the curve itself in the square form, its
  /// unipotent embedding otherwise.
  PolyMatrix group_curve() const;
};

CurveFile parse_curve(const std::string& text);
std::string write_curve(const CurveFile& file);

CurveFile read_curve_file(const std::string& path);
void write_curve_file(const std::string& path, const CurveFile& file);

/// {"basis": [["1","0","0"], ["0","1","2"]]}
std::vector<std::vector<Rational>> parse_basis(const std::string& text);
std::vector<std::vector<Rational>> read_basis_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace schubstab
