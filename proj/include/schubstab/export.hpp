#pragma once

// Text renderings shared by the CLI and the bindings: classification tables
// (CSV/JSON with identical fields), the Bruhat Hasse diagram as DOT, pencil
// listings and the Kempf / leading-direction reports.

#include "schubstab/curves.hpp"
#include "schubstab/grassmann.hpp"
#include "schubstab/kempf.hpp"
#include "schubstab/stability.hpp"

#include <optional>
#include <string>
#include <vector>

namespace schubstab {

struct ClassificationRow {
  GrassPermutation w;
  Partition lambda;
  int dimension;
  std::optional<PencilChoice> pencil;
  StabilityCertificate certificate;  // extreme-ray witness
};

/// Ray certificate cross-checked against the slope rule; a disagreement is a
/// ComputationError.
ClassificationRow classify_row(const GrassPermutation& w);
std::vector<ClassificationRow> classify_all(const GrassSignature& sig);

/// m,n,w,lambda,dimension,pencil_d,pencil_r,pencil_kind,class,witness,method
std::string classification_csv(const std::vector<ClassificationRow>& rows);
/// JSON array of objects with the CSV column names as keys.
std::string classification_json(const std::vector<ClassificationRow>& rows);

/// Flat string-valued view of one row, as produced by both formats.
struct ClassificationRecord {
  int m = 0, n = 0;
  std::string w, lambda;
  int dimension = 0;
  std::string pencil_d, pencil_r, pencil_kind, cls, witness, method;
  friend bool operator==(const ClassificationRecord&, const ClassificationRecord&) = default;
};
ClassificationRecord to_record(const ClassificationRow& row);
std::vector<ClassificationRecord> parse_classification_json(const std::string& text);

/// Nodes "X_{..} [dim=d] [CLASS]", edges lower -> upper. `annotate` adds fill
/// colours per class.
std::string hasse_dot(const GrassSignature& sig, bool annotate);

/// d,r,w,kind
std::string pencil_list_csv(const std::vector<PencilEntry>& entries);

std::string destabilizer_report(const DestabilizerResult& result);
std::string leading_report(const LeadingDirection& ld);

}  // namespace schubstab
