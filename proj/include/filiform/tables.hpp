#pragma once

#include <map>
#include <string>
#include <vector>

#include "filiform/expr.hpp"
#include "filiform/params.hpp"

namespace filiform {

/// One entry of the classification list of a dimension.
struct ClassificationEntry {
  int index = 0;  // 1-based position, matching the stratum order
  std::string stratum_id;
  bool parametric = false;
  std::vector<Scalar> lambda;  // slot values used (empty for single orbits)
  ParamVector tuple;           // instantiated representative
};

/// The classification list: every stratum's representative regenerated from
/// the registry families. Parametric slots take lambda_values["lk"] when
/// present, l_k = k otherwise. Throws GuardViolation on excluded values and
/// UnsupportedDimension outside {5,6,7,8}.
std::vector<ClassificationEntry> classification_list(
    int dim, const std::map<std::string, Scalar>& lambda_values = {});

/// Number of isomorphism classes (= strata) in the dimension.
int count_classes(int dim);

/// The closed count n^2 - 7n + 17 suggested by the per-dimension class
/// counts, with n the algebra dimension (5..8 give 7, 11, 17, 25).
long conjecture_value(long n);

/// Renderings of the classification list.
std::string classification_text(int dim, const std::vector<ClassificationEntry>& list);
std::string classification_json(int dim, const std::vector<ClassificationEntry>& list);
std::string classification_csv(int dim, const std::vector<ClassificationEntry>& list);

/// Bundled transcription of the reference classification list: printed
/// representative tuples and printed product rows, kept verbatim including
/// its slips, for cross-checking against regenerated tables.
struct ReferenceRow {
  int i = 0;  // row e_i e_1
  std::vector<std::pair<int, ExprPtr>> coeffs;  // (k, coefficient of e_k)
};
struct ReferenceItem {
  int index = 0;
  std::vector<ExprPtr> tuple;  // a3..an, th over l1..l4
  std::vector<ReferenceRow> rows;
};
const std::vector<ReferenceItem>& reference_items(int dim);

/// One disagreement between the bundled transcription and the tables
/// regenerated from the registry parameters.
struct TableDiscrepancy {
  int dim = 0;
  int index = 0;            // item number
  std::string stratum_id;
  std::string kind;         // "tuple" or "product"
  std::string location;     // "a6" / "th" or "e2 e1"
  std::string detail;       // printed vs generated values at a sample point
};

/// Compares the regenerated classification tables against the bundled
/// transcription at two guard-safe slot instantiations and reports every
/// stable disagreement (the documented reference-list slips).
std::vector<TableDiscrepancy> cross_check_reference_tables(int dim);

}  // namespace filiform
