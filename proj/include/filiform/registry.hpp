#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "filiform/expr.hpp"

namespace filiform {

/// One clause of a stratum membership test: expr = 0 or expr != 0. The
/// expression is over the tuple symbols a3..a7, th and the derived symbols
/// D4..D7 (corrected-coordinate combinations) and Th4..Th7 (th - a_k).
struct PredicateClause {
  ExprPtr expr;
  bool require_nonzero = false;
};

/// Definition of one stratum of the orbit space in a fixed dimension.
///
/// `invariants` are the complete orbit invariants: two members of the
/// stratum are isomorphic iff the lists evaluate equal. For parametric
/// strata `family` gives the representative tuple as expressions in the
/// free slots l1..l4; every `guards` entry must evaluate nonzero at an
/// instantiation for the representative to stay inside the stratum (and
/// keep the invariants' denominators alive). `param_invariants` equal
/// `invariants` unless the reconstruction uses a different shape.
struct StratumDef {
  int dim = 0;
  std::string id;  // "U1".."U25", in classification (first-match) order
  bool parametric = false;
  std::vector<PredicateClause> predicate;
  std::vector<ExprPtr> invariants;
  std::vector<ExprPtr> param_invariants;
  std::vector<ExprPtr> family;  // dim-2 entries: a3..an then th
  std::vector<ExprPtr> guards;
  int lambda_count = 0;  // free slots l1..l_m referenced by family
  std::string notes;     // discrepancies of the bundled reference list, if any
};

/// Parsed, validated stratum registry. The default data is compiled in;
/// setting the environment variable FILIFORM_REGISTRY to a file path
/// replaces it (same format, same validation).
class Registry {
 public:
  /// Process-wide instance. Throws RegistryError if an override file is
  /// unreadable or fails validation.
  static const Registry& instance();

  /// Builds a registry from source text (exposed for tests and tooling).
  static Registry from_text(std::string_view text);

  /// Parses a registry file (same format as the bundled text).
  static Registry from_file(const std::string& path);

  int version() const { return version_; }
  const std::vector<int>& dims() const { return dims_; }
  bool has_dim(int dim) const { return by_dim_.count(dim) != 0; }

  /// Strata of one dimension in classification order.
  /// Throws UnsupportedDimension outside the registered set.
  const std::vector<StratumDef>& strata(int dim) const;

  /// Lookup by id; throws RegistryError when absent.
  const StratumDef& stratum(int dim, std::string_view id) const;

  /// Dimension-level notes (coverage corners, overlap blocks); "" if none.
  const std::string& dim_notes(int dim) const;

  /// Documented uncovered corners: loci matched by no stratum predicate.
  /// Each corner is a clause conjunction like a predicate.
  const std::vector<std::vector<PredicateClause>>& corners(int dim) const;

  /// Documented predicate overlaps: id lists whose predicates share points
  /// (classification order disambiguates them).
  const std::vector<std::vector<std::string>>& documented_overlaps(int dim) const;

  /// The source text this registry was parsed from (for dump / audit).
  const std::string& source() const { return source_; }

 private:
  int version_ = 0;
  std::string source_;
  std::vector<int> dims_;
  std::map<int, std::vector<StratumDef>> by_dim_;
  std::map<int, std::string> dim_notes_;
  std::map<int, std::vector<std::vector<PredicateClause>>> corners_;
  std::map<int, std::vector<std::vector<std::string>>> overlaps_;
};

/// Compiled-in registry source.
std::string_view default_registry_text();

}  // namespace filiform
