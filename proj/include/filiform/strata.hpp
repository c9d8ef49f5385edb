#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "filiform/params.hpp"
#include "filiform/registry.hpp"
#include "filiform/rng.hpp"

namespace filiform {

/// Strata of one dimension in classification order (registry order).
/// Throws UnsupportedDimension outside {5,6,7,8}.
const std::vector<StratumDef>& enumerate_strata(int dim);

/// True when p satisfies every clause of the stratum's predicate.
bool predicate_matches(const StratumDef& def, const ParamVector& p);

/// Id of the first stratum (in listed order) whose predicate matches p.
/// Throws Unclassifiable on the documented uncovered corners and
/// UnsupportedDimension outside {5,6,7,8}.
std::string classify(const ParamVector& p);

struct ClassificationReport {
  std::string stratum_id;
  bool parametric = false;
  /// Complete orbit invariants; empty for single-orbit strata, and empty
  /// with an explanatory note on the documented locus where an invariant's
  /// denominator vanishes inside the listed predicate.
  std::vector<Scalar> invariants;
  /// Canonical representative, when reconstruction succeeds.
  std::optional<ParamVector> canonical;
  std::string note;
};

/// classify + invariants + canonical representative in one pass. Unlike
/// canonical_representative this does not throw on reconstruction failure;
/// the failure reason lands in `note`.
ClassificationReport classify_full(const ParamVector& p);

/// Representative tuple of the stratum at the given slot values
/// (lambda.size() == def.lambda_count). Throws GuardViolation when a guard
/// expression vanishes at the instantiation.
ParamVector instantiate_family(const StratumDef& def,
                               const std::vector<Scalar>& lambda);

/// The canonical representative of the orbit of p: the member of the
/// bundled family of classify(p) isomorphic to p. Exact three-stage solve:
/// family pattern match, then an affine slot-by-slot solve against the
/// reconstruction invariants, then a postcondition check (same stratum,
/// same invariants). Throws ReconstructionFailure -- never guesses -- on
/// the strata whose reconstruction needs roots of higher-degree
/// polynomials (documented; reachable representatives still work via the
/// pattern match).
ParamVector canonical_representative(const ParamVector& p);

/// Orbit equality test: same stratum and equal invariant lists. Throws
/// DimensionMismatch when p, q live in different dimensions, and
/// DenominatorZero on the documented locus where the bundled invariants
/// are undefined.
bool is_isomorphic(const ParamVector& p, const ParamVector& q);

/// Random member of the stratum: family at random slots (guards enforced),
/// then optionally pushed along a random adapted base change, which keeps
/// the stratum by orbit stability.
ParamVector sample_in_stratum(int dim, std::string_view stratum_id, Splitmix64& g);

/// One problematic sample found by the partition audit.
struct AuditFinding {
  ParamVector sample;
  std::vector<std::string> matched_ids;  // empty: gap; two or more: overlap
  std::string mode;                      // sampling mode that produced it
};

struct AuditReport {
  int dim = 0;
  long samples = 0;
  std::uint64_t seed = 0;
  bool deep = false;
  long gap_count = 0;
  long undocumented_gap_count = 0;  // gaps lying on no documented corner
  long overlap_count = 0;
  std::map<std::string, long> per_stratum;     // first-match coverage
  std::map<std::string, long> overlap_blocks;  // "U9+U10" -> count
  std::vector<AuditFinding> gap_examples;      // capped
  std::vector<AuditFinding> overlap_examples;  // capped
  std::vector<long> corner_hits;     // samples per documented corner
  bool overlaps_documented = false;  // every overlap block is documented
  std::string notes;                 // registry notes for the dimension
  std::string theta_variant;         // recursion tail-step arbitration verdict
  double seconds = 0.0;
};

/// Samples `samples` tuples -- a mix of uniform tuples, tuples driven onto
/// single boundary hypersurfaces, and in-stratum family samples -- and
/// checks that the predicates partition them: every tuple matches exactly
/// one stratum. `deep` adds corner-directed samples (one nonzero clause of
/// a stratum forced to zero), the only mode that reaches the documented
/// uncovered corners.
AuditReport audit_partition(int dim, long samples, std::uint64_t seed,
                            bool deep = false);

std::string audit_report_json(const AuditReport& report);
std::string audit_report_text(const AuditReport& report);

}  // namespace filiform
