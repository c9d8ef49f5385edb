#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "filiform/action.hpp"
#include "filiform/expr.hpp"
#include "filiform/params.hpp"

namespace filiform {

/// Corrected coordinates of a tuple: delta[k] pairs alpha_k with the Catalan
/// correction (D4 = a4 + 2 a3^2, D5 = a5 - 5 a3^3, D6 = a6 + 14 a3^4,
/// D7 = a7 - 42 a3^5, and so on with alternating signs), theta_last is
/// th - a_n. Under the adapted action these scale cleanly on the relevant
/// vanishing loci, which is what makes the stratum predicates well defined.
struct DeltaTheta {
  int n = 4;
  std::vector<Scalar> delta;  // D4..Dn, length n-3
  Scalar theta_last;          // th - a_n

  const Scalar& d(int k) const { return delta.at(static_cast<std::size_t>(k) - 4); }
};

/// Corrected coordinates of p (any n >= 4).
DeltaTheta deltas(const ParamVector& p);

/// Symbol table a3..an, th, D4..Dn, Th{n} used by registry expressions.
SymbolTable symbol_table_for(const ParamVector& p);

/// Evaluates one registry expression at p. DivisionByZero from the
/// evaluation is rethrown as DenominatorZero tagged with `where`.
Scalar eval_at(const ExprPtr& expr, const ParamVector& p, std::string_view where);

/// Values of the complete orbit invariants of one stratum at p. A vanishing
/// denominator means p lies outside the stratum: DenominatorZero.
/// UnsupportedDimension / RegistryError propagate from the registry lookup.
std::vector<Scalar> stratum_invariants(int dim, std::string_view stratum_id,
                                       const ParamVector& p);

/// Values of the reconstruction forms (they coincide with the invariants
/// for every bundled stratum; kept separate because the contract allows the
/// two roles to differ).
std::vector<Scalar> stratum_param_invariants(int dim, std::string_view stratum_id,
                                             const ParamVector& p);

/// True when every invariant of the stratum evaluates equal at p and at the
/// image of p under the pair. DenominatorZero propagates (the caller is
/// asserting in-stratum inputs).
bool is_invariant_under_action(int dim, std::string_view stratum_id,
                               const ParamVector& p, const AdaptedPair& pair);

/// The distinguished base change for a tuple with a3 != 0 and D4 != 0: it
/// maps p to a tuple with head (a3', a4') = (1, 0), whose remaining entries
/// (a5', ..., an', th') -- returned here, length n-3 -- are constant on the
/// orbit of p intersected with that normalized slice. Throws NotInU1 when
/// a3 = 0 or D4 = 0.
std::vector<Scalar> normalized_signature(const ParamVector& p);

}  // namespace filiform
