#include "filiform/invariants.hpp"

#include <cassert>

#include "filiform/errors.hpp"
#include "filiform/registry.hpp"

namespace filiform {

DeltaTheta deltas(const ParamVector& p) {
  DeltaTheta out;
  out.n = p.n;
  // Catalan corrections: D_k = a_k - (-1)^k C_{k-2} a3^{k-2} with
  // C_2, C_3, C_4, C_5, ... = 2, 5, 14, 42, ...
  Scalar a3_pow = p.a(3) * p.a(3);  // a3^{k-2}, starting at k = 4
  Rational catalan(2);              // C_{k-2}, starting at k = 4
  int sign = 1;                     // -(-1)^k, starting at k = 4
  for (int k = 4; k <= p.n; ++k) {
    out.delta.push_back(p.a(k) + Scalar(Rational(sign * catalan)) * a3_pow);
    a3_pow *= p.a(3);
    catalan = catalan * 2 * (2 * k - 3) / k;  // C_{m+1} = C_m 2(2m+1)/(m+2)
    sign = -sign;
  }
  out.theta_last = p.theta - p.a(p.n);
  return out;
}

SymbolTable symbol_table_for(const ParamVector& p) {
  SymbolTable table;
  for (int k = 3; k <= p.n; ++k) table["a" + std::to_string(k)] = p.a(k);
  table["th"] = p.theta;
  DeltaTheta dt = deltas(p);
  for (int k = 4; k <= p.n; ++k) table["D" + std::to_string(k)] = dt.d(k);
  table["Th" + std::to_string(p.n)] = dt.theta_last;
  return table;
}

Scalar eval_at(const ExprPtr& expr, const ParamVector& p, std::string_view where) {
  try {
    return eval_expr(expr, symbol_table_for(p));
  } catch (const DivisionByZero&) {
    throw DenominatorZero(std::string(where) +
                          ": denominator vanished; tuple outside the stratum");
  }
}

namespace {

std::vector<Scalar> eval_list(const std::vector<ExprPtr>& exprs, int dim,
                              std::string_view stratum_id, const ParamVector& p) {
  if (p.dim() != dim) {
    throw DimensionMismatch("tuple has dimension " + std::to_string(p.dim()) +
                            ", stratum lives in dimension " + std::to_string(dim));
  }
  std::vector<Scalar> out;
  out.reserve(exprs.size());
  for (std::size_t i = 0; i < exprs.size(); ++i) {
    out.push_back(eval_at(exprs[i], p,
                          "stratum " + std::string(stratum_id) + " invariant #" +
                              std::to_string(i + 1)));
  }
  return out;
}

}  // namespace

std::vector<Scalar> stratum_invariants(int dim, std::string_view stratum_id,
                                       const ParamVector& p) {
  const StratumDef& def = Registry::instance().stratum(dim, stratum_id);
  return eval_list(def.invariants, dim, stratum_id, p);
}

std::vector<Scalar> stratum_param_invariants(int dim, std::string_view stratum_id,
                                             const ParamVector& p) {
  const StratumDef& def = Registry::instance().stratum(dim, stratum_id);
  return eval_list(def.param_invariants, dim, stratum_id, p);
}

bool is_invariant_under_action(int dim, std::string_view stratum_id,
                               const ParamVector& p, const AdaptedPair& pair) {
  return stratum_invariants(dim, stratum_id, p) ==
         stratum_invariants(dim, stratum_id, rho_apply(pair, p));
}

std::vector<Scalar> normalized_signature(const ParamVector& p) {
  if (p.a(3).is_zero()) {
    throw NotInU1("normalized signature needs a3 != 0");
  }
  DeltaTheta dt = deltas(p);
  if (dt.d(4).is_zero()) {
    throw NotInU1("normalized signature needs a4 + 2 a3^2 != 0");
  }
  // Distinguished pair: x0 = 2 a3 / D4, y0 = a4 / (2 a3^2), acting as
  // (A, B) = (1/x0, y0/x0). It sends the head to (1, 0).
  Scalar x0 = Scalar(2) * p.a(3) / dt.d(4);
  Scalar y0 = p.a(4) / (Scalar(2) * p.a(3) * p.a(3));
  AdaptedPair pair{inv(x0), y0 / x0};
  ParamVector q = rho_apply(pair, p);
  assert(q.a(3) == Scalar(1) && q.a(4) == Scalar(0));
  std::vector<Scalar> sig;
  for (int k = 5; k <= q.n; ++k) sig.push_back(q.a(k));
  sig.push_back(q.theta);
  return sig;
}

}  // namespace filiform
