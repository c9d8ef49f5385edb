#pragma once

#include <string>
#include <vector>

#include "filiform/rng.hpp"
#include "filiform/scalar.hpp"

namespace filiform {

/// Parameter tuple (alpha_3, ..., alpha_n, theta) of one first-class
/// filiform Leibniz algebra L(alpha). The algebra dimension is n+1.
struct ParamVector {
  int n = 4;                  // n >= 4; strata-aware operations need n+1 in {5..8}
  std::vector<Scalar> alpha;  // alpha_3 .. alpha_n, length n-2
  Scalar theta;

  ParamVector() : alpha(2) {}
  ParamVector(int n_, std::vector<Scalar> alpha_, Scalar theta_);

  int dim() const { return n + 1; }

  /// alpha_k for 3 <= k <= n.
  const Scalar& a(int k) const { return alpha.at(static_cast<std::size_t>(k) - 3); }
  Scalar& a(int k) { return alpha.at(static_cast<std::size_t>(k) - 3); }

  /// Uniform component view z_3..z_{n+1} with z_{n+1} = theta, the shape the
  /// base-change recursion consumes.
  std::vector<Scalar> z() const;

  friend bool operator==(const ParamVector& p, const ParamVector& q) {
    return p.n == q.n && p.alpha == q.alpha && p.theta == q.theta;
  }
};

/// Compact rendering "L(a3, ..., an, th)" used in reports and tests.
std::string format_params(const ParamVector& p);

/// JSON interchange: {"n": int, "alpha": [scalar-text...], "theta": scalar-text}.
std::string params_to_json(const ParamVector& p);
ParamVector params_from_json(const std::string& json_text);

/// Uniform random tuple for property tests and audits.
ParamVector rand_params(Splitmix64& g, int n, long num_bound = 12,
                        long den_bound = 4);

}  // namespace filiform
