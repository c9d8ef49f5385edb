#pragma once

#include <cstdint>

#include "filiform/scalar.hpp"

namespace filiform {

/// Deterministic 64-bit generator (splitmix64). Hand-rolled so that seeded
/// runs produce byte-identical output on every platform; the standard
/// library's distributions are implementation-defined and would break the
/// reproducibility contract of the audit reports.
struct Splitmix64 {
  std::uint64_t state;

  explicit Splitmix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform value in [lo, hi] (inclusive); hi >= lo.
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Derived stream for per-sample determinism independent of draw order.
  Splitmix64 fork(std::uint64_t salt) const {
    return Splitmix64(state ^ (salt * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL));
  }
};

/// Random rational with numerator in [-num_bound, num_bound] and denominator
/// in [1, den_bound]. Canonical by construction.
inline Rational rand_rational(Splitmix64& g, long num_bound = 12,
                              long den_bound = 4) {
  Rational r(g.range(-num_bound, num_bound), g.range(1, den_bound));
  r.canonicalize();
  return r;
}

/// Random Gaussian rational; one draw in four carries a nonzero imaginary
/// part so complex behaviour is exercised without drowning the real case.
inline Scalar rand_scalar(Splitmix64& g, long num_bound = 12,
                          long den_bound = 4) {
  Rational re = rand_rational(g, num_bound, den_bound);
  Rational im = 0;
  if (g.next() % 4 == 0) im = rand_rational(g, num_bound, den_bound);
  return Scalar(std::move(re), std::move(im));
}

inline Scalar rand_nonzero_scalar(Splitmix64& g, long num_bound = 12,
                                  long den_bound = 4) {
  for (;;) {
    Scalar s = rand_scalar(g, num_bound, den_bound);
    if (!s.is_zero()) return s;
  }
}

}  // namespace filiform
