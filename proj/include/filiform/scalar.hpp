#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "filiform/errors.hpp"

namespace filiform {

/// Exact rational number. Backed by GMP; every constructor and operation
/// below keeps values canonical (gcd(|num|, den) = 1, den > 0, zero = 0/1).
using Rational = mpq_class;

/// Gaussian rational: re + im*i with exact rational components. This is the
/// computable subfield of the complex numbers in which every quantity of the
/// classification (parameters, base-change entries, invariant values,
/// structure constants) lives.
struct Scalar {
  Rational re;
  Rational im;

  Scalar() : re(0), im(0) {}
  Scalar(long v) : re(v), im(0) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(Rational r) : re(std::move(r)), im(0) {}
  Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) {
    return !(a == b);
  }

  Scalar operator-() const { return Scalar(-re, -im); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar(a.re + b.re, a.im + b.im);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return Scalar(a.re - b.re, a.im - b.im);
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  /// Exact complex division; throws DivisionByZero when b = 0.
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
};

/// Multiplicative inverse; throws DivisionByZero on zero.
Scalar inv(const Scalar& a);

/// Integer power; k < 0 requires a != 0 (DivisionByZero otherwise).
Scalar pow(const Scalar& a, long k);

/// Parses the scalar grammar `rational ((+|-) rational "i")?` with
/// rational = `int ("/" posint)?`. Surrounding whitespace is ignored.
/// Throws ParseError (with offset) on malformed text or a zero denominator.
Scalar parse_scalar(std::string_view text);

/// Canonical rendering, inverse to parse_scalar: "p", "p/q", "p+q i" style
/// without spaces, e.g. "-2", "1/3+2/5i", "0-1i".
std::string format_scalar(const Scalar& s);

/// Convenience literal for tests and tables: exact value from text.
inline Scalar operator""_q(const char* text, std::size_t len) {
  return parse_scalar(std::string_view(text, len));
}

}  // namespace filiform
