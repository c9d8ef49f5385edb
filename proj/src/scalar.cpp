#include "filiform/scalar.hpp"

#include <cctype>
#include <cstddef>

namespace filiform {

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw DivisionByZero("scalar division by zero");
  // (a / b) = a * conj(b) / |b|^2, all exact.
  Rational norm = b.re * b.re + b.im * b.im;
  Scalar num(a.re * b.re + a.im * b.im, a.im * b.re - a.re * b.im);
  return Scalar(num.re / norm, num.im / norm);
}

Scalar inv(const Scalar& a) {
  if (a.is_zero()) throw DivisionByZero("inverse of zero");
  Rational norm = a.re * a.re + a.im * a.im;
  return Scalar(a.re / norm, -a.im / norm);
}

Scalar pow(const Scalar& a, long k) {
  if (k < 0) return inv(pow(a, -k));
  Scalar result(1);
  Scalar base = a;
  // Binary powering; exponents here are tiny but exactness is free.
  for (long e = k; e > 0; e >>= 1) {
    if (e & 1) result *= base;
    if (e > 1) base *= base;
  }
  return result;
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
  }
};

mpz_class parse_digits(Cursor& c, const char* what) {
  std::size_t start = c.pos;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek())))
    ++c.pos;
  if (c.pos == start)
    throw ParseError(std::string("expected ") + what, start);
  return mpz_class(std::string(c.text.substr(start, c.pos - start)), 10);
}

/// rational := ('+'|'-')? digits ('/' digits)?   with positive denominator
Rational parse_rational(Cursor& c) {
  bool negative = false;
  if (c.peek() == '+' || c.peek() == '-') {
    negative = (c.peek() == '-');
    ++c.pos;
  }
  mpz_class num = parse_digits(c, "digits");
  mpz_class den = 1;
  if (c.peek() == '/') {
    ++c.pos;
    std::size_t den_pos = c.pos;
    den = parse_digits(c, "denominator digits");
    if (den == 0) throw ParseError("zero denominator", den_pos);
  }
  if (negative) num = -num;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  Cursor c{text};
  c.skip_ws();
  if (c.done()) throw ParseError("empty scalar", 0);
  Rational re = parse_rational(c);
  Rational im = 0;
  c.skip_ws();
  if (c.peek() == '+' || c.peek() == '-') {
    im = parse_rational(c);
    c.skip_ws();
    if (c.peek() != 'i')
      throw ParseError("expected 'i' after imaginary part", c.pos);
    ++c.pos;
  }
  c.skip_ws();
  if (!c.done()) throw ParseError("trailing characters", c.pos);
  return Scalar(std::move(re), std::move(im));
}

std::string format_scalar(const Scalar& s) {
  std::string out = s.re.get_str();
  if (s.im != 0) {
    if (s.im > 0) out += '+';
    out += s.im.get_str();
    out += 'i';
  }
  return out;
}

}  // namespace filiform
