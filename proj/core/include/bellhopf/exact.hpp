#pragma once

#include <gmpxx.h>

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>

namespace bellhopf {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p", "p/q" or a finite decimal such as "2.75" into a
/// canonical rational. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form ("p" when the denominator is 1).
std::string to_string(const Rational& value);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

/// Gaussian rational: exact complex number with rational parts.
struct RationalComplex {
  Rational re;
  Rational im;

  RationalComplex() = default;
  RationalComplex(Rational real) : re(std::move(real)) {}  // NOLINT(implicit)
  RationalComplex(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}
  RationalComplex(long real) : re(real) {}  // NOLINT(implicit)

  RationalComplex conj() const { return {re, -im}; }
  /// |z|^2
  Rational norm() const { return re * re + im * im; }
  bool is_real() const { return im == 0; }
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  RationalComplex& operator+=(const RationalComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  RationalComplex& operator-=(const RationalComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  RationalComplex& operator*=(const RationalComplex& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  RationalComplex& operator/=(const RationalComplex& o);

  friend RationalComplex operator+(RationalComplex a, const RationalComplex& b) { return a += b; }
  friend RationalComplex operator-(RationalComplex a, const RationalComplex& b) { return a -= b; }
  friend RationalComplex operator*(RationalComplex a, const RationalComplex& b) { return a *= b; }
  friend RationalComplex operator/(RationalComplex a, const RationalComplex& b) { return a /= b; }
  friend RationalComplex operator-(const RationalComplex& a) { return {-a.re, -a.im}; }
  friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

std::string to_string(const RationalComplex& value);
std::ostream& operator<<(std::ostream& os, const RationalComplex& value);

}  // namespace bellhopf
