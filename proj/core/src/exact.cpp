#include "bellhopf/exact.hpp"

#include <cctype>
#include <ostream>

#include "bellhopf/errors.hpp"

namespace bellhopf {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string_view body = text.substr(pos);
  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num)) throw ParseError("expected integer numerator", pos);
    if (!all_digits(den)) throw ParseError("expected integer denominator", pos + slash + 1);
    Integer d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator", pos + slash + 1);
    result = Rational(Integer(std::string(num)), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (!(whole.empty() || all_digits(whole)) || !(frac.empty() || all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw ParseError("malformed decimal", pos);
    }
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer digits(std::string(whole.empty() ? "0" : whole) + std::string(frac));
    result = Rational(digits, scale);
  } else {
    if (!all_digits(body)) throw ParseError("expected a rational number", pos);
    result = Rational(Integer(std::string(body)));
  }
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

std::string to_string(const Rational& value) {
  Rational v(value);
  v.canonicalize();
  return v.get_str();
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

RationalComplex& RationalComplex::operator/=(const RationalComplex& o) {
  const Rational d = o.norm();
  if (d == 0) throw DomainError("division by zero");
  *this *= o.conj();
  re /= d;
  im /= d;
  return *this;
}

std::string to_string(const RationalComplex& value) {
  if (value.im == 0) return to_string(value.re);
  const Rational mag = abs(value.im);
  const std::string imag = (mag == 1 ? std::string() : to_string(mag) + "*") + "i";
  if (value.re == 0) return (value.im < 0 ? "-" : "") + imag;
  return to_string(value.re) + (value.im < 0 ? " - " : " + ") + imag;
}

std::ostream& operator<<(std::ostream& os, const RationalComplex& value) { return os << to_string(value); }

}  // namespace bellhopf
