#pragma once

#include <mpfr.h>

#include <string>

#include "bellhopf/exact.hpp"

namespace bellhopf {

/// Owning handle for an MPFR number with an explicit binary precision.
/// Arithmetic results take the larger operand precision and round to nearest.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits = 64);
  BigFloat(const Rational& q, mpfr_prec_t bits, mpfr_rnd_t rnd = MPFR_RNDN);
  BigFloat(double d, mpfr_prec_t bits);
  ~BigFloat();

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;

  /// Bits needed for `digits` significant decimal digits.
  static mpfr_prec_t bits_for_digits(unsigned digits);

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant digits, e.g. "4.14e+03".
  std::string to_string(unsigned digits) const;
  /// Exact value of this binary float.
  Rational to_rational() const;

  bool is_finite() const { return mpfr_number_p(value_) != 0; }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat abs(const BigFloat& a);
  friend BigFloat exp(const BigFloat& a);
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }

 private:
  mpfr_t value_;
};

}  // namespace bellhopf
