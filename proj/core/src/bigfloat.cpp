#include "bellhopf/bigfloat.hpp"

#include <cmath>
#include <utility>

namespace bellhopf {

BigFloat::BigFloat(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const Rational& q, mpfr_prec_t bits, mpfr_rnd_t rnd) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, q.get_mpq_t(), rnd);
}

BigFloat::BigFloat(double d, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_d(value_, d, MPFR_RNDN);
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

mpfr_prec_t BigFloat::bits_for_digits(unsigned digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 1;
}

std::string BigFloat::to_string(unsigned digits) const {
  if (digits == 0) digits = 1;
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Re", static_cast<int>(digits - 1), value_);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

Rational BigFloat::to_rational() const {
  if (mpfr_zero_p(value_)) return 0;
  Integer mantissa;
  const mpfr_exp_t e = mpfr_get_z_2exp(mantissa.get_mpz_t(), value_);
  Rational q(mantissa);
  if (e >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return q;
}

namespace {

template <class Op>
BigFloat binary(const BigFloat& a, const BigFloat& b, Op op) {
  BigFloat r(std::max(a.precision(), b.precision()));
  op(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_add); }
BigFloat operator-(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_sub); }
BigFloat operator*(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_mul); }
BigFloat operator/(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_div); }

BigFloat abs(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_abs(r.get(), a.get(), MPFR_RNDN);
  return r;
}

BigFloat exp(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_exp(r.get(), a.get(), MPFR_RNDN);
  return r;
}

}  // namespace bellhopf
