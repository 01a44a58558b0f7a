#include "bellhopf/dobinski.hpp"

#include "bellhopf/errors.hpp"

namespace bellhopf {

namespace {

// k^n y^k / k! exactly; 0^0 = 1.
Rational dobinski_term(unsigned n, const Rational& y, unsigned k) {
  Integer power;
  mpz_ui_pow_ui(power.get_mpz_t(), k, n);
  Rational y_pow;
  mpz_pow_ui(mpq_numref(y_pow.get_mpq_t()), mpq_numref(y.get_mpq_t()), k);
  mpz_pow_ui(mpq_denref(y_pow.get_mpq_t()), mpq_denref(y.get_mpq_t()), k);
  return Rational(power) * y_pow / Rational(factorial(k));
}

// e^{-y} rounded in direction `rnd`.
BigFloat exp_neg(const Rational& y, mpfr_prec_t bits, mpfr_rnd_t rnd) {
  // exp is increasing: round -y in the same direction as the result.
  BigFloat arg(Rational(-y), bits, rnd);
  BigFloat r(bits);
  mpfr_exp(r.get(), arg.get(), rnd);
  return r;
}

}  // namespace

BigFloat DobinskiResult::error_bound() const {
  BigFloat r(std::max(tail_bound.precision(), rounding_bound.precision()));
  mpfr_add(r.get(), tail_bound.get(), rounding_bound.get(), MPFR_RNDU);
  return r;
}

bool DobinskiResult::brackets(const Rational& exact) const {
  const BigFloat bound = error_bound();
  if (!bound.is_finite()) return true;
  return abs(value.to_rational() - exact) <= bound.to_rational();
}

DobinskiResult dobinski_bell_poly(unsigned n, const Rational& y, unsigned terms, unsigned digits) {
  if (y <= 0) throw DomainError("dobinski: y must be positive");
  if (terms < 1) throw DomainError("dobinski: need at least one term (K >= 1)");
  if (digits < 10) throw DomainError("dobinski: precision below 10 digits cannot certify anything");

  const mpfr_prec_t bits = BigFloat::bits_for_digits(digits);

  Rational partial = 0;
  for (unsigned k = 0; k <= terms; ++k) partial += dobinski_term(n, y, k);

  // value = round(round(partial) * round(exp(-round(y)))).
  const BigFloat partial_f(partial, bits);
  const BigFloat weight = exp_neg(y, bits, MPFR_RNDN);
  BigFloat value = partial_f * weight;

  // Each of the four roundings is at most one ulp relative (u = 2^{1-p});
  // rounding y perturbs exp(-y) by a relative y*u. Budget (5 + y) u |value|.
  BigFloat rounding(bits);
  {
    Rational u(1);
    mpq_div_2exp(u.get_mpq_t(), u.get_mpq_t(), static_cast<mp_bitcnt_t>(bits - 1));
    const Rational factor = (Rational(5) + y) * u;
    mpfr_abs(rounding.get(), value.get(), MPFR_RNDU);
    BigFloat f(factor, bits, MPFR_RNDU);
    mpfr_mul(rounding.get(), rounding.get(), f.get(), MPFR_RNDU);
  }

  // For k >= K+1 the term ratio y (1 + 1/k)^n / (k + 1) decreases in k, so the
  // tail is at most t_{K+1} / (1 - r) with r the ratio at k = K+1.
  BigFloat tail(bits);
  {
    const unsigned first = terms + 1;
    Rational ratio = y / Rational(first + 1);
    const Rational step(first + 1, first);
    for (unsigned i = 0; i < n; ++i) ratio *= step;
    if (ratio >= 1) {
      mpfr_set_inf(tail.get(), 1);
    } else {
      const Rational tail_q = dobinski_term(n, y, first) / (Rational(1) - ratio);
      const BigFloat tail_f(tail_q, bits, MPFR_RNDU);
      const BigFloat weight_up = exp_neg(y, bits, MPFR_RNDU);
      mpfr_mul(tail.get(), tail_f.get(), weight_up.get(), MPFR_RNDU);
    }
  }

  return DobinskiResult{std::move(value), std::move(tail), std::move(rounding), terms, digits};
}

DobinskiResult dobinski_bell(unsigned n, unsigned terms, unsigned digits) {
  return dobinski_bell_poly(n, Rational(1), terms, digits);
}

}  // namespace bellhopf
