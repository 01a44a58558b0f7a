#include "bellhopf/egf.hpp"

#include <gtest/gtest.h>

#include <random>

#include "bellhopf/boson.hpp"
#include "bellhopf/boson_text.hpp"
#include "bellhopf/combinatorics.hpp"
#include "bellhopf/errors.hpp"
#include "fixtures.hpp"

namespace bellhopf {
namespace {

EGFSeries series(std::initializer_list<long> values) {
  std::vector<Rational> c;
  for (long v : values) c.emplace_back(v);
  return EGFSeries(std::move(c));
}

EGFSeries random_series(std::mt19937_64& rng, unsigned order, long constant) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 9);
  std::vector<Rational> c{Rational(constant)};
  for (unsigned n = 1; n <= order; ++n) c.push_back(ratio(num(rng), den(rng)));
  return EGFSeries(std::move(c));
}

TEST(EgfMul, ExponentialSquaredIsTwoToTheN) {
  const auto e = EGFSeries::exponential(10);
  const auto sq = egf_mul(e, e);
  for (unsigned n = 0; n <= 10; ++n) EXPECT_EQ(sq[n], Rational(1L << n));
}

TEST(EgfMul, IdentityIsNeutral) {
  std::mt19937_64 rng(1);
  const auto a = random_series(rng, 9, 4);
  EXPECT_EQ(egf_mul(a, EGFSeries::identity(9)), a);
  EXPECT_EQ(egf_mul(EGFSeries::identity(9), a), a);
}

TEST(EgfMul, ExpMinusOneSquared) {
  const auto c = EGFSeries::exponential(12) - EGFSeries::identity(12);
  const auto sq = egf_mul(c, c);
  EXPECT_EQ(sq[0], 0);
  for (unsigned n = 1; n <= 12; ++n) EXPECT_EQ(sq[n], Rational((1L << n) - 2)) << n;
}

TEST(EgfMul, MixedOrdersTruncateToMinimum) {
  const auto p = egf_mul(EGFSeries::exponential(3), EGFSeries::exponential(7));
  EXPECT_EQ(p.order(), 3u);
  EXPECT_EQ((EGFSeries::exponential(3) + EGFSeries::exponential(7)).order(), 3u);
}

TEST(EgfExp, ExpMinusOneGivesBell) {
  const auto a = egf_exp(EGFSeries::exponential(15) - EGFSeries::identity(15));
  for (unsigned n = 0; n <= 15; ++n) EXPECT_EQ(a[n], Rational(bell(n))) << n;
}

TEST(EgfExp, ZeroAndLinear) {
  EXPECT_EQ(egf_exp(EGFSeries::zero(6)), EGFSeries::identity(6));
  EXPECT_EQ(egf_exp(series({0, 1, 0, 0, 0, 0})), EGFSeries::exponential(5));
}

TEST(EgfExp, RejectsConstantTerm) { EXPECT_THROW(egf_exp(series({1, 1, 1})), DomainError); }

TEST(EgfLog, BellGivesOneConnectedPerOrder) {
  const auto c = egf_log(bell_egf(8));
  EXPECT_EQ(c[0], 0);
  for (unsigned n = 1; n <= 8; ++n) EXPECT_EQ(c[n], 1) << n;
  const auto big = egf_log(bell_egf(30));
  for (unsigned n = 1; n <= 30; ++n) EXPECT_EQ(big[n], 1) << n;
}

TEST(EgfLog, IdentityGivesZero) { EXPECT_EQ(egf_log(EGFSeries::identity(7)), EGFSeries::zero(7)); }

TEST(EgfLog, RejectsBadConstantTerm) {
  EXPECT_THROW(egf_log(series({2, 1, 1})), DomainError);
  EXPECT_THROW(egf_log(series({0, 1})), DomainError);
}

TEST(EgfExpLog, MutualInversesOnRandomSeries) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 40; ++i) {
    const auto a = random_series(rng, 12, 1);
    EXPECT_EQ(egf_exp(egf_log(a)), a);
    const auto c = random_series(rng, 12, 0);
    EXPECT_EQ(egf_log(egf_exp(c)), c);
  }
}

TEST(EgfExp, SumMapsToProduct) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 30; ++i) {
    const auto c1 = random_series(rng, 10, 0);
    const auto c2 = random_series(rng, 10, 0);
    EXPECT_EQ(egf_exp(c1 + c2), egf_mul(egf_exp(c1), egf_exp(c2)));
  }
}

TEST(BellEgf, Values) {
  EXPECT_EQ(bell_egf(6), series({1, 1, 2, 5, 15, 52, 203}));
  EXPECT_EQ(bell_egf(0), series({1}));
  EXPECT_EQ(bell_egf(10)[10], 115975);
}

TEST(BellEgf, AgreesWithCoherentStateMoments) {
  const auto moments = word_moments(parse_boson_expression("ad a"), 12, RationalComplex(1));
  const auto egf = bell_egf(12);
  for (unsigned n = 0; n <= 12; ++n) EXPECT_EQ(RationalComplex(egf[n]), moments[n]) << n;
}

TEST(WToV, BellPolynomialMomentsHaveConstantCumulants) {
  // z = 1 + i, |z|^2 = 2.
  const RationalComplex z(1, 1);
  const auto w = word_moments(parse_boson_expression("ad a"), 10, z);
  const auto v = w_to_v<RationalComplex>(w);
  ASSERT_EQ(v.size(), 10u);
  for (const auto& vn : v) EXPECT_EQ(vn, RationalComplex(2));

  const auto wd = word_moments(parse_boson_expression("ad a"), 10, z.to_complex());
  for (const auto& vn : w_to_v<std::complex<double>>(wd)) EXPECT_NEAR(std::abs(vn - 2.0), 0.0, 1e-9);
}

TEST(WToV, BellNumbersHaveUnitCumulants) {
  const auto w = bell_egf(9).coefficients();
  for (const auto& vn : w_to_v<Rational>(w)) EXPECT_EQ(vn, 1);
}

TEST(WToV, IdentitySequenceHasZeroCumulants) {
  const std::vector<Rational> w{1, 0, 0, 0, 0};
  for (const auto& vn : w_to_v<Rational>(w)) EXPECT_EQ(vn, 0);
}

TEST(WToV, RequiresNormalizedMoments) {
  const std::vector<Rational> w{2, 1, 1};
  EXPECT_THROW(w_to_v<Rational>(w), DomainError);
  EXPECT_THROW(w_to_v<Rational>(std::span<const Rational>{}), DomainError);
}

TEST(VToW, MirrorsOfWToV) {
  const std::vector<Rational> ones(8, Rational(1));
  EXPECT_EQ(v_to_w<Rational>(ones), bell_egf(8).coefficients());
  const std::vector<Rational> zeros(5, Rational(0));
  EXPECT_EQ(v_to_w<Rational>(zeros), (std::vector<Rational>{1, 0, 0, 0, 0, 0}));
}

TEST(VToW, RoundTripOnRandomCumulants) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 30; ++i) {
    const auto s = random_series(rng, 8, 0);
    const std::vector<Rational> v(s.coefficients().begin() + 1, s.coefficients().end());
    EXPECT_EQ(w_to_v<Rational>(v_to_w<Rational>(v)), v);
  }
}

TEST(VToW, ComplexRoundTripWithinTolerance) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<std::complex<double>> v;
  for (int n = 0; n < 10; ++n) v.emplace_back(u(rng), u(rng));
  const auto back = w_to_v<std::complex<double>>(v_to_w<std::complex<double>>(v));
  ASSERT_EQ(back.size(), v.size());
  for (std::size_t n = 0; n < v.size(); ++n) EXPECT_LT(std::abs(back[n] - v[n]), 1e-9 * (1 + std::abs(v[n])));
}

TEST(EgfSeries, Invariants) {
  EXPECT_THROW(EGFSeries(std::vector<Rational>{}), DomainError);
  EXPECT_EQ(EGFSeries::exponential(5).truncated(2), series({1, 1, 1}));
  EXPECT_EQ(EGFSeries::exponential(5).truncated(9).order(), 5u);
}

}  // namespace
}  // namespace bellhopf
