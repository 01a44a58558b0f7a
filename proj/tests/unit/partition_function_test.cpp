#include "bellhopf/partition_function.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <tuple>

#include "bellhopf/boson_text.hpp"
#include "bellhopf/combinatorics.hpp"
#include "bellhopf/errors.hpp"
#include "bellhopf/quadrature.hpp"

namespace bellhopf {
namespace {

const double kLn2 = std::numbers::ln2;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

QuadratureConfig analytic(double m) { return {m, QuadratureMethod::analytic, 64, 1e-10}; }
QuadratureConfig gauss(double m, unsigned panels = 64) { return {m, QuadratureMethod::gauss, panels, 1e-10}; }

TEST(ModelParams, Validation) {
  EXPECT_THROW(ModelParams(0, 1), DomainError);
  EXPECT_THROW(ModelParams(1, -1), DomainError);
  EXPECT_THROW(ModelParams(std::nan(""), 1), DomainError);
  const ModelParams p(2, 0.25);
  EXPECT_DOUBLE_EQ(p.x(), -0.5);
  EXPECT_NEAR(p.alpha(), 1 - std::exp(-0.5), 1e-16);
  EXPECT_GT(ModelParams::from_beta_epsilon(1e-12).alpha(), 0);
  EXPECT_LE(ModelParams::from_beta_epsilon(40).alpha(), 1.0);
}

TEST(ClosedForm, Values) {
  EXPECT_NEAR(closed_form_Z(ModelParams::from_beta_epsilon(kLn2)), 2.0, 1e-15);
  EXPECT_NEAR(closed_form_Z(ModelParams::from_beta_epsilon(1)), 1.5819767068693265, 1e-15);
  EXPECT_NEAR(closed_form_Z(ModelParams::from_beta_epsilon(50)), 1.0, 1e-15);
  // Smaller beta means more thermally occupied levels.
  EXPECT_GT(closed_form_Z(ModelParams::from_beta_epsilon(0.1)), closed_form_Z(ModelParams::from_beta_epsilon(0.2)));
}

TEST(Integrand, Examples) {
  const auto p = ModelParams::from_beta_epsilon(0.8);
  EXPECT_EQ(integrand(0, p), 1.0);
  EXPECT_NEAR(integrand(1 / p.alpha(), p), std::exp(-1.0), 1e-15);
}

TEST(Integrand, IsTheBellPolynomialGeneratingFunction) {
  const double y = 2, x = -0.7;
  const double direct = std::exp(y * std::expm1(x));
  auto partial = [&](unsigned order) {
    double sum = 0, xn = 1;
    for (unsigned n = 0; n <= order; ++n) {
      sum += bell_polynomial(n, Rational(2)).get_d() * xn / factorial(n).get_d();
      xn *= x;
    }
    return sum;
  };
  // The order-20 remainder is 2.2002519568e-6 (50-digit reference); 10^-10
  // needs order 30.
  EXPECT_NEAR(partial(20) - direct, 2.2002519568e-6, 1e-15);
  EXPECT_NEAR(truncated_bell_integrand(y, x, 20) - direct, 2.2002519568e-6, 1e-15);
  EXPECT_NEAR(partial(30), direct, 1e-10);
  EXPECT_NEAR(truncated_bell_integrand(y, x, 30), direct, 1e-10);
  const ModelParams p(0.7, 1);
  EXPECT_NEAR(integrand(y, p), direct, 1e-15);
}

TEST(RegularizedZ, AnalyticAtLn2) {
  const auto r = regularized_Z(ModelParams::from_beta_epsilon(kLn2), analytic(100));
  EXPECT_LE(std::abs(r.value - 2.0), 1e-20);
  EXPECT_EQ(r.error_estimate, 0.0);
}

TEST(RegularizedZ, GaussMatchesClosedForm) {
  const auto p = ModelParams::from_beta_epsilon(1);
  const double m = cutoff_for_tail(p, 1e-13);
  EXPECT_LT(std::exp(-p.alpha() * m), 1e-12);
  const auto r = regularized_Z(p, gauss(m));
  EXPECT_LE(std::abs(r.value - closed_form_Z(p)), 1e-10);
  EXPECT_NEAR(r.value, regularized_Z(p, analytic(m)).value, 1e-12);
}

TEST(RegularizedZ, DoublingCutoffSquaresRelativeTail) {
  const auto p = ModelParams::from_beta_epsilon(0.5);
  const double z = closed_form_Z(p);
  for (double m : {5.0, 10.0, 20.0}) {
    const double t1 = (z - regularized_Z(p, analytic(m)).value) / z;
    const double t2 = (z - regularized_Z(p, analytic(2 * m)).value) / z;
    EXPECT_NEAR(t2, t1 * t1, 1e-12 + 1e-6 * t1 * t1) << m;
  }
}

TEST(RegularizedZ, TightToleranceFailureCarriesEstimate) {
  const auto p = ModelParams::from_beta_epsilon(0.1);
  QuadratureConfig q{2000, QuadratureMethod::gauss, 1, 1e-15};
  try {
    regularized_Z(p, q);
    FAIL() << "expected QuadratureError";
  } catch (const QuadratureError& e) {
    EXPECT_GT(e.achieved_error(), 0);
    EXPECT_GT(e.value(), 0);
  }
}

TEST(QuadratureConfig, Validation) {
  const auto p = ModelParams::from_beta_epsilon(1);
  EXPECT_THROW(regularized_Z(p, analytic(0)), DomainError);
  EXPECT_THROW(regularized_Z(p, QuadratureConfig{1, QuadratureMethod::gauss, 0, 1e-10}), DomainError);
  EXPECT_THROW(regularized_Z(p, QuadratureConfig{1, QuadratureMethod::gauss, 4, 0}), DomainError);
}

TEST(Termwise, Examples) {
  EXPECT_DOUBLE_EQ(termwise_partial(0, 0.5, 8), 8);
  EXPECT_DOUBLE_EQ(termwise_partial(1, 0.5, 10), -25);
  const double a = std::abs(termwise_partial(2, 0.5, 10));
  const double b = std::abs(termwise_partial(2, 0.5, 100));
  const double c = std::abs(termwise_partial(2, 0.5, 1000));
  EXPECT_LT(a, b);
  EXPECT_LT(b, c);
  // alpha^2 / 2 * M^3 / 3
  EXPECT_NEAR(c, 0.25 / 2 * 1e9 / 3, 1e-3);
  EXPECT_EQ(termwise_partial(3, ModelParams::from_beta_epsilon(kLn2), 4), termwise_partial(3, 0.5, 4));
}

TEST(Termwise, GrowsWithoutBoundForEveryTerm) {
  for (double alpha : {0.1, 0.5, 0.9}) {
    for (unsigned n = 0; n <= 6; ++n) {
      const auto r = divergence_report(n, alpha, {10, 100, 1000, 10000, 1e7});
      EXPECT_TRUE(r.monotone) << n << " " << alpha;
      EXPECT_GT(std::abs(r.values.back()), 1e6) << n << " " << alpha;
    }
  }
}

TEST(Termwise, MillionThresholdWithinTenToTheSevenOverNPlusOne) {
  // At M = 10^{7/(n+1)} the magnitude is alpha^n 10^7 / (n+1)!, so the 10^6
  // threshold is reachable there only for n <= 2 (n = 2 needs alpha^2 >= 0.6).
  const double alpha = 0.9;
  for (unsigned n = 0; n <= 2; ++n) {
    const double m_max = std::pow(10.0, 7.0 / (n + 1));
    std::vector<double> grid;
    for (int k = 1; k <= 20; ++k) grid.push_back(m_max * k / 20);
    const auto r = divergence_report(n, alpha, grid);
    EXPECT_TRUE(r.monotone) << n;
    EXPECT_GT(std::abs(r.values.back()), 1e6) << n;
  }
  for (unsigned n = 3; n <= 6; ++n) {
    const double m_max = std::pow(10.0, 7.0 / (n + 1));
    EXPECT_LT(std::abs(termwise_partial(n, 1.0, m_max)), 1e6) << n;
  }
}

TEST(RegularizedSeries, MatchesFiniteCutoffIntegral) {
  EXPECT_NEAR(regularized_series_Z(0.5, 20, 200), 2 * (1 - std::exp(-10.0)), 1e-10);
  EXPECT_DOUBLE_EQ(regularized_series_Z(0.5, 7.25, 0), 7.25);
  const auto p = ModelParams::from_beta_epsilon(kLn2);
  EXPECT_DOUBLE_EQ(regularized_series_Z(p, 20, 200), regularized_series_Z(p.alpha(), 20, 200));
}

TEST(RegularizedSeries, FixedOrderDivergesAsCutoffGrows) {
  const double z = 2;
  double previous = 0;
  for (double m : {10.0, 100.0, 1000.0}) {
    const double err = std::abs(regularized_series_Z(0.5, m, 5) - z);
    EXPECT_GT(err, previous);
    previous = err;
  }
  EXPECT_GT(previous, 1e10);
}

TEST(RegularizedSeries, CauchyInOrderAtFixedCutoff) {
  for (double m : {5.0, 20.0, 60.0}) {
    const double alpha = 0.5;
    const double target = -std::expm1(-alpha * m) / alpha;
    const unsigned n0 = converged_series_order(alpha, m);
    for (unsigned extra : {0u, 10u, 50u}) {
      EXPECT_NEAR(regularized_series_Z(alpha, m, n0 + extra), target, 1e-12 * target) << m;
    }
  }
}

TEST(Combinatorial, ZerothOrderIntegratesOne) {
  EXPECT_NEAR(combinatorial_Z(ModelParams::from_beta_epsilon(1), gauss(13.5), 0).value, 13.5, 1e-12);
}

TEST(Combinatorial, AgreesWithRegularizedAtModerateCutoff) {
  // |x| M = 5: the truncated Bell series has converged on all of [0, M] by N = 90.
  const auto p = ModelParams::from_beta_epsilon(1);
  const double expected = regularized_Z(p, analytic(5)).value;
  EXPECT_LE(rel(combinatorial_Z(p, gauss(5), 90).value, expected), 1e-12);
  EXPECT_GT(rel(combinatorial_Z(p, gauss(5), 60).value, expected), 1e-8);
}

// int_0^M sum_{n<=N} B_n(y) x^n/n! dy exactly, from the binary values of x and M.
Rational exact_truncated_integral(double x, double m, unsigned order) {
  const Rational xq(x), mq(m);
  Rational total = 0, xn = 1;
  for (unsigned n = 0; n <= order; ++n) {
    const auto s = bell_polynomial_coefficients(n);
    Rational inner = 0, mk1 = mq;
    for (unsigned k = 0; k <= n; ++k) {
      inner += Rational(s[k]) * mk1 / (k + 1);
      mk1 *= mq;
    }
    total += inner * xn / Rational(factorial(n));
    xn *= xq;
  }
  return total;
}

TEST(Combinatorial, QuadratureReproducesExactTruncatedIntegral) {
  // Includes the regime where truncation, not quadrature, dominates: at
  // beta epsilon = 1, M = 40, N = 40 the truncated polynomial integrates to
  // about 5.19e21.
  for (auto [be, m, n] : {std::tuple{1.0, 40.0, 40u}, {0.5, 8.0, 30u}, {2.0, 3.0, 50u}}) {
    const auto p = ModelParams::from_beta_epsilon(be);
    const double exact = exact_truncated_integral(p.x(), m, n).get_d();
    EXPECT_LE(rel(combinatorial_Z(p, gauss(m), n).value, exact), 1e-12) << be << " " << m << " " << n;
  }
  const double big = exact_truncated_integral(-1.0, 40, 40).get_d();
  EXPECT_GT(big, 5.1e21);
  EXPECT_LT(big, 5.3e21);
}

TEST(Combinatorial, TruncationErrorShrinksWithOrder) {
  const auto p = ModelParams::from_beta_epsilon(0.5);
  const double expected = regularized_Z(p, analytic(8)).value;
  double previous = 1e300;
  for (unsigned n : {20u, 30u, 40u, 50u}) {
    const double err = std::abs(combinatorial_Z(p, gauss(8), n).value - expected);
    EXPECT_LT(err, previous) << n;
    previous = err;
  }
  EXPECT_LT(previous, 1e-12);
}

// f(x) = int_0^M exp(y (e^x - 1)) dy for complex x, by direct quadrature.
std::complex<double> radial_integral(std::complex<double> x, double m) {
  const auto r = integrate_gauss_legendre_complex(
      [x](double y) { return std::exp(y * (std::exp(x) - 1.0)); }, 0.0, m, 32);
  return r.value;
}

TEST(TaylorCoefficients, MatchExactBellPolynomialIntegrals) {
  // The n-th x-coefficient, extracted on a circle |x| = rho by the trapezoid
  // rule, against int_0^M B_n(y)/n! dy from the polynomial antiderivative.
  const double m = 3;
  const double rho = 0.5;
  const unsigned points = 64;
  for (unsigned n = 0; n <= 5; ++n) {
    std::complex<double> acc = 0;
    for (unsigned j = 0; j < points; ++j) {
      const double theta = 2 * std::numbers::pi * j / points;
      const auto x = std::polar(rho, theta);
      acc += radial_integral(x, m) * std::polar(std::pow(rho, -static_cast<double>(n)), -static_cast<double>(n) * theta);
    }
    acc /= static_cast<double>(points);

    Rational exact = 0;
    const Rational mq(m);
    const auto s = bell_polynomial_coefficients(n);
    for (unsigned k = 0; k <= n; ++k) {
      Rational mk1 = 1;
      for (unsigned i = 0; i <= k; ++i) mk1 *= mq;
      exact += Rational(s[k]) * mk1 / (k + 1);
    }
    exact /= Rational(factorial(n));
    EXPECT_NEAR(acc.real(), exact.get_d(), 1e-9 * (1 + std::abs(exact.get_d()))) << n;
    EXPECT_NEAR(acc.imag(), 0, 1e-9) << n;
  }
}

TEST(GeneralF, NumberOperatorAtOneIsBellSeries) {
  const auto f = general_F(parse_boson_expression("ad a"), 0.3, RationalComplex(1), 12);
  for (unsigned n = 0; n <= 12; ++n) EXPECT_EQ(f.moments[n], RationalComplex(Rational(bell(n))));
  for (const auto& v : f.cumulants) EXPECT_EQ(v, RationalComplex(1));
  EXPECT_TRUE(f.consistent);
  EXPECT_NEAR(f.value.real(), std::exp(std::expm1(0.3)), 1e-9);
}

TEST(GeneralF, NumberOperatorGeneralZ) {
  const RationalComplex z(Rational(1, 2), Rational(3, 2));
  const auto f = general_F(parse_boson_expression("ad a"), -0.4, z, 10);
  for (const auto& v : f.cumulants) EXPECT_EQ(v, RationalComplex(z.norm()));
  EXPECT_TRUE(f.consistent);
  const auto fd = general_F(parse_boson_expression("ad a"), -0.4, z.to_complex(), 10);
  for (const auto& v : fd.cumulants) EXPECT_NEAR(std::abs(v - z.norm().get_d()), 0, 1e-9);
  EXPECT_TRUE(fd.consistent);
}

TEST(GeneralF, ZeroArgumentIsOne) {
  const auto f = general_F(parse_boson_expression("a + 2 ad a a"), 0.0, RationalComplex(1, -1), 6);
  EXPECT_EQ(f.value, std::complex<double>(1.0, 0.0));
  EXPECT_TRUE(f.consistent);
}

TEST(GeneralF, NonConservingWordIsComplexButConsistent) {
  const auto f = general_F(parse_boson_expression("a + 1/2 ad"), 0.2, std::complex<double>(0.3, 0.7), 12);
  EXPECT_NE(f.value.imag(), 0.0);
  EXPECT_TRUE(f.consistent);
  EXPECT_LE(f.discrepancy, f.tolerance);
}

TEST(Table, RowsAndCsv) {
  TableOptions options;
  options.order = 40;
  options.divergence_terms = {2};
  const auto rows = partition_function_table({kLn2}, options);
  ASSERT_GE(rows.size(), 4u + 4u);
  EXPECT_EQ(rows[0].method, "closed_form");
  EXPECT_DOUBLE_EQ(rows[0].value, 2.0);
  EXPECT_EQ(rows[0].abs_error, 0.0);
  std::ostringstream a, b;
  write_csv(a, rows);
  write_csv(b, partition_function_table({kLn2}, options));
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str().substr(0, a.str().find('\n')), "beta_epsilon,method,M,N,value,abs_error_vs_closed_form");
}

}  // namespace
}  // namespace bellhopf
