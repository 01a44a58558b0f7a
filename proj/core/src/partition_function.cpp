#include "bellhopf/partition_function.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "bellhopf/combinatorics.hpp"
#include "bellhopf/egf.hpp"
#include "bellhopf/errors.hpp"
#include "bellhopf/quadrature.hpp"

namespace bellhopf {

namespace {

bool within_tolerance(double error, double value, double tolerance) {
  return error <= tolerance * std::max(1.0, std::abs(value));
}

// Coefficients d_k of the truncated Bell sum as a polynomial in y:
//   sum_{n<=N} B_n(y) x^n/n! = sum_k d_k y^k,  d_k = sum_{n=k}^{N} S(n,k) x^n/n!,
// accumulated exactly from the binary value of x.
std::vector<long double> truncated_bell_polynomial(double x, unsigned order) {
  StirlingTable table(order);
  const Rational xq(x);
  std::vector<Rational> d(order + 1, Rational(0));
  Rational weight = 1;  // x^n / n!
  for (unsigned n = 0; n <= order; ++n) {
    if (n > 0) weight = weight * xq / n;
    const auto& row = table.row(n);
    for (unsigned k = 0; k <= n; ++k) {
      if (row[k] != 0) d[k] += Rational(row[k]) * weight;
    }
  }
  std::vector<long double> out;
  out.reserve(d.size());
  for (const auto& q : d) {
    // Through a 64-bit-mantissa long double via its exact double pieces.
    const double hi = q.get_d();
    const double lo = Rational(q - Rational(hi)).get_d();
    out.push_back(static_cast<long double>(hi) + static_cast<long double>(lo));
  }
  return out;
}

long double horner(const std::vector<long double>& coeffs, long double y) {
  long double acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * y + *it;
  return acc;
}

}  // namespace

ModelParams::ModelParams(double beta, double epsilon) : beta_(beta), epsilon_(epsilon) {
  if (!(beta > 0) || !std::isfinite(beta)) throw DomainError("beta must be positive and finite");
  if (!(epsilon > 0) || !std::isfinite(epsilon)) throw DomainError("epsilon must be positive and finite");
}

double ModelParams::alpha() const noexcept { return -std::expm1(-beta_epsilon()); }

void QuadratureConfig::validate() const {
  if (!(cutoff > 0) || !std::isfinite(cutoff)) throw DomainError("cutoff M must be positive and finite");
  if (!(tolerance > 0)) throw DomainError("quadrature tolerance must be positive");
  if (panels == 0) throw DomainError("quadrature needs at least one panel");
}

double cutoff_for_tail(const ModelParams& p, double tail) {
  if (!(tail > 0 && tail < 1)) throw DomainError("tail must lie in (0, 1)");
  return -std::log(tail) / p.alpha();
}

double closed_form_Z(const ModelParams& p) { return 1.0 / p.alpha(); }

double integrand(double y, const ModelParams& p) { return std::exp(y * std::expm1(p.x())); }

IntegralEstimate regularized_Z(const ModelParams& p, const QuadratureConfig& q) {
  q.validate();
  const double alpha = p.alpha();
  if (q.method == QuadratureMethod::analytic) {
    return {-std::expm1(-alpha * q.cutoff) / alpha, 0.0};
  }
  const auto r = integrate_gauss_legendre([&p](double y) { return integrand(y, p); }, 0.0, q.cutoff, q.panels);
  if (!within_tolerance(r.error_estimate, r.value, q.tolerance)) {
    throw QuadratureError("regularized_Z: quadrature missed tolerance", r.value, r.error_estimate);
  }
  return {r.value, r.error_estimate};
}

double termwise_partial(unsigned n, double alpha, double cutoff) {
  if (!(cutoff > 0)) throw DomainError("cutoff M must be positive");
  return std::pow(-alpha, n) / std::tgamma(n + 1.0) * std::pow(cutoff, n + 1.0) / (n + 1.0);
}

double termwise_partial(unsigned n, const ModelParams& p, double cutoff) {
  return termwise_partial(n, p.alpha(), cutoff);
}

double regularized_series_Z(double alpha, double cutoff, unsigned order) {
  if (!(cutoff > 0)) throw DomainError("cutoff M must be positive");
  const Rational a(alpha);
  const Rational m(cutoff);
  // t_0 = M, t_n = t_{n-1} * (-alpha M) / (n + 1).
  Rational term = m;
  Rational sum = term;
  const Rational step = -a * m;
  for (unsigned n = 1; n <= order; ++n) {
    term = term * step / (n + 1);
    sum += term;
  }
  return sum.get_d();
}

double regularized_series_Z(const ModelParams& p, double cutoff, unsigned order) {
  return regularized_series_Z(p.alpha(), cutoff, order);
}

unsigned converged_series_order(double alpha, double cutoff) {
  const double am = alpha * cutoff;
  // log of the n-th term relative to the limit value 1/alpha.
  const double target = std::log(1e-20);
  unsigned n = 0;
  for (;; ++n) {
    const double log_term = std::log(cutoff * alpha) + n * std::log(am) - std::lgamma(n + 2.0);
    if (n > am && log_term < target) break;
  }
  return n + 8;
}

double truncated_bell_integrand(double y, double x, unsigned order) {
  return static_cast<double>(horner(truncated_bell_polynomial(x, order), y));
}

IntegralEstimate combinatorial_Z(const ModelParams& p, const QuadratureConfig& q, unsigned order) {
  q.validate();
  const auto coeffs = truncated_bell_polynomial(p.x(), order);
  const auto r = integrate_gauss_legendre(
      [&coeffs](double y) { return static_cast<double>(horner(coeffs, y)); }, 0.0, q.cutoff, q.panels);
  if (!within_tolerance(r.error_estimate, r.value, q.tolerance)) {
    throw QuadratureError("combinatorial_Z: quadrature missed tolerance", r.value, r.error_estimate);
  }
  return {r.value, r.error_estimate};
}

DivergenceReport divergence_report(unsigned n, double alpha, std::vector<double> cutoffs) {
  DivergenceReport report;
  report.n = n;
  report.alpha = alpha;
  report.cutoffs = std::move(cutoffs);
  report.monotone = true;
  for (std::size_t i = 0; i < report.cutoffs.size(); ++i) {
    report.values.push_back(termwise_partial(n, alpha, report.cutoffs[i]));
    if (i > 0 && !(std::abs(report.values[i]) > std::abs(report.values[i - 1]))) report.monotone = false;
  }
  return report;
}

namespace {

template <class Scalar>
std::complex<double> to_cd(const Scalar& v) {
  if constexpr (std::is_same_v<Scalar, std::complex<double>>) {
    return v;
  } else {
    return v.to_complex();
  }
}

template <class Scalar>
GeneralF<Scalar> general_F_impl(const BosonExpression& w, double x, const Scalar& z, unsigned order,
                                const Limits& limits) {
  GeneralF<Scalar> out;
  out.moments = word_moments(w, order, z, limits);
  out.cumulants = w_to_v<Scalar>(out.moments);

  std::complex<double> value = 0, exponent = 0;
  double weight = 1;  // x^n / n!
  double last_term = 0;
  for (unsigned n = 0; n <= order; ++n) {
    if (n > 0) weight *= x / n;
    const std::complex<double> term = to_cd(out.moments[n]) * weight;
    value += term;
    if (n > 0) exponent += to_cd(out.cumulants[n - 1]) * weight;
    last_term = std::abs(term);
  }
  out.value = value;
  out.exp_form = std::exp(exponent);
  out.discrepancy = std::abs(out.value - out.exp_form);
  // Both sides are truncations at N of the same function; they may differ by
  // roughly the size of the first omitted terms.
  out.tolerance = 1e-8 * (1.0 + std::abs(out.value)) + 4.0 * last_term;
  out.consistent = out.discrepancy <= out.tolerance;
  return out;
}

}  // namespace

GeneralF<RationalComplex> general_F(const BosonExpression& w, double x, const RationalComplex& z, unsigned order,
                                    const Limits& limits) {
  return general_F_impl(w, x, z, order, limits);
}

GeneralF<std::complex<double>> general_F(const BosonExpression& w, double x, std::complex<double> z,
                                         unsigned order, const Limits& limits) {
  return general_F_impl(w, x, z, order, limits);
}

std::vector<PartitionRow> partition_function_table(const std::vector<double>& beta_epsilons,
                                                   const TableOptions& options) {
  std::vector<PartitionRow> rows;
  for (double be : beta_epsilons) {
    const ModelParams p = ModelParams::from_beta_epsilon(be);
    const double exact = closed_form_Z(p);
    const double m = options.cutoff > 0 ? options.cutoff : cutoff_for_tail(p, 1e-12);
    auto row = [&](std::string method, double cutoff, unsigned order, double value) {
      rows.push_back({be, std::move(method), cutoff, order, value, std::abs(value - exact)});
    };

    row("closed_form", 0.0, 0, exact);

    QuadratureConfig q{m, options.method, options.panels, options.tolerance};
    const std::string reg_name =
        options.method == QuadratureMethod::analytic ? "regularized_analytic" : "regularized_gauss";
    try {
      row(reg_name, m, 0, regularized_Z(p, q).value);
    } catch (const QuadratureError& e) {
      row(reg_name, m, 0, e.value());
    }

    const unsigned series_order =
        options.series_order > 0 ? options.series_order : converged_series_order(p.alpha(), m);
    row("regularized_series", m, series_order, regularized_series_Z(p, m, series_order));

    try {
      row("combinatorial", m, options.order, combinatorial_Z(p, q, options.order).value);
    } catch (const QuadratureError& e) {
      row("combinatorial", m, options.order, e.value());
    }

    for (unsigned n : options.divergence_terms) {
      for (double cutoff : {10.0, 100.0, 1000.0, 10000.0}) {
        row("termwise", cutoff, n, termwise_partial(n, p, cutoff));
      }
    }
  }
  return rows;
}

void write_csv(std::ostream& os, const std::vector<PartitionRow>& rows) {
  auto fmt = [](double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  os << "beta_epsilon,method,M,N,value,abs_error_vs_closed_form\n";
  for (const auto& r : rows) {
    os << fmt(r.beta_epsilon) << ',' << r.method << ',' << fmt(r.cutoff) << ',' << r.order << ','
       << fmt(r.value) << ',' << fmt(r.abs_error) << '\n';
  }
}

}  // namespace bellhopf
