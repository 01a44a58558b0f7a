#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "bellhopf/boson.hpp"
#include "bellhopf/exact.hpp"
#include "bellhopf/limits.hpp"

namespace bellhopf {

// Free single-mode boson, H = epsilon ad a. In coherent-state form the trace
//   Z = (1/pi) int d^2z <z| exp(-beta H) |z>
// reduces, after the angular integral and y = |z|^2, to
//   Z = int_0^inf exp(y (e^x - 1)) dy = int_0^inf exp(-alpha y) dy,
// with x = -beta epsilon and alpha = 1 - e^{-beta epsilon}. Everything below
// works on that radial form.

class ModelParams {
 public:
  /// beta > 0 and epsilon > 0, otherwise DomainError.
  ModelParams(double beta, double epsilon);
  /// beta = beta_epsilon, epsilon = 1.
  static ModelParams from_beta_epsilon(double beta_epsilon) { return {beta_epsilon, 1.0}; }

  double beta() const noexcept { return beta_; }
  double epsilon() const noexcept { return epsilon_; }
  double beta_epsilon() const noexcept { return beta_ * epsilon_; }
  /// x = -beta epsilon
  double x() const noexcept { return -beta_epsilon(); }
  /// alpha = 1 - e^{-beta epsilon}, in (0, 1).
  double alpha() const noexcept;

 private:
  double beta_;
  double epsilon_;
};

enum class QuadratureMethod { analytic, gauss };

struct QuadratureConfig {
  double cutoff = 0;  // M
  QuadratureMethod method = QuadratureMethod::gauss;
  unsigned panels = 64;
  /// Accept when error_estimate <= tolerance * max(1, |value|).
  double tolerance = 1e-10;

  /// DomainError unless cutoff > 0, tolerance > 0 and panels > 0.
  void validate() const;
};

struct IntegralEstimate {
  double value = 0;
  double error_estimate = 0;
};

/// M with e^{-alpha M} = tail.
double cutoff_for_tail(const ModelParams& p, double tail);

/// 1 / alpha
double closed_form_Z(const ModelParams& p);

/// exp(-alpha y), the Bell-polynomial generating function exp(y (e^x - 1)).
double integrand(double y, const ModelParams& p);

/// int_0^M exp(-alpha y) dy, either analytically, (1 - e^{-alpha M}) / alpha,
/// or by composite Gauss-Legendre. QuadratureError if the estimate misses
/// q.tolerance.
IntegralEstimate regularized_Z(const ModelParams& p, const QuadratureConfig& q);

/// (-alpha)^n / n! * M^{n+1} / (n+1): the n-th term of the expansion with
/// integration and summation swapped, integrated only up to M. Unbounded in M
/// for every n.
double termwise_partial(unsigned n, double alpha, double cutoff);
double termwise_partial(unsigned n, const ModelParams& p, double cutoff);

/// sum_{n=0}^{N} termwise_partial(n, alpha, M), summed exactly in rationals
/// (from the binary values of alpha and M) and rounded once. Tends to
/// (1 - e^{-alpha M}) / alpha as N grows.
double regularized_series_Z(double alpha, double cutoff, unsigned order);
double regularized_series_Z(const ModelParams& p, double cutoff, unsigned order);
/// An order at which the regularized series at (alpha, M) has converged to
/// double precision.
unsigned converged_series_order(double alpha, double cutoff);

/// sum_{n=0}^{N} B_n(y) x^n / n!
double truncated_bell_integrand(double y, double x, unsigned order);

/// int_0^M sum_{n<=N} B_n(y) x^n / n! dy by composite Gauss-Legendre (the
/// method field of q is ignored). Equals int_0^M exp(-alpha y) dy only once
/// the Bell series has converged on all of [0, M]; for fixed N the truncated
/// polynomial grows like (|x| M)^N / N! at the far end of the range.
IntegralEstimate combinatorial_Z(const ModelParams& p, const QuadratureConfig& q, unsigned order);

struct DivergenceReport {
  unsigned n = 0;
  double alpha = 0;
  std::vector<double> cutoffs;
  std::vector<double> values;
  /// |values| strictly increasing along cutoffs.
  bool monotone = false;
};

DivergenceReport divergence_report(unsigned n, double alpha, std::vector<double> cutoffs);

/// F(x, z) = <z| exp(x w) |z>, truncated at order N, with its moment and
/// cumulant sequences.
template <class Scalar>
struct GeneralF {
  std::vector<Scalar> moments;    // W_0..W_N
  std::vector<Scalar> cumulants;  // V_1..V_N
  std::complex<double> value;     // sum W_n x^n / n!
  std::complex<double> exp_form;  // exp-series of sum V_n x^n / n!, truncated at N
  double discrepancy = 0;         // |value - exp_form|
  double tolerance = 0;
  bool consistent = false;
};

/// Exact moments and cumulants for Gaussian-rational z.
GeneralF<RationalComplex> general_F(const BosonExpression& w, double x, const RationalComplex& z,
                                    unsigned order, const Limits& limits = {});
GeneralF<std::complex<double>> general_F(const BosonExpression& w, double x, std::complex<double> z,
                                         unsigned order, const Limits& limits = {});

/// One line of the route-comparison table.
struct PartitionRow {
  double beta_epsilon = 0;
  std::string method;
  double cutoff = 0;
  unsigned order = 0;
  double value = 0;
  double abs_error = 0;  // |value - closed_form_Z|
};

struct TableOptions {
  /// 0 selects M with e^{-alpha M} = 1e-12 per row.
  double cutoff = 0;
  /// Order N of the combinatorial (Bell-polynomial) route.
  unsigned order = 40;
  /// Order of the regularized series route; 0 picks one large enough for the
  /// series to have converged at the row's cutoff.
  unsigned series_order = 0;
  QuadratureMethod method = QuadratureMethod::gauss;
  unsigned panels = 64;
  double tolerance = 1e-10;
  /// Adds termwise rows for this n over M = 10, 100, 1000, 10000.
  std::vector<unsigned> divergence_terms;
};

/// closed_form, regularized, regularized_series and combinatorial rows for
/// each beta epsilon, in input order. A route that raises QuadratureError is
/// still reported with the value it reached.
std::vector<PartitionRow> partition_function_table(const std::vector<double>& beta_epsilons,
                                                   const TableOptions& options);

/// Header beta_epsilon,method,M,N,value,abs_error_vs_closed_form; floats with
/// 17 significant digits.
void write_csv(std::ostream& os, const std::vector<PartitionRow>& rows);

}  // namespace bellhopf
