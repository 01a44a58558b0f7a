#pragma once

#include <complex>
#include <functional>

namespace bellhopf {

struct QuadratureResult {
  double value = 0;
  /// |I(2P panels) - I(P panels)|
  double error_estimate = 0;
};

struct ComplexQuadratureResult {
  std::complex<double> value;
  double error_estimate = 0;
};

/// Composite 20-point Gauss-Legendre rule on [a, b] with `panels` equal
/// panels, evaluated at P and 2P panels; the finer value is returned and
/// their difference is the error estimate.
QuadratureResult integrate_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                                          unsigned panels);
ComplexQuadratureResult integrate_gauss_legendre_complex(const std::function<std::complex<double>(double)>& f,
                                                 double a, double b, unsigned panels);

}  // namespace bellhopf
