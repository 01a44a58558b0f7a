#include "bellhopf/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>

namespace bellhopf {

namespace {

using Rule = boost::math::quadrature::gauss<double, 20>;

template <class T, class F>
T composite(const F& f, double a, double b, unsigned panels) {
  // Rule::abscissa() holds the nonnegative half of the symmetric rule.
  const auto& nodes = Rule::abscissa();
  const auto& weights = Rule::weights();
  const double h = (b - a) / panels;
  T total{};
  for (unsigned p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    const double half = 0.5 * h;
    T panel{};
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i] == 0.0) {
        panel += weights[i] * f(mid);
      } else {
        panel += weights[i] * (f(mid - half * nodes[i]) + f(mid + half * nodes[i]));
      }
    }
    total += half * panel;
  }
  return total;
}

}  // namespace

QuadratureResult integrate_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                                          unsigned panels) {
  const double coarse = composite<double>(f, a, b, panels);
  const double fine = composite<double>(f, a, b, 2 * panels);
  return {fine, std::abs(fine - coarse)};
}

ComplexQuadratureResult integrate_gauss_legendre_complex(const std::function<std::complex<double>(double)>& f, double a,
                                                 double b, unsigned panels) {
  const auto coarse = composite<std::complex<double>>(f, a, b, panels);
  const auto fine = composite<std::complex<double>>(f, a, b, 2 * panels);
  return {fine, std::abs(fine - coarse)};
}

}  // namespace bellhopf
