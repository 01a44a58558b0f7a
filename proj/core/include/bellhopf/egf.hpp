#pragma once

#include <algorithm>
#include <complex>
#include <cmath>
#include <span>
#include <vector>

#include "bellhopf/errors.hpp"
#include "bellhopf/exact.hpp"

namespace bellhopf {

namespace detail {

template <class T>
T from_integer(const Integer& v) {
  if constexpr (std::is_same_v<T, std::complex<double>>) {
    return T(v.get_d(), 0.0);
  } else {
    return T(Rational(v));
  }
}

inline bool is_exactly(const Rational& v, long target) { return v == target; }
inline bool is_exactly(const RationalComplex& v, long target) { return v == RationalComplex(target); }
inline bool is_exactly(const std::complex<double>& v, long target, double tol = 1e-12) {
  return std::abs(v - std::complex<double>(static_cast<double>(target), 0.0)) <= tol;
}

/// Row n of Pascal's triangle, as scalars.
template <class T>
std::vector<T> binomial_row(unsigned n) {
  std::vector<T> row;
  row.reserve(n + 1);
  Integer c = 1;
  for (unsigned k = 0; k <= n; ++k) {
    row.push_back(from_integer<T>(c));
    c = c * (n - k) / (k + 1);
  }
  return row;
}

}  // namespace detail

/// Truncated exponential generating function  sum_{n=0}^{N} a_n x^n / n!.
/// The truncation order N is part of the value; binary operations truncate to
/// the smaller order.
template <class T>
class BasicEgfSeries {
 public:
  using scalar_type = T;

  /// coefficients a_0..a_N; must be nonempty.
  explicit BasicEgfSeries(std::vector<T> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw DomainError("EGF series needs at least the constant coefficient");
  }

  static BasicEgfSeries zero(unsigned order) { return BasicEgfSeries(std::vector<T>(order + 1, T(0))); }
  static BasicEgfSeries identity(unsigned order) {
    auto s = zero(order);
    s.coeffs_[0] = T(1);
    return s;
  }
  /// e^x: every coefficient 1.
  static BasicEgfSeries exponential(unsigned order) { return BasicEgfSeries(std::vector<T>(order + 1, T(1))); }

  unsigned order() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
  const std::vector<T>& coefficients() const noexcept { return coeffs_; }
  const T& operator[](unsigned n) const { return coeffs_.at(n); }

  BasicEgfSeries truncated(unsigned order) const {
    std::vector<T> c(coeffs_.begin(), coeffs_.begin() + std::min(order, this->order()) + 1);
    return BasicEgfSeries(std::move(c));
  }

  friend BasicEgfSeries operator+(const BasicEgfSeries& a, const BasicEgfSeries& b) {
    const unsigned n = std::min(a.order(), b.order());
    std::vector<T> c(n + 1);
    for (unsigned i = 0; i <= n; ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
    return BasicEgfSeries(std::move(c));
  }
  friend BasicEgfSeries operator-(const BasicEgfSeries& a, const BasicEgfSeries& b) {
    const unsigned n = std::min(a.order(), b.order());
    std::vector<T> c(n + 1);
    for (unsigned i = 0; i <= n; ++i) c[i] = a.coeffs_[i] - b.coeffs_[i];
    return BasicEgfSeries(std::move(c));
  }
  friend bool operator==(const BasicEgfSeries& a, const BasicEgfSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<T> coeffs_;
};

using EGFSeries = BasicEgfSeries<Rational>;

/// Binomial convolution c_n = sum_k C(n,k) a_k b_{n-k}.
template <class T>
BasicEgfSeries<T> egf_mul(const BasicEgfSeries<T>& a, const BasicEgfSeries<T>& b) {
  const unsigned order = std::min(a.order(), b.order());
  std::vector<T> c(order + 1, T(0));
  for (unsigned n = 0; n <= order; ++n) {
    const auto binom = detail::binomial_row<T>(n);
    for (unsigned k = 0; k <= n; ++k) c[n] += binom[k] * a[k] * b[n - k];
  }
  return BasicEgfSeries<T>(std::move(c));
}

/// exp of a series with zero constant term:
///   a_0 = 1,  a_n = sum_{k=1}^{n} C(n-1, k-1) c_k a_{n-k}.
/// If C counts connected labelled structures, exp C counts all of them.
template <class T>
BasicEgfSeries<T> egf_exp(const BasicEgfSeries<T>& c) {
  if (!detail::is_exactly(c[0], 0)) throw DomainError("egf_exp: constant term must be zero");
  const unsigned order = c.order();
  std::vector<T> a(order + 1, T(0));
  a[0] = T(1);
  for (unsigned n = 1; n <= order; ++n) {
    const auto binom = detail::binomial_row<T>(n - 1);
    T sum(0);
    for (unsigned k = 1; k <= n; ++k) sum += binom[k - 1] * c[k] * a[n - k];
    a[n] = std::move(sum);
  }
  return BasicEgfSeries<T>(std::move(a));
}

/// Inverse of egf_exp on series with a_0 = 1:
///   c_n = a_n - sum_{k=1}^{n-1} C(n-1, k-1) c_k a_{n-k}.
template <class T>
BasicEgfSeries<T> egf_log(const BasicEgfSeries<T>& a) {
  if (!detail::is_exactly(a[0], 1)) throw DomainError("egf_log: constant term must be one");
  const unsigned order = a.order();
  std::vector<T> c(order + 1, T(0));
  for (unsigned n = 1; n <= order; ++n) {
    const auto binom = detail::binomial_row<T>(n - 1);
    T sum = a[n];
    for (unsigned k = 1; k < n; ++k) sum -= binom[k - 1] * c[k] * a[n - k];
    c[n] = std::move(sum);
  }
  return BasicEgfSeries<T>(std::move(c));
}

/// a_n = B(n), n <= order, built as exp(e^x - 1).
EGFSeries bell_egf(unsigned order);

/// Moments W_0..W_N (W_0 = 1) to cumulants V_1..V_N with
///   sum W_n x^n/n! = exp(sum_{n>=1} V_n x^n/n!).
template <class T>
std::vector<T> w_to_v(std::span<const T> moments) {
  if (moments.empty() || !detail::is_exactly(moments[0], 1)) {
    throw DomainError("w_to_v: W_0 must equal 1 (normalized coherent state)");
  }
  const auto logs = egf_log(BasicEgfSeries<T>(std::vector<T>(moments.begin(), moments.end())));
  return std::vector<T>(logs.coefficients().begin() + 1, logs.coefficients().end());
}

/// Cumulants V_1..V_N to moments W_0..W_N; inverse of w_to_v.
template <class T>
std::vector<T> v_to_w(std::span<const T> cumulants) {
  std::vector<T> c;
  c.reserve(cumulants.size() + 1);
  c.push_back(T(0));
  c.insert(c.end(), cumulants.begin(), cumulants.end());
  return egf_exp(BasicEgfSeries<T>(std::move(c))).coefficients();
}

}  // namespace bellhopf
