#pragma once

#include <vector>

#include "bellhopf/exact.hpp"

namespace bellhopf {

/// Triangle of Stirling numbers of the second kind built by the recurrence
/// S(n,k) = k S(n-1,k) + S(n-1,k-1), S(0,0) = 1. Rows are extended on
/// demand; a table is not safe to share between threads while growing.
class StirlingTable {
 public:
  StirlingTable() = default;
  explicit StirlingTable(unsigned max_n) { reserve(max_n); }

  /// S(n,k); zero when k > n or (k = 0, n > 0).
  const Integer& at(unsigned n, unsigned k);
  /// Row S(n,0..n).
  const std::vector<Integer>& row(unsigned n);
  void reserve(unsigned max_n);

 private:
  std::vector<std::vector<Integer>> rows_;
  Integer zero_{0};
};

Integer stirling2(unsigned n, unsigned k);

/// B(n) = sum_k S(n,k), with B(0) = 1.
Integer bell(unsigned n);

/// B(0..nmax).
std::vector<Integer> bell_numbers(unsigned nmax);

/// Exact B_n(y) = sum_k S(n,k) y^k.
Rational bell_polynomial(unsigned n, const Rational& y);

/// Coefficients S(n,0..n) of B_n as a polynomial in y.
std::vector<Integer> bell_polynomial_coefficients(unsigned n);

}  // namespace bellhopf
