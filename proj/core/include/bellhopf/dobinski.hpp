#pragma once

#include "bellhopf/bigfloat.hpp"
#include "bellhopf/exact.hpp"

namespace bellhopf {

/// Truncated Dobinski sum with a certified error budget:
///   |value - true| <= tail_bound + rounding_bound.
struct DobinskiResult {
  BigFloat value;
  /// Upper bound on e^{-y} sum_{k>K} k^n y^k / k!.
  BigFloat tail_bound;
  /// Upper bound on the floating-point error of `value`.
  BigFloat rounding_bound;
  unsigned terms = 0;  // K
  unsigned digits = 0;

  /// tail_bound + rounding_bound
  BigFloat error_bound() const;
  /// True if |value - exact| <= error_bound().
  bool brackets(const Rational& exact) const;
};

/// B_n(y) ~ e^{-y} sum_{k=0}^{K} k^n y^k / k!  (0^0 = 1).
/// Requires y > 0, K >= 1 and digits >= 10 (DomainError otherwise).
DobinskiResult dobinski_bell_poly(unsigned n, const Rational& y, unsigned terms, unsigned digits);

/// B(n) ~ (1/e) sum_{k=0}^{K} k^n / k!.
DobinskiResult dobinski_bell(unsigned n, unsigned terms, unsigned digits);

}  // namespace bellhopf
