#pragma once

#include "bellhopf/exact.hpp"

// mpq_class(p, q) does not canonicalize; every rational handed to the
// library from a test goes through here.
inline bellhopf::Rational ratio(long p, long q) {
  bellhopf::Rational r(p, q);
  r.canonicalize();
  return r;
}
