#include "bellhopf/combinatorics.hpp"

namespace bellhopf {

void StirlingTable::reserve(unsigned max_n) {
  if (rows_.empty()) rows_.push_back({Integer(1)});
  while (rows_.size() <= max_n) {
    const auto& prev = rows_.back();
    const unsigned n = static_cast<unsigned>(rows_.size());
    std::vector<Integer> row(n + 1);
    row[0] = 0;
    for (unsigned k = 1; k <= n; ++k) {
      Integer carry = k < n ? Integer(k * prev[k]) : Integer(0);
      row[k] = carry + prev[k - 1];
    }
    rows_.push_back(std::move(row));
  }
}

const std::vector<Integer>& StirlingTable::row(unsigned n) {
  reserve(n);
  return rows_[n];
}

const Integer& StirlingTable::at(unsigned n, unsigned k) {
  if (k > n) return zero_;
  return row(n)[k];
}

Integer stirling2(unsigned n, unsigned k) {
  if (k > n) return 0;
  StirlingTable table(n);
  return table.at(n, k);
}

std::vector<Integer> bell_numbers(unsigned nmax) {
  StirlingTable table(nmax);
  std::vector<Integer> out;
  out.reserve(nmax + 1);
  for (unsigned n = 0; n <= nmax; ++n) {
    Integer sum = 0;
    for (const auto& s : table.row(n)) sum += s;
    out.push_back(std::move(sum));
  }
  return out;
}

Integer bell(unsigned n) { return bell_numbers(n).back(); }

std::vector<Integer> bell_polynomial_coefficients(unsigned n) {
  StirlingTable table(n);
  return table.row(n);
}

Rational bell_polynomial(unsigned n, const Rational& y) {
  const auto coeffs = bell_polynomial_coefficients(n);
  // Horner from the top coefficient.
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * y + Rational(*it);
  return acc;
}

}  // namespace bellhopf
