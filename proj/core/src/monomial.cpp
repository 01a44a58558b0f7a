#include "bellhopf/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "bellhopf/errors.hpp"

namespace bellhopf {

Monomial::Monomial(std::vector<Letter> letters) : letters_(std::move(letters)) {
  std::sort(letters_.begin(), letters_.end());
  if (!letters_.empty() && letters_.front() == 0) throw DomainError("monomial letters are indexed from 1");
}

Monomial Monomial::letter(Letter k, unsigned power) { return Monomial(std::vector<Letter>(power, k)); }

std::uint64_t Monomial::weight() const noexcept {
  return std::accumulate(letters_.begin(), letters_.end(), std::uint64_t{0});
}

unsigned Monomial::exponent(Letter k) const noexcept {
  auto [lo, hi] = std::equal_range(letters_.begin(), letters_.end(), k);
  return static_cast<unsigned>(hi - lo);
}

std::vector<std::pair<Monomial::Letter, unsigned>> Monomial::factorization() const {
  std::vector<std::pair<Letter, unsigned>> out;
  for (Letter k : letters_) {
    if (!out.empty() && out.back().first == k) {
      ++out.back().second;
    } else {
      out.emplace_back(k, 1);
    }
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.letters_.reserve(a.letters_.size() + b.letters_.size());
  std::merge(a.letters_.begin(), a.letters_.end(), b.letters_.begin(), b.letters_.end(),
             std::back_inserter(r.letters_));
  return r;
}

std::string to_string(const Monomial& m) {
  if (m.is_unit()) return "e";
  std::string out;
  for (const auto& [k, power] : m.factorization()) {
    if (!out.empty()) out += '*';
    out += 'y' + std::to_string(k);
    if (power > 1) out += '^' + std::to_string(power);
  }
  return out;
}

namespace {

// Partitions of `remaining` into parts <= largest, parts emitted ascending
// after reversal.
void partitions_into(unsigned remaining, unsigned largest, std::vector<Monomial::Letter>& parts,
                     std::vector<Monomial>& out) {
  if (remaining == 0) {
    out.emplace_back(parts);
    return;
  }
  for (unsigned k = std::min(remaining, largest); k >= 1; --k) {
    parts.push_back(k);
    partitions_into(remaining - k, k, parts, out);
    parts.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomials_of_weight(unsigned w) {
  std::vector<Monomial> out;
  std::vector<Monomial::Letter> parts;
  partitions_into(w, w, parts, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> monomials_up_to_weight(unsigned max_weight) {
  std::vector<Monomial> out;
  for (unsigned w = 0; w <= max_weight; ++w) {
    auto layer = monomials_of_weight(w);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace bellhopf
