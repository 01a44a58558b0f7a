#pragma once

#include <map>
#include <utility>

#include "bellhopf/exact.hpp"

namespace bellhopf {

/// Finite formal sum  sum_k c_k * key_k  over an ordered basis. Zero
/// coefficients are never stored, so equality is coefficient-wise map
/// equality and iteration order is the basis order.
template <class Key, class Scalar = Rational>
class LinearCombination {
 public:
  using key_type = Key;
  using scalar_type = Scalar;
  using container_type = std::map<Key, Scalar>;
  using const_iterator = typename container_type::const_iterator;

  LinearCombination() = default;
  explicit LinearCombination(Key key, Scalar coefficient = Scalar(1)) {
    add_term(std::move(key), std::move(coefficient));
  }

  void add_term(const Key& key, const Scalar& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Scalar coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const_iterator begin() const noexcept { return terms_.begin(); }
  const_iterator end() const noexcept { return terms_.end(); }
  const container_type& terms() const noexcept { return terms_; }

  LinearCombination& operator+=(const LinearCombination& other) {
    for (const auto& [key, c] : other.terms_) add_term(key, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& other) {
    for (const auto& [key, c] : other.terms_) add_term(key, Scalar(-c));
    return *this;
  }
  LinearCombination& operator*=(const Scalar& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [key, c] : terms_) c *= s;
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(LinearCombination a, const Scalar& s) { return a *= s; }
  friend LinearCombination operator*(const Scalar& s, LinearCombination a) { return a *= s; }
  friend LinearCombination operator-(LinearCombination a) { return a *= Scalar(-1); }
  friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
    return a.terms_ == b.terms_;
  }

 private:
  container_type terms_;
};

}  // namespace bellhopf
