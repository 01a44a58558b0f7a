#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace bellhopf {

/// Commutative monomial y_{i1} y_{i2} ... y_{ir} over the infinite alphabet
/// Y = {y_1, y_2, ...}. Letters are kept as a sorted multiset of indices, so
/// two monomials are equal iff their letter vectors are equal. The empty
/// monomial is the unit e.
///
/// A monomial of weight n with r letters codes a diagram on n white dots with
/// r connected components (one black dot each); y_k is the connected diagram
/// with k lines.
class Monomial {
 public:
  using Letter = std::uint32_t;

  Monomial() = default;
  /// Any order, repetitions allowed; letter 0 is rejected with DomainError.
  explicit Monomial(std::vector<Letter> letters);
  Monomial(std::initializer_list<Letter> letters) : Monomial(std::vector<Letter>(letters)) {}

  static Monomial unit() { return {}; }
  static Monomial letter(Letter k, unsigned power = 1);

  std::span<const Letter> letters() const noexcept { return letters_; }
  bool is_unit() const noexcept { return letters_.empty(); }
  /// Sum of the indices.
  std::uint64_t weight() const noexcept;
  /// Number of letters counted with multiplicity.
  std::size_t degree() const noexcept { return letters_.size(); }
  /// Multiplicity of y_k.
  unsigned exponent(Letter k) const noexcept;

  /// (letter, exponent) pairs in ascending letter order.
  std::vector<std::pair<Letter, unsigned>> factorization() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Lexicographic on the ascending letter sequence: y1^3 < y1*y2 < y3.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

/// "e" for the unit, otherwise e.g. "y1^2*y3".
std::string to_string(const Monomial& m);

/// All monomials of weight exactly w (one per integer partition of w).
std::vector<Monomial> monomials_of_weight(unsigned w);
/// All monomials of weight <= max_weight, ordered by weight then letters.
std::vector<Monomial> monomials_up_to_weight(unsigned max_weight);

}  // namespace bellhopf
