#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "bellhopf/exact.hpp"
#include "bellhopf/limits.hpp"
#include "bellhopf/linear_combination.hpp"

namespace bellhopf {

enum class BosonLetter : std::uint8_t {
  annihilate = 0,  // a
  create = 1,      // a^dagger, written "ad"
};

/// Product of single-mode boson operators, read left to right. The empty word
/// is the identity operator.
class BosonWord {
 public:
  BosonWord() = default;
  explicit BosonWord(std::vector<BosonLetter> letters) : letters_(std::move(letters)) {}
  BosonWord(std::initializer_list<BosonLetter> letters) : letters_(letters) {}

  /// (ad a)^n
  static BosonWord number_power(unsigned n);

  std::span<const BosonLetter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  unsigned creators() const noexcept;
  unsigned annihilators() const noexcept;
  /// True if no annihilator stands left of a creator.
  bool is_normal_ordered() const noexcept;

  friend BosonWord operator*(const BosonWord& a, const BosonWord& b);
  friend bool operator==(const BosonWord&, const BosonWord&) = default;
  friend auto operator<=>(const BosonWord& a, const BosonWord& b) { return a.letters_ <=> b.letters_; }

 private:
  std::vector<BosonLetter> letters_;
};

struct BosonWordHash {
  std::size_t operator()(const BosonWord& w) const noexcept;
};

/// Finite rational combination of words.
using BosonExpression = LinearCombination<BosonWord>;

BosonExpression product(const BosonExpression& a, const BosonExpression& b);
/// expr^n by repeated multiplication; ResourceLimitError once an intermediate
/// power has more than max_words distinct words.
BosonExpression power(const BosonExpression& expr, unsigned n, std::size_t max_words);

/// (ad)^r a^s
struct NormalMonomial {
  unsigned create = 0;
  unsigned annihilate = 0;

  friend bool operator==(const NormalMonomial&, const NormalMonomial&) = default;
  friend auto operator<=>(const NormalMonomial&, const NormalMonomial&) = default;
};

/// sum c_{rs} (ad)^r a^s with every creator left of every annihilator.
using NormalOrderedForm = LinearCombination<NormalMonomial>;

/// Normal ordering under [a, ad] = 1 by rewriting the leftmost a*ad pair into
/// ad*a + 1 until no such pair remains. Results are memoized per word, so one
/// orderer amortizes the work across the words of w, w^2, w^3, ... Not
/// thread-safe; use one instance per thread.
class NormalOrderer {
 public:
  const NormalOrderedForm& order(const BosonWord& word);
  NormalOrderedForm order(const BosonExpression& expr);

  std::size_t cache_size() const noexcept { return memo_.size(); }
  void clear() { memo_.clear(); }

 private:
  std::unordered_map<BosonWord, NormalOrderedForm, BosonWordHash> memo_;
};

NormalOrderedForm normal_order(const BosonExpression& expr);
NormalOrderedForm normal_order(const BosonWord& word);

/// Picks which of `candidates` adjacent a*ad pairs to rewrite next; must
/// return an index < candidates.
using PairChooser = std::function<std::size_t(std::size_t candidates)>;

/// Same rewriting rule without memoization, with the reduction site chosen by
/// `choose`. The result does not depend on the strategy.
NormalOrderedForm normal_order_by_strategy(const BosonExpression& expr, const PairChooser& choose);

/// Moves creators left without commutator terms (the double-dot ordering).
NormalOrderedForm forgetful_normal_order(const BosonExpression& expr);

/// Reads a normal form back as an expression (words ad^r a^s).
BosonExpression to_expression(const NormalOrderedForm& form);

/// S(n,1..n) read off the diagonal of normal_order((ad a)^n). Requires
/// 1 <= n <= limits.ordering_max_n.
std::vector<Integer> stirling_via_ordering(unsigned n, const Limits& limits = {});

/// <z| form |z> = sum c_{rs} conj(z)^r z^s.
RationalComplex coherent_expectation(const NormalOrderedForm& form, const RationalComplex& z);
std::complex<double> coherent_expectation(const NormalOrderedForm& form, std::complex<double> z);

/// normal_order(w^n) for n = 0..nmax, w^n expanded by repeated multiplication.
/// Requires nmax <= limits.moments_max_n.
std::vector<NormalOrderedForm> ordered_powers(const BosonExpression& w, unsigned nmax,
                                              const Limits& limits = {});

/// W_n(z) = <z| w^n |z> for n = 0..nmax; W_0 = 1.
std::vector<RationalComplex> word_moments(const BosonExpression& w, unsigned nmax,
                                          const RationalComplex& z, const Limits& limits = {});
std::vector<std::complex<double>> word_moments(const BosonExpression& w, unsigned nmax,
                                               std::complex<double> z, const Limits& limits = {});

}  // namespace bellhopf
