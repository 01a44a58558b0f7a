#include "bellhopf/boson.hpp"

#include <algorithm>
#include <map>
#include <string_view>

#include "bellhopf/errors.hpp"

namespace bellhopf {

namespace {

constexpr auto kA = BosonLetter::annihilate;
constexpr auto kAd = BosonLetter::create;

// Index i of the leftmost a*ad pair, or size() if the word is normal ordered.
std::size_t leftmost_pair(std::span<const BosonLetter> w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == kA && w[i + 1] == kAd) return i;
  }
  return w.size();
}

// a*ad -> ad*a at i, and a*ad -> 1 at i.
std::pair<BosonWord, BosonWord> rewrite_at(std::span<const BosonLetter> w, std::size_t i) {
  std::vector<BosonLetter> swapped(w.begin(), w.end());
  std::swap(swapped[i], swapped[i + 1]);
  std::vector<BosonLetter> removed;
  removed.reserve(w.size() - 2);
  removed.insert(removed.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
  removed.insert(removed.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 2), w.end());
  return {BosonWord(std::move(swapped)), BosonWord(std::move(removed))};
}

NormalMonomial shape_of(const BosonWord& w) { return {w.creators(), w.annihilators()}; }

template <class C>
C expectation(const NormalOrderedForm& form, const C& z, const C& zbar) {
  C sum(0);
  // Cache of conj(z)^r and z^s, grown on demand.
  std::vector<C> zbar_pow{C(1)}, z_pow{C(1)};
  auto grow = [](std::vector<C>& pows, const C& base, unsigned k) {
    while (pows.size() <= k) pows.push_back(pows.back() * base);
    return pows[k];
  };
  for (const auto& [mono, c] : form) {
    C term = grow(zbar_pow, zbar, mono.create) * grow(z_pow, z, mono.annihilate);
    if constexpr (std::is_same_v<C, std::complex<double>>) {
      sum += term * c.get_d();
    } else {
      sum += term * C(c);
    }
  }
  return sum;
}

}  // namespace

BosonWord BosonWord::number_power(unsigned n) {
  std::vector<BosonLetter> letters;
  letters.reserve(2 * n);
  for (unsigned i = 0; i < n; ++i) {
    letters.push_back(kAd);
    letters.push_back(kA);
  }
  return BosonWord(std::move(letters));
}

unsigned BosonWord::creators() const noexcept {
  return static_cast<unsigned>(std::count(letters_.begin(), letters_.end(), kAd));
}

unsigned BosonWord::annihilators() const noexcept {
  return static_cast<unsigned>(std::count(letters_.begin(), letters_.end(), kA));
}

bool BosonWord::is_normal_ordered() const noexcept { return leftmost_pair(letters_) == letters_.size(); }

BosonWord operator*(const BosonWord& a, const BosonWord& b) {
  std::vector<BosonLetter> letters;
  letters.reserve(a.size() + b.size());
  letters.insert(letters.end(), a.letters_.begin(), a.letters_.end());
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return BosonWord(std::move(letters));
}

std::size_t BosonWordHash::operator()(const BosonWord& w) const noexcept {
  const auto letters = w.letters();
  return std::hash<std::string_view>{}(
      std::string_view(reinterpret_cast<const char*>(letters.data()), letters.size()));
}

BosonExpression product(const BosonExpression& a, const BosonExpression& b) {
  BosonExpression out;
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) out.add_term(wa * wb, ca * cb);
  }
  return out;
}

BosonExpression power(const BosonExpression& expr, unsigned n, std::size_t max_words) {
  BosonExpression out{BosonWord{}};
  for (unsigned i = 0; i < n; ++i) {
    out = product(out, expr);
    if (out.size() > max_words) {
      throw ResourceLimitError("expanded power has " + std::to_string(out.size()) + " words, limit " +
                               std::to_string(max_words));
    }
  }
  return out;
}

const NormalOrderedForm& NormalOrderer::order(const BosonWord& word) {
  if (auto it = memo_.find(word); it != memo_.end()) return it->second;

  // Post-order walk of the rewrite tree; a word is resolved once both of its
  // rewrites are.
  std::vector<BosonWord> pending{word};
  while (!pending.empty()) {
    const BosonWord top = pending.back();
    if (memo_.contains(top)) {
      pending.pop_back();
      continue;
    }
    const std::size_t i = leftmost_pair(top.letters());
    if (i == top.size()) {
      memo_.emplace(top, NormalOrderedForm(shape_of(top)));
      pending.pop_back();
      continue;
    }
    auto [swapped, removed] = rewrite_at(top.letters(), i);
    auto s = memo_.find(swapped);
    auto r = memo_.find(removed);
    if (s != memo_.end() && r != memo_.end()) {
      memo_.emplace(top, s->second + r->second);
      pending.pop_back();
      continue;
    }
    if (s == memo_.end()) pending.push_back(std::move(swapped));
    if (r == memo_.end()) pending.push_back(std::move(removed));
  }
  return memo_.at(word);
}

NormalOrderedForm NormalOrderer::order(const BosonExpression& expr) {
  NormalOrderedForm out;
  for (const auto& [word, c] : expr) out += order(word) * c;
  return out;
}

NormalOrderedForm normal_order(const BosonExpression& expr) {
  NormalOrderer orderer;
  return orderer.order(expr);
}

NormalOrderedForm normal_order(const BosonWord& word) {
  NormalOrderer orderer;
  return orderer.order(word);
}

NormalOrderedForm normal_order_by_strategy(const BosonExpression& expr, const PairChooser& choose) {
  std::map<BosonWord, Rational> work(expr.terms().begin(), expr.terms().end());
  NormalOrderedForm out;
  auto push = [&work](BosonWord w, const Rational& c) {
    auto [it, inserted] = work.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) work.erase(it);
    }
  };
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const BosonWord& w = node.key();
    const Rational& c = node.mapped();
    std::vector<std::size_t> sites;
    const auto letters = w.letters();
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      if (letters[i] == kA && letters[i + 1] == kAd) sites.push_back(i);
    }
    if (sites.empty()) {
      out.add_term(shape_of(w), c);
      continue;
    }
    const std::size_t pick = choose(sites.size());
    if (pick >= sites.size()) throw DomainError("reduction strategy picked a nonexistent site");
    auto [swapped, removed] = rewrite_at(letters, sites[pick]);
    push(std::move(swapped), c);
    push(std::move(removed), c);
  }
  return out;
}

NormalOrderedForm forgetful_normal_order(const BosonExpression& expr) {
  NormalOrderedForm out;
  for (const auto& [word, c] : expr) out.add_term(shape_of(word), c);
  return out;
}

BosonExpression to_expression(const NormalOrderedForm& form) {
  BosonExpression out;
  for (const auto& [mono, c] : form) {
    std::vector<BosonLetter> letters(mono.create, kAd);
    letters.insert(letters.end(), mono.annihilate, kA);
    out.add_term(BosonWord(std::move(letters)), c);
  }
  return out;
}

std::vector<Integer> stirling_via_ordering(unsigned n, const Limits& limits) {
  if (n == 0) throw DomainError("stirling_via_ordering needs n >= 1");
  if (n > limits.ordering_max_n) {
    throw ResourceLimitError("normal ordering of (ad a)^n limited to n <= " + std::to_string(limits.ordering_max_n));
  }
  const NormalOrderedForm form = normal_order(BosonWord::number_power(n));
  std::vector<Integer> out(n, Integer(0));
  for (const auto& [mono, c] : form) {
    if (mono.create != mono.annihilate || mono.create == 0 || mono.create > n || c.get_den() != 1) {
      throw std::logic_error("normal form of (ad a)^n is not a positive integer diagonal");
    }
    out[mono.create - 1] = c.get_num();
  }
  return out;
}

RationalComplex coherent_expectation(const NormalOrderedForm& form, const RationalComplex& z) {
  return expectation<RationalComplex>(form, z, z.conj());
}

std::complex<double> coherent_expectation(const NormalOrderedForm& form, std::complex<double> z) {
  return expectation<std::complex<double>>(form, z, std::conj(z));
}

std::vector<NormalOrderedForm> ordered_powers(const BosonExpression& w, unsigned nmax, const Limits& limits) {
  if (nmax > limits.moments_max_n) {
    throw ResourceLimitError("word moments limited to n <= " + std::to_string(limits.moments_max_n));
  }
  NormalOrderer orderer;
  std::vector<NormalOrderedForm> out;
  out.reserve(nmax + 1);
  BosonExpression current{BosonWord{}};
  out.push_back(orderer.order(current));
  for (unsigned n = 1; n <= nmax; ++n) {
    current = product(current, w);
    if (current.size() > limits.moments_max_words) {
      throw ResourceLimitError("w^" + std::to_string(n) + " expands to " + std::to_string(current.size()) +
                               " words, limit " + std::to_string(limits.moments_max_words));
    }
    out.push_back(orderer.order(current));
  }
  return out;
}

std::vector<RationalComplex> word_moments(const BosonExpression& w, unsigned nmax, const RationalComplex& z,
                                          const Limits& limits) {
  std::vector<RationalComplex> out;
  for (const auto& form : ordered_powers(w, nmax, limits)) out.push_back(coherent_expectation(form, z));
  return out;
}

std::vector<std::complex<double>> word_moments(const BosonExpression& w, unsigned nmax, std::complex<double> z,
                                               const Limits& limits) {
  std::vector<std::complex<double>> out;
  for (const auto& form : ordered_powers(w, nmax, limits)) out.push_back(coherent_expectation(form, z));
  return out;
}

}  // namespace bellhopf
