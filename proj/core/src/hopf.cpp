#include "bellhopf/hopf.hpp"

#include <algorithm>

namespace bellhopf {

HopfElement product(const HopfElement& a, const HopfElement& b) {
  HopfElement out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

TensorElement product(const TensorElement& a, const TensorElement& b) {
  TensorElement out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      out.add_term({ka.first * kb.first, ka.second * kb.second}, ca * cb);
    }
  }
  return out;
}

TensorElement coproduct(const Monomial& m) {
  // Distribute each y_k^{m_k} as sum_j C(m_k, j) y_k^j (x) y_k^{m_k - j}.
  TensorElement out(TensorKey{Monomial::unit(), Monomial::unit()});
  for (const auto& [letter, power] : m.factorization()) {
    TensorElement factor;
    for (unsigned j = 0; j <= power; ++j) {
      factor.add_term({Monomial::letter(letter, j), Monomial::letter(letter, power - j)},
                      Rational(binomial(power, j)));
    }
    out = product(out, factor);
  }
  return out;
}

TensorElement coproduct(const HopfElement& a) {
  TensorElement out;
  for (const auto& [m, c] : a) out += coproduct(m) * c;
  return out;
}

Rational counit(const HopfElement& a) { return a.coefficient(Monomial::unit()); }

HopfElement antipode(const Monomial& m) {
  return HopfElement(m, Rational(m.degree() % 2 == 0 ? 1 : -1));
}

HopfElement antipode(const HopfElement& a) {
  HopfElement out;
  for (const auto& [m, c] : a) out.add_term(m, m.degree() % 2 == 0 ? c : Rational(-c));
  return out;
}

HopfElement multiply(const TensorElement& t) {
  HopfElement out;
  for (const auto& [key, c] : t) out.add_term(key.first * key.second, c);
  return out;
}

TensorElement swap(const TensorElement& t) {
  TensorElement out;
  for (const auto& [key, c] : t) out.add_term({key.second, key.first}, c);
  return out;
}

HopfElement poly_specialize(const HopfElement& a) {
  HopfElement out;
  for (const auto& [m, c] : a) out.add_term(Monomial::letter(1, static_cast<unsigned>(m.degree())), c);
  return out;
}

Monomial code_diagram(const SetPartition& p) {
  std::vector<Monomial::Letter> letters;
  letters.reserve(p.block_count());
  for (const auto& block : p.blocks()) letters.push_back(static_cast<Monomial::Letter>(block.size()));
  return Monomial(std::move(letters));
}

std::uint64_t max_weight(const HopfElement& a) {
  std::uint64_t w = 0;
  for (const auto& [m, c] : a) w = std::max(w, m.weight());
  return w;
}

}  // namespace bellhopf
