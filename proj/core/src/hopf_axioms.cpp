#include "bellhopf/hopf_axioms.hpp"

#include <random>

#include "bellhopf/errors.hpp"
#include "bellhopf/hopf_text.hpp"

namespace bellhopf {

namespace {

using Failure = std::optional<std::string>;

void require_weight(const AxiomConfig& config, const Limits& limits) {
  if (config.max_weight > limits.hopf_max_weight) {
    throw ResourceLimitError("axiom sweep limited to weight <= " + std::to_string(limits.hopf_max_weight) +
                             ", got " + std::to_string(config.max_weight));
  }
}

AntipodeMap antipode_of(const AxiomConfig& config) {
  if (config.antipode) return config.antipode;
  return [](const HopfElement& a) { return antipode(a); };
}

/// Basis monomials of weight <= max_weight followed by the random elements.
std::vector<HopfElement> sample_elements(const AxiomConfig& config) {
  std::vector<HopfElement> out;
  for (const auto& m : monomials_up_to_weight(config.max_weight)) out.emplace_back(m);
  std::mt19937_64 rng(config.seed);
  for (std::size_t i = 0; i < config.random_elements; ++i) {
    out.push_back(random_element(rng, config.max_weight, 1 + i % 5));
  }
  return out;
}

/// Basis pairs with total weight <= max_weight, then consecutive random pairs.
std::vector<std::pair<HopfElement, HopfElement>> sample_pairs(const AxiomConfig& config) {
  std::vector<std::pair<HopfElement, HopfElement>> out;
  const auto basis = monomials_up_to_weight(config.max_weight);
  for (const auto& a : basis) {
    for (const auto& b : basis) {
      if (a.weight() + b.weight() <= config.max_weight) out.emplace_back(HopfElement(a), HopfElement(b));
    }
  }
  std::mt19937_64 rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t i = 0; i < config.random_elements; ++i) {
    out.emplace_back(random_element(rng, config.max_weight, 1 + i % 4),
                     random_element(rng, config.max_weight, 1 + (i + 2) % 4));
  }
  return out;
}

template <class Check>
AxiomReport sweep(std::string name, const std::vector<HopfElement>& elements, Check check) {
  AxiomReport report;
  report.axiom = std::move(name);
  for (const auto& a : elements) {
    ++report.cases;
    if (Failure f = check(a)) {
      report.passed = false;
      report.counterexample = "at " + to_string(a) + ": " + *f;
      break;
    }
  }
  return report;
}

template <class Check>
AxiomReport sweep_pairs(std::string name, const std::vector<std::pair<HopfElement, HopfElement>>& pairs,
                        Check check) {
  AxiomReport report;
  report.axiom = std::move(name);
  for (const auto& [a, b] : pairs) {
    ++report.cases;
    if (Failure f = check(a, b)) {
      report.passed = false;
      report.counterexample = "at (" + to_string(a) + ", " + to_string(b) + "): " + *f;
      break;
    }
  }
  return report;
}

/// a -> sum c S(l) r  (side = left) or sum c l S(r) (side = right).
HopfElement antipode_convolution(const HopfElement& a, const AntipodeMap& s, bool left) {
  HopfElement out;
  for (const auto& [key, c] : coproduct(a)) {
    HopfElement l(key.first), r(key.second);
    out += (left ? product(s(l), r) : product(l, s(r))) * c;
  }
  return out;
}

Failure antipode_identity(const HopfElement& a, const AntipodeMap& s) {
  const HopfElement expected = unit_element() * counit(a);
  const HopfElement lhs = antipode_convolution(a, s, true);
  if (lhs != expected) return "m(S (x) id)Delta = " + to_string(lhs) + ", expected " + to_string(expected);
  const HopfElement rhs = antipode_convolution(a, s, false);
  if (rhs != expected) return "m(id (x) S)Delta = " + to_string(rhs) + ", expected " + to_string(expected);
  return std::nullopt;
}

Failure coassociative(const HopfElement& a) {
  if (coproduct_left(a) != coproduct_right(a)) return std::string("(Delta (x) id)Delta != (id (x) Delta)Delta");
  return std::nullopt;
}

Failure counital(const HopfElement& a) {
  HopfElement left, right;
  for (const auto& [key, c] : coproduct(a)) {
    if (key.first.is_unit()) right.add_term(key.second, c);   // (eps (x) id)
    if (key.second.is_unit()) left.add_term(key.first, c);   // (id (x) eps)
  }
  if (right != a) return "(eps (x) id)Delta = " + to_string(right);
  if (left != a) return "(id (x) eps)Delta = " + to_string(left);
  return std::nullopt;
}

TensorElement specialize_both(const TensorElement& t) {
  TensorElement out;
  for (const auto& [key, c] : t) {
    out.add_term({Monomial::letter(1, static_cast<unsigned>(key.first.degree())),
                  Monomial::letter(1, static_cast<unsigned>(key.second.degree()))},
                 c);
  }
  return out;
}

}  // namespace

HopfElement corrupted_antipode(const HopfElement& a) {
  HopfElement out;
  for (const auto& [m, c] : a) {
    bool negative = m.degree() % 2 == 1;
    if (m.degree() >= 2) negative = !negative;
    out.add_term(m, negative ? Rational(-c) : c);
  }
  return out;
}

HopfElement random_element(std::mt19937_64& rng, unsigned max_weight, std::size_t terms) {
  const auto basis = monomials_up_to_weight(max_weight);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> numerator(-9, 9);
  std::uniform_int_distribution<int> denominator(1, 5);
  HopfElement out;
  while (out.size() < terms && out.size() < basis.size()) {
    int num = 0;
    while (num == 0) num = numerator(rng);
    Rational c(num, denominator(rng));
    c.canonicalize();
    out.add_term(basis[pick(rng)], c);
  }
  return out;
}

Tensor3Element coproduct_left(const HopfElement& a) {
  Tensor3Element out;
  for (const auto& [key, c] : coproduct(a)) {
    for (const auto& [inner, d] : coproduct(key.first)) {
      out.add_term({inner.first, inner.second, key.second}, c * d);
    }
  }
  return out;
}

Tensor3Element coproduct_right(const HopfElement& a) {
  Tensor3Element out;
  for (const auto& [key, c] : coproduct(a)) {
    for (const auto& [inner, d] : coproduct(key.second)) {
      out.add_term({key.first, inner.first, inner.second}, c * d);
    }
  }
  return out;
}

AxiomReport check_coassociativity(const AxiomConfig& config, const Limits& limits) {
  require_weight(config, limits);
  return sweep("coassociativity", sample_elements(config), coassociative);
}

AxiomReport check_counit(const AxiomConfig& config, const Limits& limits) {
  require_weight(config, limits);
  return sweep("counit", sample_elements(config), counital);
}

AxiomReport check_antipode(const AxiomConfig& config, const Limits& limits) {
  require_weight(config, limits);
  const AntipodeMap s = antipode_of(config);
  return sweep("antipode", sample_elements(config), [&](const HopfElement& a) { return antipode_identity(a, s); });
}

AxiomReport check_bialgebra(const AxiomConfig& config, const Limits& limits) {
  require_weight(config, limits);
  if (coproduct(unit_element()) != TensorElement(TensorKey{Monomial::unit(), Monomial::unit()})) {
    AxiomReport report;
    report.axiom = "bialgebra";
    report.passed = false;
    report.cases = 1;
    report.counterexample = "Delta(e) != e (x) e";
    return report;
  }
  return sweep_pairs("bialgebra", sample_pairs(config), [](const HopfElement& a, const HopfElement& b) -> Failure {
    if (coproduct(product(a, b)) != product(coproduct(a), coproduct(b))) {
      return std::string("Delta(AB) != Delta(A)Delta(B)");
    }
    if (counit(product(a, b)) != counit(a) * counit(b)) return std::string("eps(AB) != eps(A)eps(B)");
    return std::nullopt;
  });
}

AxiomReport check_commutativity(const AxiomConfig& config, const Limits& limits) {
  require_weight(config, limits);
  return sweep_pairs("commutativity", sample_pairs(config), [](const HopfElement& a, const HopfElement& b) -> Failure {
    if (product(a, b) != product(b, a)) return std::string("AB != BA");
    return std::nullopt;
  });
}

AxiomReport check_cocommutativity(const AxiomConfig& config, const Limits& limits) {
  require_weight(config, limits);
  return sweep("cocommutativity", sample_elements(config), [](const HopfElement& a) -> Failure {
    const TensorElement d = coproduct(a);
    if (swap(d) != d) return std::string("tau Delta != Delta");
    return std::nullopt;
  });
}

AxiomReport check_poly_specialization(const AxiomConfig& config, const Limits& limits) {
  require_weight(config, limits);
  const AntipodeMap s = antipode_of(config);
  const HopfElement x = generator(1);

  AxiomReport report;
  report.axiom = "poly";
  auto fail = [&](std::string what) {
    report.passed = false;
    report.counterexample = std::move(what);
    return report;
  };

  // The generator rules of POLY.
  ++report.cases;
  if (coproduct(x) != TensorElement(TensorKey{x.begin()->first, Monomial::unit()}) +
                          TensorElement(TensorKey{Monomial::unit(), x.begin()->first})) {
    return fail("Delta(x) != x (x) e + e (x) x");
  }
  if (s(x) != -x) return fail("S(x) != -x");

  // Axioms on the powers x^d.
  for (unsigned d = 0; d <= config.max_weight; ++d) {
    ++report.cases;
    const HopfElement xd(Monomial::letter(1, d));
    for (Failure f : {coassociative(xd), counital(xd), antipode_identity(xd, s)}) {
      if (f) return fail("at " + to_string(xd) + ": " + *f);
    }
  }

  // The specialization is a morphism of Hopf algebras.
  for (const auto& [a, b] : sample_pairs(config)) {
    ++report.cases;
    const HopfElement pa = poly_specialize(a);
    if (poly_specialize(product(a, b)) != product(pa, poly_specialize(b))) {
      return fail("at " + to_string(a) + ": phi(AB) != phi(A)phi(B)");
    }
    if (coproduct(pa) != specialize_both(coproduct(a))) return fail("at " + to_string(a) + ": Delta phi != (phi (x) phi) Delta");
    if (counit(pa) != counit(a)) return fail("at " + to_string(a) + ": eps phi != eps");
    if (s(pa) != poly_specialize(s(a))) return fail("at " + to_string(a) + ": S phi != phi S");
  }
  return report;
}

std::vector<AxiomReport> check_all_axioms(const AxiomConfig& config, const Limits& limits) {
  return {check_coassociativity(config, limits), check_counit(config, limits),
          check_antipode(config, limits),        check_bialgebra(config, limits),
          check_commutativity(config, limits),   check_cocommutativity(config, limits),
          check_poly_specialization(config, limits)};
}

}  // namespace bellhopf
