#pragma once

#include <array>
#include <utility>

#include "bellhopf/exact.hpp"
#include "bellhopf/linear_combination.hpp"
#include "bellhopf/monomial.hpp"
#include "bellhopf/set_partition.hpp"

namespace bellhopf {

// The Hopf algebra of diagrams: the free commutative algebra Q[y_1, y_2, ...]
// with every generator primitive,
//   Delta(y_k) = y_k (x) e + e (x) y_k,   eps(y_k) = 0,   S(y_k) = -y_k.
// Basis elements (monomials) are forests of connected diagrams.

using HopfElement = LinearCombination<Monomial>;
using TensorKey = std::pair<Monomial, Monomial>;
using TensorElement = LinearCombination<TensorKey>;
using Tensor3Key = std::array<Monomial, 3>;
using Tensor3Element = LinearCombination<Tensor3Key>;

inline HopfElement unit_element() { return HopfElement(Monomial::unit()); }
inline HopfElement generator(Monomial::Letter k) { return HopfElement(Monomial::letter(k)); }

HopfElement product(const HopfElement& a, const HopfElement& b);
TensorElement product(const TensorElement& a, const TensorElement& b);

/// Delta on one monomial prod y_k^{m_k}:
///   sum_{j <= m} prod_k C(m_k, j_k) (prod y_k^{j_k}) (x) (prod y_k^{m_k - j_k}).
TensorElement coproduct(const Monomial& m);
TensorElement coproduct(const HopfElement& a);

/// Coefficient of the unit monomial.
Rational counit(const HopfElement& a);

/// (-1)^degree on each monomial. Since the algebra is commutative, the
/// anti-homomorphism S(AB) = S(B)S(A) is the same map as the homomorphic
/// extension of S(y_k) = -y_k.
HopfElement antipode(const Monomial& m);
HopfElement antipode(const HopfElement& a);

/// Multiplication map m: A (x) A -> A.
HopfElement multiply(const TensorElement& t);
/// Flip a (x) b -> b (x) a.
TensorElement swap(const TensorElement& t);

/// Every y_k -> x, where the single POLY generator x is represented by y_1.
/// This is a Hopf algebra morphism onto the one-variable subalgebra Q[x].
HopfElement poly_specialize(const HopfElement& a);

/// One letter y_k per block of size k: weight = n, degree = block count.
Monomial code_diagram(const SetPartition& p);

/// Largest monomial weight present (0 for the zero element).
std::uint64_t max_weight(const HopfElement& a);

}  // namespace bellhopf
