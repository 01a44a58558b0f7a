#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bellhopf/hopf.hpp"
#include "bellhopf/limits.hpp"

namespace bellhopf {

/// Outcome of one axiom sweep. A failing report carries the first
/// counterexample found, in printable form.
struct AxiomReport {
  std::string axiom;
  bool passed = true;
  std::size_t cases = 0;
  std::optional<std::string> counterexample;
};

using AntipodeMap = std::function<HopfElement(const HopfElement&)>;

struct AxiomConfig {
  unsigned max_weight = 6;
  /// Random rational linear combinations checked in addition to the basis.
  std::size_t random_elements = 100;
  std::uint64_t seed = 0x5eed;
  /// Map used in place of the antipode (fault injection); defaults to antipode().
  AntipodeMap antipode;
};

/// S with the sign of every monomial of degree >= 2 flipped. Satisfies
/// S(e) = e and S(y_k) = -y_k but breaks the convolution identity.
HopfElement corrupted_antipode(const HopfElement& a);

// Each check visits every basis monomial of weight <= max_weight (pairs with
// total weight <= max_weight for the two-argument laws) and then the random
// elements. Throws ResourceLimitError if max_weight > limits.hopf_max_weight.
AxiomReport check_coassociativity(const AxiomConfig& config, const Limits& limits = {});
AxiomReport check_counit(const AxiomConfig& config, const Limits& limits = {});
AxiomReport check_antipode(const AxiomConfig& config, const Limits& limits = {});
AxiomReport check_bialgebra(const AxiomConfig& config, const Limits& limits = {});
AxiomReport check_commutativity(const AxiomConfig& config, const Limits& limits = {});
AxiomReport check_cocommutativity(const AxiomConfig& config, const Limits& limits = {});

/// POLY side: the specialization y_k -> x commutes with product, coproduct,
/// counit and antipode, and the axioms hold on x^d for d <= max_weight.
AxiomReport check_poly_specialization(const AxiomConfig& config, const Limits& limits = {});

/// All of the above, in a fixed order.
std::vector<AxiomReport> check_all_axioms(const AxiomConfig& config, const Limits& limits = {});

/// (Delta (x) id) Delta and (id (x) Delta) Delta.
Tensor3Element coproduct_left(const HopfElement& a);
Tensor3Element coproduct_right(const HopfElement& a);

/// Random element with `terms` monomials of weight <= max_weight and small
/// nonzero rational coefficients.
HopfElement random_element(std::mt19937_64& rng, unsigned max_weight, std::size_t terms);

}  // namespace bellhopf
