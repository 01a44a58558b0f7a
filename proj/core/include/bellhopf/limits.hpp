#pragma once

#include <cstddef>

namespace bellhopf {

// Desk-scale guards. Every operation that can blow up takes one of these and
// throws ResourceLimitError instead of running away.
struct Limits {
  unsigned enumeration_max_n = 14;      // B(14) ~ 1.9e8 set partitions
  unsigned ordering_max_n = 12;         // (a^dagger a)^n in stirling_via_ordering
  unsigned moments_max_n = 24;          // nmax accepted by word_moments
  std::size_t moments_max_words = 1u << 20;  // terms in an expanded w^n
  unsigned hopf_max_weight = 8;         // exhaustive axiom sweeps
};

}  // namespace bellhopf
