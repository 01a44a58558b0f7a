#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "bellhopf/exact.hpp"
#include "bellhopf/limits.hpp"
#include "bellhopf/monomial.hpp"

namespace bellhopf {

/// A partition of {1,...,n} into disjoint nonempty blocks, held in canonical
/// form: each block ascending, blocks ordered by least element.
class SetPartition {
 public:
  using Block = std::vector<std::uint32_t>;

  /// Validates and canonicalizes; throws DomainError if the blocks are not a
  /// partition of {1,...,n}.
  SetPartition(unsigned n, std::vector<Block> blocks);

  /// Builds the partition encoded by a restricted growth string
  /// (rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1])).
  static SetPartition from_restricted_growth(std::span<const std::uint32_t> rgs);

  unsigned size() const noexcept { return n_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  /// Block sizes in descending order.
  std::vector<std::uint32_t> block_sizes() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;

 private:
  SetPartition() = default;
  unsigned n_ = 0;
  std::vector<Block> blocks_;
};

/// "{{1,3},{2}}"
std::string to_string(const SetPartition& p);

/// Streams every partition of {1,...,n} once, in lexicographic order of
/// restricted growth strings: {{1,...,n}} first, all singletons last.
class SetPartitionStream {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = SetPartition;
    using difference_type = std::ptrdiff_t;
    using pointer = const SetPartition*;
    using reference = SetPartition;

    iterator() = default;
    SetPartition operator*() const;
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.owner_ == b.owner_; }

   private:
    friend class SetPartitionStream;
    explicit iterator(SetPartitionStream* owner) : owner_(owner) {}
    SetPartitionStream* owner_ = nullptr;
  };

  explicit SetPartitionStream(unsigned n);

  iterator begin() { return iterator(done_ ? nullptr : this); }
  iterator end() { return iterator(nullptr); }

  /// Current restricted growth string (0-based block labels).
  std::span<const std::uint32_t> current_rgs() const noexcept { return rgs_; }
  /// Advances to the next partition; false once the stream is exhausted.
  bool advance();
  bool done() const noexcept { return done_; }

 private:
  unsigned n_;
  std::vector<std::uint32_t> rgs_;
  std::vector<std::uint32_t> prefix_max_;  // max(rgs_[0..i])
  bool done_ = false;
};

/// Streams the partitions of {1,...,n}. Requires 1 <= n <= limits.enumeration_max_n
/// (ResourceLimitError otherwise; DomainError for n = 0).
SetPartitionStream enumerate_set_partitions(unsigned n, const Limits& limits = {});

/// Partitions of {1,...,n} grouped by diagram code (block-size multiset as a
/// monomial, block of size k -> y_k).
struct DiagramCensus {
  unsigned n = 0;
  std::map<Monomial, Integer> counts;

  Integer total() const;
};

DiagramCensus diagram_census(unsigned n, const Limits& limits = {});

}  // namespace bellhopf
