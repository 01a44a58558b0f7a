#include "bellhopf/set_partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "bellhopf/errors.hpp"
#include "bellhopf/hopf.hpp"

namespace bellhopf {

SetPartition::SetPartition(unsigned n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {
  std::vector<bool> seen(n + 1, false);
  std::size_t total = 0;
  for (auto& block : blocks_) {
    if (block.empty()) throw DomainError("set partition has an empty block");
    std::sort(block.begin(), block.end());
    for (auto e : block) {
      if (e < 1 || e > n) throw DomainError("set partition element out of range 1..n");
      if (seen[e]) throw DomainError("set partition blocks overlap");
      seen[e] = true;
    }
    total += block.size();
  }
  if (total != n) throw DomainError("set partition does not cover 1..n");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const Block& a, const Block& b) { return a.front() < b.front(); });
}

SetPartition SetPartition::from_restricted_growth(std::span<const std::uint32_t> rgs) {
  SetPartition p;
  p.n_ = static_cast<unsigned>(rgs.size());
  std::uint32_t next = 0;
  for (std::size_t i = 0; i < rgs.size(); ++i) {
    if (rgs[i] > next) throw DomainError("not a restricted growth string");
    if (rgs[i] == next) {
      p.blocks_.emplace_back();
      ++next;
    }
    p.blocks_[rgs[i]].push_back(static_cast<std::uint32_t>(i + 1));
  }
  return p;
}

std::vector<std::uint32_t> SetPartition::block_sizes() const {
  std::vector<std::uint32_t> sizes;
  sizes.reserve(blocks_.size());
  for (const auto& b : blocks_) sizes.push_back(static_cast<std::uint32_t>(b.size()));
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

std::string to_string(const SetPartition& p) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < p.blocks().size(); ++i) {
    if (i) os << ',';
    os << '{';
    const auto& block = p.blocks()[i];
    for (std::size_t j = 0; j < block.size(); ++j) os << (j ? "," : "") << block[j];
    os << '}';
  }
  os << '}';
  return os.str();
}

SetPartitionStream::SetPartitionStream(unsigned n) : n_(n), rgs_(n, 0), prefix_max_(n, 0) {
  if (n == 0) throw DomainError("set partitions need n >= 1");
}

bool SetPartitionStream::advance() {
  if (done_) return false;
  // Rightmost position that may still grow: rgs[i] <= max(rgs[0..i-1]).
  for (std::size_t i = n_; i-- > 1;) {
    if (rgs_[i] <= prefix_max_[i - 1]) {
      ++rgs_[i];
      prefix_max_[i] = std::max(prefix_max_[i - 1], rgs_[i]);
      for (std::size_t j = i + 1; j < n_; ++j) {
        rgs_[j] = 0;
        prefix_max_[j] = prefix_max_[i];
      }
      return true;
    }
  }
  done_ = true;
  return false;
}

SetPartition SetPartitionStream::iterator::operator*() const {
  return SetPartition::from_restricted_growth(owner_->rgs_);
}

SetPartitionStream::iterator& SetPartitionStream::iterator::operator++() {
  if (!owner_->advance()) owner_ = nullptr;
  return *this;
}

SetPartitionStream enumerate_set_partitions(unsigned n, const Limits& limits) {
  if (n == 0) throw DomainError("set partitions need n >= 1");
  if (n > limits.enumeration_max_n) {
    throw ResourceLimitError("set partition enumeration limited to n <= " +
                             std::to_string(limits.enumeration_max_n) + ", got " + std::to_string(n));
  }
  return SetPartitionStream(n);
}

Integer DiagramCensus::total() const {
  Integer sum = 0;
  for (const auto& [m, c] : counts) sum += c;
  return sum;
}

DiagramCensus diagram_census(unsigned n, const Limits& limits) {
  DiagramCensus census;
  census.n = n;
  for (const SetPartition& p : enumerate_set_partitions(n, limits)) {
    census.counts[code_diagram(p)] += 1;
  }
  return census;
}

}  // namespace bellhopf
