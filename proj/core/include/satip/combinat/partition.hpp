#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "satip/exact/number.hpp"

namespace satip::combinat {

using exact::Integer;

// Weakly decreasing sequence of positive parts; trailing zeros are dropped
// on construction, so (3,1,0) and (3,1) are the same partition.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<long> parts);
  explicit Partition(std::vector<long> parts);

  // "87,62" or "" (the empty partition); zeros are allowed and dropped.
  static Partition parse(std::string_view text);

  const std::vector<long>& parts() const noexcept { return parts_; }
  std::size_t height() const noexcept { return parts_.size(); }
  long size() const noexcept { return size_; }
  bool empty() const noexcept { return parts_.empty(); }
  // Part i (0-based), zero beyond the height.
  long operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  Partition conjugate() const;
  Partition scaled(long n) const;
  // Young diagram containment.
  bool contains(const Partition& inner) const noexcept;
  // Parts padded with zeros to `length` entries (length >= height).
  std::vector<long> padded(std::size_t length) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<long> parts_;
  long size_ = 0;
};

// A conjugacy class of S_m, written as its cycle lengths.
using CycleType = Partition;

// Order of the centralizer of a permutation of cycle type rho: prod i^{m_i} m_i!.
Integer centralizer_size(const CycleType& rho);
Integer factorial(long n);

// Partitions of n with at most max_height parts and parts at most max_part,
// in decreasing lexicographic order.
std::vector<Partition> partitions(long n, long max_height = -1, long max_part = -1);

// Dominance order on partitions of the same size.
bool dominates(const Partition& a, const Partition& b);

}  // namespace satip::combinat
