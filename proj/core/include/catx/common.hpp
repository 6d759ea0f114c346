#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace catx {

/// Malformed or out-of-domain arguments (bad type strings, roots outside Phi, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A desk-scale guard (rank, |W|, 2^|Phi+|, module dimension) would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Opt-in switch for the size guards.
struct Guard {
  bool override_limits = false;
};

/// A subset of {1, ..., 32}, stored as a bit mask (bit k-1 <-> index k).
///
/// Used for simple-index subsets J, K, I(theta), descent sets and for the
/// vertices Y, Z of the incidence algebra.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint32_t mask) : mask_(mask) {}

  static IndexSet from_indices(const std::vector<int>& one_based);
  static constexpr IndexSet full(int n) {
    return IndexSet(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
  }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(int one_based) const {
    return one_based >= 1 && one_based <= 32 && ((mask_ >> (one_based - 1)) & 1u);
  }
  constexpr bool subset_of(IndexSet other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr bool proper_subset_of(IndexSet other) const {
    return subset_of(other) && mask_ != other.mask_;
  }

  constexpr IndexSet operator|(IndexSet o) const { return IndexSet(mask_ | o.mask_); }
  constexpr IndexSet operator&(IndexSet o) const { return IndexSet(mask_ & o.mask_); }
  /// Set difference.
  constexpr IndexSet operator-(IndexSet o) const { return IndexSet(mask_ & ~o.mask_); }

  void insert(int one_based);

  /// Sorted 1-based members.
  std::vector<int> indices() const;
  /// "[1,3]" style rendering, the on-disk spelling of subsets.
  std::string to_string() const;

  /// All subsets of this set, in increasing mask order.
  std::vector<IndexSet> subsets() const;

  friend constexpr bool operator==(IndexSet, IndexSet) = default;

  /// Orders by size, then lexicographically on the sorted member lists.
  friend bool operator<(IndexSet a, IndexSet b);

 private:
  std::uint32_t mask_ = 0;
};

}  // namespace catx
