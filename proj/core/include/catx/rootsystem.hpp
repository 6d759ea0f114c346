#pragma once

#include <bitset>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "catx/common.hpp"

namespace catx {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Finite crystallographic Cartan type, e.g. A2, B3, G2.
class CartanType {
 public:
  /// Throws InputError unless the family/rank pair names a finite type.
  CartanType(Family family, int rank);

  /// Case-insensitive parse of "A1".."A8", "B2".."B8", "C2".."C8", "D4".."D8",
  /// "E6".."E8", "F4", "G2".
  static CartanType parse(std::string_view text);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  friend bool operator==(const CartanType&, const CartanType&) = default;

 private:
  Family family_;
  int rank_;
};

/// |W| from the product of the degrees of the basic invariants.
std::uint64_t weyl_group_order(const CartanType& type);

/// Integer vector in the simple-root basis. Not necessarily a root.
using Coords = std::vector<int>;

/// A nonzero sign-coherent vector in the simple-root basis.
class Root {
 public:
  /// Rejects the zero vector and mixed-sign vectors.
  explicit Root(Coords coords);

  const Coords& coords() const { return coords_; }
  int rank() const { return static_cast<int>(coords_.size()); }
  int height() const;
  bool is_positive() const;
  Root operator-() const;

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;

 private:
  Coords coords_;
};

/// Bit mask over positive-root indices; |Phi+| <= 120 for every finite type.
using RootSet = std::bitset<128>;

/// Positive roots of a finite crystallographic root system.
///
/// Roots are indexed 0..2N-1: indices [0, N) are the positive roots sorted by
/// height and then by descending coordinate vector (so alpha_i sits at i-1),
/// and index N + k is the negative of positive root k.
class RootSystem {
 public:
  const CartanType& cartan_type() const { return type_; }
  int rank() const { return type_.rank(); }
  /// Entry (i, j) is <alpha_i^vee, alpha_j>.
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

  const std::vector<Root>& positive_roots() const { return positive_; }
  int num_positive() const { return static_cast<int>(positive_.size()); }
  int num_roots() const { return 2 * num_positive(); }

  const Root& root(int index) const { return index < num_positive() ? positive_[index] : negative_[index - num_positive()]; }
  bool is_positive_index(int index) const { return index < num_positive(); }
  int negate_index(int index) const {
    return index < num_positive() ? index + num_positive() : index - num_positive();
  }

  std::optional<int> index_of(const Coords& coords) const;
  /// Throws InputError if the vector is not a root.
  int require_index(const Coords& coords) const;

  /// Index of s_i(root(index)); `simple` is 1-based.
  int reflect_index(int simple, int index) const { return reflection_[simple - 1][index]; }

  /// For positive indices a, b: index of alpha_a + alpha_b if that is a root.
  std::optional<int> positive_sum(int a, int b) const {
    const int s = sum_[a * num_positive() + b];
    return s < 0 ? std::nullopt : std::optional<int>(s);
  }

  /// Indices of positive roots whose support lies in J.
  RootSet parabolic_positive(IndexSet J) const;
  RootSet all_positive() const;

  std::vector<Root> to_roots(const RootSet& set) const;
  /// Throws InputError for anything that is not a positive root.
  RootSet to_set(const std::vector<Root>& roots) const;

 private:
  friend RootSystem build_root_system(const CartanType&, Guard);
  explicit RootSystem(CartanType type) : type_(type) {}

  CartanType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> positive_;
  std::vector<Root> negative_;
  std::vector<std::vector<int>> reflection_;
  std::vector<int> sum_;
  struct CoordsHash {
    std::size_t operator()(const Coords& c) const;
  };
  std::unordered_map<Coords, int, CoordsHash> lookup_;
};

/// Cartan matrix of a finite type in Bourbaki numbering.
std::vector<std::vector<int>> cartan_matrix(const CartanType& type);

/// Refuses rank > 8 or |W| > 10^7 unless the guard is overridden.
RootSystem build_root_system(const CartanType& type, Guard guard = {});

/// s_i(beta) = beta - <beta, alpha_i^vee> alpha_i; `simple` is 1-based.
Root reflect_root(const RootSystem& rs, int simple, const Root& beta);

/// All (m, n) with m, n > 0 and m*alpha + n*beta a positive root.
std::vector<std::pair<int, int>> root_string(const RootSystem& rs, const Root& alpha,
                                             const Root& beta);

/// Pairwise-sum closure: alpha, beta in X and alpha + beta in Phi imply alpha + beta in X.
bool is_closed_subset(const RootSystem& rs, const std::vector<Root>& subset);
bool is_closed_subset(const RootSystem& rs, const RootSet& subset);

}  // namespace catx
