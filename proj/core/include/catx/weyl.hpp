#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "catx/rootsystem.hpp"

namespace catx {

/// An element of the Weyl group, stored as the permutation it induces on Phi.
///
/// Two elements are equal iff their permutations agree, which happens iff
/// their inversion sets agree. Reduced words are derived on demand.
class WeylElement {
 public:
  static WeylElement identity(const RootSystem& rs);
  /// s_i for a 1-based simple index.
  static WeylElement simple_reflection(const RootSystem& rs, int simple);
  /// Product s_{w[0]} s_{w[1]} ...; the word need not be reduced.
  static WeylElement from_word(const RootSystem& rs, std::span<const int> word);

  /// Root index of w(root(index)).
  int apply(int index) const { return perm_[index]; }
  Root act(const RootSystem& rs, const Root& beta) const;

  /// Image of the simple root alpha_i (1-based), as a root index.
  int simple_image(int simple) const { return perm_[simple - 1]; }

  /// Phi_w^- = {alpha in Phi+ : w(alpha) in Phi-}.
  const RootSet& inversions() const { return inversions_; }
  /// Phi_w^+ = Phi+ minus Phi_w^-.
  RootSet positive_part() const;
  int length() const { return length_; }
  bool is_identity() const { return length_ == 0; }
  int rank() const { return rank_; }
  int num_positive() const { return static_cast<int>(perm_.size() / 2); }

  /// Right descents {i : w s_i < w} = {i : w(alpha_i) < 0}.
  IndexSet descent_set() const;
  /// Left descents {i : s_i w < w} = {i : w^{-1}(alpha_i) < 0}.
  IndexSet left_descent_set() const;

  /// Lexicographically smallest reduced word, 1-based.
  std::vector<int> reduced_word(const RootSystem& rs) const;

  /// Composition (this o other): first other, then this.
  WeylElement operator*(const WeylElement& other) const;
  WeylElement inverse() const;

  /// w(X) for X a set of positive roots; nullopt if some image is negative.
  std::optional<RootSet> map_positive(const RootSet& set) const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.perm_ == b.perm_; }
  /// By length, then lexicographically on the sorted inversion index lists.
  friend std::strong_ordering operator<=>(const WeylElement& a, const WeylElement& b);

 private:
  WeylElement(std::vector<std::uint8_t> perm, int rank);

  std::vector<std::uint8_t> perm_;
  RootSet inversions_;
  int length_ = 0;
  int rank_ = 0;
};

/// The pair (Phi_w^-, Phi_w^+) as root lists.
std::pair<std::vector<Root>, std::vector<Root>> inversion_set(const RootSystem& rs,
                                                              const WeylElement& w);

/// w(beta); throws InputError if beta is not a root of rs.
Root weyl_act(const RootSystem& rs, const WeylElement& w, const Root& beta);

IndexSet descent_set(const WeylElement& w);

/// w_J, the longest element of the parabolic subgroup W_J.
WeylElement longest_element(const RootSystem& rs, IndexSet J);

/// All of W, ordered by length and then by the sorted inversion sets.
/// Throws ResourceError when |W| > 10^7 and the guard is not overridden.
std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, Guard guard = {});

/// An enumerated Weyl group together with its root system.
class WeylGroup {
 public:
  explicit WeylGroup(RootSystem rs, Guard guard = {});
  explicit WeylGroup(const CartanType& type, Guard guard = {});

  const RootSystem& root_system() const { return rs_; }
  const std::vector<WeylElement>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  int rank() const { return rs_.rank(); }
  IndexSet simple_indices() const { return IndexSet::full(rs_.rank()); }

  const WeylElement& identity() const { return elements_.front(); }
  /// Position of w in elements().
  std::size_t index_of(const WeylElement& w) const;
  /// The element whose inversion set is exactly `inversions`, if any.
  std::optional<std::size_t> find_by_inversions(const RootSet& inversions) const;

  WeylElement word(std::span<const int> word) const { return WeylElement::from_word(rs_, word); }
  WeylElement word(std::initializer_list<int> word) const {
    return WeylElement::from_word(rs_, std::span<const int>(word.begin(), word.size()));
  }

 private:
  RootSystem rs_;
  std::vector<WeylElement> elements_;
  struct SetHash {
    std::size_t operator()(const RootSet& s) const;
  };
  std::unordered_map<RootSet, std::size_t, SetHash> by_inversions_;
};

/// W_J as a subset of the enumerated group (in group order).
std::vector<WeylElement> parabolic_subgroup(const WeylGroup& W, IndexSet J);

/// X_J = {x : x(alpha_j) > 0 for all j in J}, the minimal-length
/// representatives of the cosets x W_J, in group order.
std::vector<WeylElement> min_coset_reps(const WeylGroup& W, IndexSet J);

/// Minimal-length element of w W_J.
WeylElement min_coset_rep(const WeylElement& w, const RootSystem& rs, IndexSet J);

struct BiclosedSet {
  RootSet set;
  /// The unique w with set == Phi_w^+, if one exists.
  std::optional<WeylElement> witness;
};

/// Every X in Phi+ with X and Phi+ minus X closed, with its Weyl witness.
/// Guarded to |Phi+| <= 24 unless overridden.
std::vector<BiclosedSet> enumerate_biclosed(const WeylGroup& W, Guard guard = {});

}  // namespace catx
