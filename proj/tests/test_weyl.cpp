#include <gtest/gtest.h>

#include <set>

#include "catx/weyl.hpp"

using namespace catx;

namespace {

Root R(std::initializer_list<int> c) { return Root(Coords(c)); }

const char* kSmallTypes[] = {"A1", "A2", "A3", "B2", "B3", "C3", "G2"};

// Naive closure test on coordinate vectors, independent of the sum table.
bool naive_closed(const std::set<Coords>& X, const std::set<Coords>& all_roots) {
  for (const auto& a : X) {
    for (const auto& b : X) {
      Coords s(a.size());
      for (std::size_t k = 0; k < a.size(); ++k) s[k] = a[k] + b[k];
      if (all_roots.count(s) && !X.count(s)) return false;
    }
  }
  return true;
}

}  // namespace

TEST(EnumerateWeyl, OrdersMatchProductOfDegrees) {
  for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"}) {
    const CartanType t = CartanType::parse(name);
    EXPECT_EQ(enumerate_weyl(build_root_system(t)).size(), weyl_group_order(t)) << name;
  }
  EXPECT_EQ(weyl_group_order(CartanType::parse("A2")), 6u);
  EXPECT_EQ(weyl_group_order(CartanType::parse("B2")), 8u);
  EXPECT_EQ(weyl_group_order(CartanType::parse("G2")), 12u);
}

TEST(EnumerateWeyl, OrderedByLengthThenInversions) {
  const WeylGroup W(CartanType::parse("B3"));
  const auto& e = W.elements();
  EXPECT_TRUE(e.front().is_identity());
  for (std::size_t k = 1; k < e.size(); ++k) {
    EXPECT_LE(e[k - 1].length(), e[k].length());
    EXPECT_TRUE(e[k - 1] < e[k]);
  }
}

TEST(EnumerateWeyl, GuardRefusesLargeGroups) {
  const RootSystem e7 = build_root_system(CartanType::parse("E7"));  // |W| = 2903040, allowed
  (void)e7;
  EXPECT_THROW(build_root_system(CartanType::parse("E8")), ResourceError);
}

TEST(WeylAct, Examples) {
  const WeylGroup W(CartanType::parse("A2"));
  const auto& rs = W.root_system();
  EXPECT_EQ(weyl_act(rs, W.identity(), R({0, 1})), R({0, 1}));
  EXPECT_EQ(weyl_act(rs, W.word({1}), R({0, 1})), R({1, 1}));
  const WeylElement w0 = longest_element(rs, W.simple_indices());
  EXPECT_EQ(weyl_act(rs, w0, R({1, 0})), R({0, -1}));
  EXPECT_THROW(weyl_act(rs, w0, R({2, 1})), InputError);
}

TEST(WeylAct, IsABijectionPreservingSums) {
  for (const char* name : kSmallTypes) {
    const WeylGroup W(CartanType::parse(name));
    const auto& rs = W.root_system();
    for (const auto& w : W.elements()) {
      std::set<int> image;
      for (int k = 0; k < rs.num_roots(); ++k) image.insert(w.apply(k));
      EXPECT_EQ(static_cast<int>(image.size()), rs.num_roots());
      for (int a = 0; a < rs.num_positive(); ++a) {
        for (int b = 0; b < rs.num_positive(); ++b) {
          if (auto s = rs.positive_sum(a, b)) {
            const Root wa = rs.root(w.apply(a)), wb = rs.root(w.apply(b)), ws = rs.root(w.apply(*s));
            for (int k = 0; k < rs.rank(); ++k) EXPECT_EQ(wa.coords()[k] + wb.coords()[k], ws.coords()[k]);
          }
        }
      }
    }
  }
}

TEST(InversionSet, Examples) {
  const WeylGroup W(CartanType::parse("A2"));
  const auto& rs = W.root_system();
  auto [neg, pos] = inversion_set(rs, W.identity());
  EXPECT_TRUE(neg.empty());
  EXPECT_EQ(pos.size(), 3u);
  std::tie(neg, pos) = inversion_set(rs, W.word({1}));
  EXPECT_EQ(neg, std::vector<Root>{R({1, 0})});
  EXPECT_EQ(pos, (std::vector<Root>{R({0, 1}), R({1, 1})}));
  std::tie(neg, pos) = inversion_set(rs, longest_element(rs, W.simple_indices()));
  EXPECT_EQ(neg.size(), 3u);
  EXPECT_TRUE(pos.empty());
}

TEST(WeylElement, LengthEqualsReducedWordLengthAndInversionCount) {
  for (const char* name : kSmallTypes) {
    const WeylGroup W(CartanType::parse(name));
    const auto& rs = W.root_system();
    for (const auto& w : W.elements()) {
      const auto word = w.reduced_word(rs);
      EXPECT_EQ(static_cast<int>(word.size()), w.length());
      EXPECT_EQ(static_cast<int>(w.inversions().count()), w.length());
      EXPECT_EQ(W.word(std::span<const int>(word)), w);
    }
  }
}

TEST(WeylElement, NonReducedWordsAreCanonicalized) {
  const WeylGroup W(CartanType::parse("A2"));
  EXPECT_EQ(W.word({1, 1}), W.identity());
  EXPECT_EQ(W.word({1, 2, 1}), W.word({2, 1, 2}));
  EXPECT_EQ(W.word({1, 2, 1}).reduced_word(W.root_system()), (std::vector<int>{1, 2, 1}));
  EXPECT_THROW(W.word({3}), InputError);
}

TEST(DescentSet, Examples) {
  const WeylGroup W(CartanType::parse("A2"));
  EXPECT_TRUE(descent_set(W.identity()).empty());
  EXPECT_EQ(descent_set(W.word({1, 2})), IndexSet::from_indices({2}));
  EXPECT_EQ(descent_set(longest_element(W.root_system(), W.simple_indices())), IndexSet::from_indices({1, 2}));
}

TEST(DescentSet, MatchesLengthCriterionAndIsEmptyOnlyAtIdentity) {
  for (const char* name : kSmallTypes) {
    const WeylGroup W(CartanType::parse(name));
    const auto& rs = W.root_system();
    for (const auto& w : W.elements()) {
      IndexSet by_length;
      for (int i = 1; i <= rs.rank(); ++i) {
        if ((w * WeylElement::simple_reflection(rs, i)).length() < w.length()) by_length.insert(i);
      }
      EXPECT_EQ(w.descent_set(), by_length);
      EXPECT_EQ(w.descent_set().empty(), w.is_identity());
    }
  }
}

TEST(LongestElement, Examples) {
  const WeylGroup A2(CartanType::parse("A2"));
  EXPECT_TRUE(longest_element(A2.root_system(), IndexSet{}).is_identity());
  EXPECT_EQ(longest_element(A2.root_system(), A2.simple_indices()).length(), 3);
  const WeylGroup B2(CartanType::parse("B2"));
  EXPECT_EQ(longest_element(B2.root_system(), B2.simple_indices()).length(), 4);
}

TEST(LongestElement, InvertsExactlyTheParabolicRoots) {
  for (const char* name : kSmallTypes) {
    const WeylGroup W(CartanType::parse(name));
    const auto& rs = W.root_system();
    for (IndexSet J : W.simple_indices().subsets()) {
      const WeylElement wJ = longest_element(rs, J);
      EXPECT_EQ(wJ.inversions(), rs.parabolic_positive(J));
      // Unique maximum of W_J.
      for (const auto& u : parabolic_subgroup(W, J)) EXPECT_LE(u.length(), wJ.length());
    }
  }
}

TEST(MinCosetReps, Examples) {
  const WeylGroup W(CartanType::parse("A2"));
  EXPECT_EQ(min_coset_reps(W, IndexSet::from_indices({1})),
            (std::vector<WeylElement>{W.identity(), W.word({2}), W.word({1, 2})}));
  EXPECT_EQ(min_coset_reps(W, IndexSet{}).size(), 6u);
  EXPECT_EQ(min_coset_reps(W, W.simple_indices()), std::vector<WeylElement>{W.identity()});
}

TEST(MinCosetReps, FactorizeTheGroup) {
  for (const char* name : kSmallTypes) {
    const WeylGroup W(CartanType::parse(name));
    const auto& rs = W.root_system();
    for (IndexSet J : W.simple_indices().subsets()) {
      const auto X = min_coset_reps(W, J);
      const auto WJ = parabolic_subgroup(W, J);
      EXPECT_EQ(X.size() * WJ.size(), W.order());
      std::set<WeylElement> products;
      for (const auto& x : X) {
        for (int j : J.indices()) EXPECT_TRUE(rs.is_positive_index(x.simple_image(j)));
        for (const auto& u : WJ) products.insert(x * u);
        // Oracle: x is the shortest element of its coset, found by brute force.
        for (const auto& u : WJ) EXPECT_GE((x * u).length(), x.length());
        EXPECT_EQ(min_coset_rep(x * WJ.back(), rs, J), x);
      }
      EXPECT_EQ(products.size(), W.order());
    }
  }
}

TEST(EnumerateBiclosed, Examples) {
  const WeylGroup A1(CartanType::parse("A1"));
  const auto sets = enumerate_biclosed(A1);
  ASSERT_EQ(sets.size(), 2u);
  for (const auto& b : sets) {
    ASSERT_TRUE(b.witness.has_value());
    if (b.set.none()) EXPECT_EQ(b.witness->length(), 1);
    else EXPECT_TRUE(b.witness->is_identity());
  }
  EXPECT_EQ(enumerate_biclosed(WeylGroup(CartanType::parse("A2"))).size(), 6u);
  EXPECT_EQ(enumerate_biclosed(WeylGroup(CartanType::parse("B2"))).size(), 8u);
}

TEST(EnumerateBiclosed, MatchesNaiveBruteForceAndInversionSets) {
  for (const char* name : kSmallTypes) {
    const WeylGroup W(CartanType::parse(name));
    const auto& rs = W.root_system();
    std::set<Coords> all;
    for (int k = 0; k < rs.num_roots(); ++k) all.insert(rs.root(k).coords());

    const int N = rs.num_positive();
    std::set<std::set<Coords>> naive;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << N); ++mask) {
      std::set<Coords> X, Y;
      for (int k = 0; k < N; ++k) ((mask >> k) & 1 ? X : Y).insert(rs.root(k).coords());
      if (naive_closed(X, all) && naive_closed(Y, all)) naive.insert(X);
    }

    std::set<std::set<Coords>> from_lib, from_group;
    for (const auto& b : enumerate_biclosed(W)) {
      ASSERT_TRUE(b.witness.has_value()) << name;
      EXPECT_EQ(b.witness->positive_part(), b.set);
      std::set<Coords> X;
      for (const auto& r : rs.to_roots(b.set)) X.insert(r.coords());
      from_lib.insert(X);
    }
    for (const auto& w : W.elements()) {
      std::set<Coords> X;
      for (const auto& r : rs.to_roots(w.positive_part())) X.insert(r.coords());
      from_group.insert(X);
      // Both Phi_w^+ and Phi_w^- are closed.
      EXPECT_TRUE(is_closed_subset(rs, w.positive_part()));
      EXPECT_TRUE(is_closed_subset(rs, w.inversions()));
    }
    EXPECT_EQ(naive, from_lib) << name;
    EXPECT_EQ(naive, from_group) << name;
    EXPECT_EQ(naive.size(), W.order()) << name;
  }
}

TEST(EnumerateBiclosed, GuardedByPositiveRootCount) {
  EXPECT_THROW(enumerate_biclosed(WeylGroup(CartanType::parse("A7"))), ResourceError);  // |Phi+| = 28
}
