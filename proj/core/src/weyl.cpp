#include "catx/weyl.hpp"

#include <algorithm>
#include <deque>

namespace catx {

namespace {

constexpr int kMaxBiclosedPositive = 24;

int compare_sets(const RootSet& a, const RootSet& b, int n) {
  // Lexicographic comparison of the sorted index lists.
  for (int k = 0; k < n; ++k) {
    const bool x = a.test(k), y = b.test(k);
    if (x == y) continue;
    // Equal lengths: the list holding the first differing index is smaller.
    return x ? -1 : 1;
  }
  return 0;
}

}  // namespace

WeylElement::WeylElement(std::vector<std::uint8_t> perm, int rank)
    : perm_(std::move(perm)), rank_(rank) {
  const int N = num_positive();
  for (int k = 0; k < N; ++k) {
    if (perm_[k] >= N) inversions_.set(k);
  }
  length_ = static_cast<int>(inversions_.count());
}

WeylElement WeylElement::identity(const RootSystem& rs) {
  std::vector<std::uint8_t> p(rs.num_roots());
  for (int k = 0; k < rs.num_roots(); ++k) p[k] = static_cast<std::uint8_t>(k);
  return WeylElement(std::move(p), rs.rank());
}

WeylElement WeylElement::simple_reflection(const RootSystem& rs, int simple) {
  if (simple < 1 || simple > rs.rank()) {
    throw InputError("simple index " + std::to_string(simple) + " out of range for " +
                     rs.cartan_type().name());
  }
  std::vector<std::uint8_t> p(rs.num_roots());
  for (int k = 0; k < rs.num_roots(); ++k) p[k] = static_cast<std::uint8_t>(rs.reflect_index(simple, k));
  return WeylElement(std::move(p), rs.rank());
}

WeylElement WeylElement::from_word(const RootSystem& rs, std::span<const int> word) {
  WeylElement w = identity(rs);
  for (int i : word) w = w * simple_reflection(rs, i);
  return w;
}

Root WeylElement::act(const RootSystem& rs, const Root& beta) const {
  return rs.root(apply(rs.require_index(beta.coords())));
}

RootSet WeylElement::positive_part() const {
  RootSet all;
  for (int k = 0; k < num_positive(); ++k) all.set(k);
  return all & ~inversions_;
}

IndexSet WeylElement::descent_set() const {
  IndexSet d;
  for (int i = 1; i <= rank_; ++i) {
    if (perm_[i - 1] >= num_positive()) d.insert(i);
  }
  return d;
}

IndexSet WeylElement::left_descent_set() const {
  return inverse().descent_set();
}

std::vector<int> WeylElement::reduced_word(const RootSystem& rs) const {
  // Peel the smallest left descent: w = s_i (s_i w) with l(s_i w) = l(w) - 1.
  std::vector<int> word;
  WeylElement cur = *this;
  while (!cur.is_identity()) {
    const int pick = cur.left_descent_set().indices().front();
    word.push_back(pick);
    cur = simple_reflection(rs, pick) * cur;
  }
  return word;
}

WeylElement WeylElement::operator*(const WeylElement& other) const {
  std::vector<std::uint8_t> p(perm_.size());
  for (std::size_t k = 0; k < p.size(); ++k) p[k] = perm_[other.perm_[k]];
  return WeylElement(std::move(p), rank_);
}

WeylElement WeylElement::inverse() const {
  std::vector<std::uint8_t> p(perm_.size());
  for (std::size_t k = 0; k < p.size(); ++k) p[perm_[k]] = static_cast<std::uint8_t>(k);
  return WeylElement(std::move(p), rank_);
}

std::optional<RootSet> WeylElement::map_positive(const RootSet& set) const {
  RootSet out;
  const int N = num_positive();
  for (int k = 0; k < N; ++k) {
    if (!set.test(k)) continue;
    const int img = perm_[k];
    if (img >= N) return std::nullopt;
    out.set(img);
  }
  return out;
}

std::strong_ordering operator<=>(const WeylElement& a, const WeylElement& b) {
  if (auto c = a.length_ <=> b.length_; c != 0) return c;
  const int c = compare_sets(a.inversions_, b.inversions_, a.num_positive());
  if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::pair<std::vector<Root>, std::vector<Root>> inversion_set(const RootSystem& rs,
                                                              const WeylElement& w) {
  return {rs.to_roots(w.inversions()), rs.to_roots(w.positive_part())};
}

Root weyl_act(const RootSystem& rs, const WeylElement& w, const Root& beta) {
  return w.act(rs, beta);
}

IndexSet descent_set(const WeylElement& w) { return w.descent_set(); }

WeylElement longest_element(const RootSystem& rs, IndexSet J) {
  if (!J.subset_of(IndexSet::full(rs.rank()))) throw InputError("J is not a subset of I");
  // Climb by right multiplication while some s_j (j in J) still lengthens w.
  WeylElement w = WeylElement::identity(rs);
  const auto js = J.indices();
  bool grew = true;
  while (grew) {
    grew = false;
    for (int j : js) {
      if (!rs.is_positive_index(w.simple_image(j))) continue;
      w = w * WeylElement::simple_reflection(rs, j);
      grew = true;
    }
  }
  return w;
}

WeylElement min_coset_rep(const WeylElement& w, const RootSystem& rs, IndexSet J) {
  WeylElement cur = w;
  const auto js = J.indices();
  bool shrank = true;
  while (shrank) {
    shrank = false;
    for (int j : js) {
      if (rs.is_positive_index(cur.simple_image(j))) continue;
      cur = cur * WeylElement::simple_reflection(rs, j);
      shrank = true;
    }
  }
  return cur;
}

std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, Guard guard) {
  if (!guard.override_limits && weyl_group_order(rs.cartan_type()) > 10'000'000) {
    throw ResourceError("|W| exceeds 10^7 for " + rs.cartan_type().name());
  }
  std::vector<WeylElement> gens;
  for (int i = 1; i <= rs.rank(); ++i) gens.push_back(WeylElement::simple_reflection(rs, i));

  std::vector<WeylElement> out{WeylElement::identity(rs)};
  std::unordered_map<RootSet, char, std::hash<RootSet>> seen{{out.front().inversions(), 0}};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& s : gens) {
      WeylElement next = out[head] * s;
      if (seen.emplace(next.inversions(), 0).second) out.push_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t WeylGroup::SetHash::operator()(const RootSet& s) const {
  return std::hash<RootSet>{}(s);
}

WeylGroup::WeylGroup(RootSystem rs, Guard guard)
    : rs_(std::move(rs)), elements_(enumerate_weyl(rs_, guard)) {
  by_inversions_.reserve(elements_.size());
  for (std::size_t k = 0; k < elements_.size(); ++k) by_inversions_.emplace(elements_[k].inversions(), k);
}

WeylGroup::WeylGroup(const CartanType& type, Guard guard)
    : WeylGroup(build_root_system(type, guard), guard) {}

std::size_t WeylGroup::index_of(const WeylElement& w) const {
  auto it = by_inversions_.find(w.inversions());
  if (it == by_inversions_.end() || !(elements_[it->second] == w)) {
    throw InputError("element does not belong to this Weyl group");
  }
  return it->second;
}

std::optional<std::size_t> WeylGroup::find_by_inversions(const RootSet& inversions) const {
  if (auto it = by_inversions_.find(inversions); it != by_inversions_.end()) return it->second;
  return std::nullopt;
}

std::vector<WeylElement> parabolic_subgroup(const WeylGroup& W, IndexSet J) {
  // w lies in W_J iff its inversion set is supported on J.
  const RootSet inside = W.root_system().parabolic_positive(J);
  std::vector<WeylElement> out;
  for (const auto& w : W.elements()) {
    if ((w.inversions() & ~inside).none()) out.push_back(w);
  }
  return out;
}

std::vector<WeylElement> min_coset_reps(const WeylGroup& W, IndexSet J) {
  if (!J.subset_of(W.simple_indices())) throw InputError("J is not a subset of I");
  const auto& rs = W.root_system();
  const auto js = J.indices();
  std::vector<WeylElement> out;
  for (const auto& w : W.elements()) {
    if (std::all_of(js.begin(), js.end(), [&](int j) { return rs.is_positive_index(w.simple_image(j)); })) {
      out.push_back(w);
    }
  }
  return out;
}

std::vector<BiclosedSet> enumerate_biclosed(const WeylGroup& W, Guard guard) {
  const auto& rs = W.root_system();
  const int N = rs.num_positive();
  if (!guard.override_limits && N > kMaxBiclosedPositive) {
    throw ResourceError("biclosed enumeration needs 2^" + std::to_string(N) +
                        " subsets; guard is |Phi+| <= 24");
  }
  if (N > 40) throw ResourceError("biclosed enumeration is limited to |Phi+| <= 40");

  // Closure test on 64-bit masks using the table of positive sums.
  std::vector<std::uint64_t> pair_masks;  // {a, b} with a + b a root
  std::vector<int> sums;                  // index of a + b
  for (int a = 0; a < N; ++a) {
    for (int b = a + 1; b < N; ++b) {
      if (auto s = rs.positive_sum(a, b)) {
        pair_masks.push_back((std::uint64_t{1} << a) | (std::uint64_t{1} << b));
        sums.push_back(*s);
      }
    }
  }
  auto closed = [&](std::uint64_t x) {
    for (std::size_t p = 0; p < pair_masks.size(); ++p) {
      if ((x & pair_masks[p]) == pair_masks[p] && !((x >> sums[p]) & 1u)) return false;
    }
    return true;
  };

  const std::uint64_t full = N == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << N) - 1;
  std::vector<BiclosedSet> out;
  for (std::uint64_t x = 0;; ++x) {
    if (closed(x) && closed(full & ~x)) {
      RootSet set;
      for (int k = 0; k < N; ++k) {
        if ((x >> k) & 1u) set.set(k);
      }
      BiclosedSet entry{set, std::nullopt};
      const RootSet inv = rs.all_positive() & ~set;
      if (auto idx = W.find_by_inversions(inv)) entry.witness = W.elements()[*idx];
      out.push_back(std::move(entry));
    }
    if (x == full) break;
  }
  return out;
}

}  // namespace catx
