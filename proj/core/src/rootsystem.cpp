#include "catx/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

namespace catx {

namespace {

bool valid_rank(Family f, int n) {
  switch (f) {
    case Family::A: return n >= 1;
    case Family::B:
    case Family::C: return n >= 2;
    case Family::D: return n >= 4;
    case Family::E: return n >= 6 && n <= 8;
    case Family::F: return n == 4;
    case Family::G: return n == 2;
  }
  return false;
}

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int k = 2; k <= n; ++k) r *= static_cast<std::uint64_t>(k);
  return r;
}

constexpr std::uint64_t kMaxGroupOrder = 10'000'000;
constexpr int kMaxRank = 8;

}  // namespace

CartanType::CartanType(Family family, int rank) : family_(family), rank_(rank) {
  if (!valid_rank(family, rank)) {
    throw InputError("invalid Cartan type " + std::string(1, static_cast<char>(family)) +
                     std::to_string(rank));
  }
}

CartanType CartanType::parse(std::string_view text) {
  if (text.size() < 2) throw InputError("invalid Cartan type string '" + std::string(text) + "'");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (std::string_view("ABCDEFG").find(f) == std::string_view::npos) {
    throw InputError("unknown Cartan family in '" + std::string(text) + "'");
  }
  int rank = 0;
  for (char c : text.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c)) || rank > 100) {
      throw InputError("invalid Cartan type string '" + std::string(text) + "'");
    }
    rank = rank * 10 + (c - '0');
  }
  return CartanType(static_cast<Family>(f), rank);
}

std::string CartanType::name() const {
  return std::string(1, static_cast<char>(family_)) + std::to_string(rank_);
}

std::uint64_t weyl_group_order(const CartanType& t) {
  const int n = t.rank();
  switch (t.family()) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return (std::uint64_t{1} << n) * factorial(n);
    case Family::D: return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case Family::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

Root::Root(Coords coords) : coords_(std::move(coords)) {
  bool pos = false, neg = false;
  for (int c : coords_) {
    pos |= c > 0;
    neg |= c < 0;
  }
  if (!pos && !neg) throw InputError("the zero vector is not a root");
  if (pos && neg) throw InputError("root coordinates must not mix signs");
}

int Root::height() const {
  int h = 0;
  for (int c : coords_) h += c;
  return h;
}

bool Root::is_positive() const {
  return std::any_of(coords_.begin(), coords_.end(), [](int c) { return c > 0; });
}

Root Root::operator-() const {
  Coords c = coords_;
  for (int& x : c) x = -x;
  return Root(std::move(c));
}

std::vector<std::vector<int>> cartan_matrix(const CartanType& t) {
  const int n = t.rank();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) {  // 1-based simple edge
    a[i - 1][j - 1] = -1;
    a[j - 1][i - 1] = -1;
  };
  switch (t.family()) {
    case Family::A:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case Family::C:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case Family::E:
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < n; ++i) link(i, i + 1);
      break;
    case Family::F:
      link(1, 2);
      link(2, 3);
      link(3, 4);
      a[2][1] = -2;  // alpha_3, alpha_4 short
      break;
    case Family::G:
      a[0][1] = -3;  // alpha_1 short
      a[1][0] = -1;
      break;
  }
  return a;
}

std::size_t RootSystem::CoordsHash::operator()(const Coords& c) const {
  std::size_t h = 1469598103934665603ull;
  for (int x : c) h = (h ^ static_cast<std::size_t>(x + 64)) * 1099511628211ull;
  return h;
}

namespace {

Coords reflect_coords(const std::vector<std::vector<int>>& cartan, int i0, const Coords& beta) {
  int pairing = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) pairing += beta[j] * cartan[i0][j];
  Coords out = beta;
  out[i0] -= pairing;
  return out;
}

}  // namespace

RootSystem build_root_system(const CartanType& type, Guard guard) {
  if (!guard.override_limits &&
      (type.rank() > kMaxRank || weyl_group_order(type) > kMaxGroupOrder)) {
    throw ResourceError("root system " + type.name() +
                        " exceeds the desk-scale guard (rank <= 8, |W| <= 10^7)");
  }
  RootSystem rs(type);
  const int r = type.rank();
  rs.cartan_ = cartan_matrix(type);

  std::set<Coords> seen;
  std::deque<Coords> queue;
  for (int i = 0; i < r; ++i) {
    Coords e(r, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    Coords beta = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < r; ++i) {
      Coords g = reflect_coords(rs.cartan_, i, beta);
      if (std::all_of(g.begin(), g.end(), [](int c) { return c >= 0; }) && seen.insert(g).second) {
        queue.push_back(std::move(g));
      }
    }
  }
  std::vector<Coords> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end(), [](const Coords& a, const Coords& b) {
    int ha = 0, hb = 0;
    for (int c : a) ha += c;
    for (int c : b) hb += c;
    if (ha != hb) return ha < hb;
    return a > b;
  });

  const int N = static_cast<int>(sorted.size());
  for (auto& c : sorted) rs.positive_.emplace_back(c);
  for (const auto& p : rs.positive_) rs.negative_.push_back(-p);
  for (int k = 0; k < 2 * N; ++k) rs.lookup_.emplace(rs.root(k).coords(), k);

  rs.reflection_.assign(r, std::vector<int>(2 * N));
  for (int i = 0; i < r; ++i) {
    for (int k = 0; k < 2 * N; ++k) {
      rs.reflection_[i][k] = rs.lookup_.at(reflect_coords(rs.cartan_, i, rs.root(k).coords()));
    }
  }

  rs.sum_.assign(static_cast<std::size_t>(N) * N, -1);
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      Coords s = rs.positive_[a].coords();
      for (int j = 0; j < r; ++j) s[j] += rs.positive_[b].coords()[j];
      if (auto it = rs.lookup_.find(s); it != rs.lookup_.end()) rs.sum_[a * N + b] = it->second;
    }
  }
  return rs;
}

std::optional<int> RootSystem::index_of(const Coords& coords) const {
  if (auto it = lookup_.find(coords); it != lookup_.end()) return it->second;
  return std::nullopt;
}

int RootSystem::require_index(const Coords& coords) const {
  if (coords.size() != static_cast<std::size_t>(rank())) {
    throw InputError("root has wrong number of coordinates for " + type_.name());
  }
  if (auto k = index_of(coords)) return *k;
  std::string s;
  for (int c : coords) s += (s.empty() ? "" : ",") + std::to_string(c);
  throw InputError("(" + s + ") is not a root of " + type_.name());
}

RootSet RootSystem::parabolic_positive(IndexSet J) const {
  RootSet out;
  for (int k = 0; k < num_positive(); ++k) {
    const auto& c = positive_[k].coords();
    bool inside = true;
    for (int j = 0; j < rank() && inside; ++j) inside = c[j] == 0 || J.contains(j + 1);
    if (inside) out.set(k);
  }
  return out;
}

RootSet RootSystem::all_positive() const {
  RootSet out;
  for (int k = 0; k < num_positive(); ++k) out.set(k);
  return out;
}

std::vector<Root> RootSystem::to_roots(const RootSet& set) const {
  std::vector<Root> out;
  for (int k = 0; k < num_positive(); ++k) {
    if (set.test(k)) out.push_back(positive_[k]);
  }
  return out;
}

RootSet RootSystem::to_set(const std::vector<Root>& roots) const {
  RootSet out;
  for (const auto& r : roots) {
    const int k = require_index(r.coords());
    if (!is_positive_index(k)) throw InputError("expected a positive root");
    out.set(k);
  }
  return out;
}

Root reflect_root(const RootSystem& rs, int simple, const Root& beta) {
  if (simple < 1 || simple > rs.rank()) throw InputError("simple index out of range");
  return rs.root(rs.reflect_index(simple, rs.require_index(beta.coords())));
}

std::vector<std::pair<int, int>> root_string(const RootSystem& rs, const Root& alpha,
                                             const Root& beta) {
  const int a = rs.require_index(alpha.coords());
  const int b = rs.require_index(beta.coords());
  if (!rs.is_positive_index(a) || !rs.is_positive_index(b)) {
    throw InputError("root_string expects positive roots");
  }
  if (a == b) throw InputError("root_string expects distinct roots");

  // Coefficients of any root are bounded by those of the highest root (<= 6).
  std::vector<std::pair<int, int>> out;
  const int r = rs.rank();
  for (int m = 1; m <= 6; ++m) {
    for (int n = 1; n <= 6; ++n) {
      Coords v(r);
      for (int j = 0; j < r; ++j) v[j] = m * alpha.coords()[j] + n * beta.coords()[j];
      if (auto k = rs.index_of(v); k && rs.is_positive_index(*k)) out.emplace_back(m, n);
    }
  }
  return out;
}

bool is_closed_subset(const RootSystem& rs, const RootSet& subset) {
  const int N = rs.num_positive();
  for (int a = 0; a < N; ++a) {
    if (!subset.test(a)) continue;
    for (int b = a + 1; b < N; ++b) {
      if (!subset.test(b)) continue;
      if (auto s = rs.positive_sum(a, b); s && !subset.test(*s)) return false;
    }
  }
  return true;
}

bool is_closed_subset(const RootSystem& rs, const std::vector<Root>& subset) {
  return is_closed_subset(rs, rs.to_set(subset));
}

}  // namespace catx
