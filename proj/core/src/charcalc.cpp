#include "catx/charcalc.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace catx {

std::strong_ordering operator<=>(const TwistedCharacter& a, const TwistedCharacter& b) {
  if (auto c = a.base <=> b.base; c != 0) return c;
  return a.coset_rep <=> b.coset_rep;
}

std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
  if (auto c = a.tchar <=> b.tchar; c != 0) return c;
  return a.v <=> b.v;
}

namespace {

void require_in_itheta(const WeylGroup& W, const FormalCharacter& theta, IndexSet J) {
  if (!theta.itheta.subset_of(W.simple_indices())) {
    throw InputError("I(theta) = " + theta.itheta.to_string() + " is not a subset of I");
  }
  if (!J.subset_of(theta.itheta)) {
    throw InputError("J = " + J.to_string() + " is not a subset of I(theta) = " +
                     theta.itheta.to_string());
  }
}

// {theta^w, left * w^{-1}} over the index set.
ModuleCharacter weights_over(const WeylGroup& W, const FormalCharacter& theta, const WeylElement& left,
                             const std::vector<WeylElement>& index_set) {
  const TwistedCharacter base = untwisted(W, theta);
  ModuleCharacter out;
  for (const auto& w : index_set) {
    out.add(Weight{canonical_twist(W, base, w), left * w.inverse()});
  }
  return out;
}

}  // namespace

TwistedCharacter untwisted(const WeylGroup& W, const FormalCharacter& theta) {
  return TwistedCharacter{theta, W.identity()};
}

TwistedCharacter canonical_twist(const WeylGroup& W, const TwistedCharacter& tc, const WeylElement& v) {
  return TwistedCharacter{tc.base, min_coset_rep(v * tc.coset_rep, W.root_system(), tc.base.itheta)};
}

void ModuleCharacter::add(const Weight& w, int mult) {
  if (mult <= 0) throw InputError("nonpositive multiplicity");
  const auto& base = w.tchar.base;
  auto [it, inserted] = labels_.emplace(base.label, base.itheta);
  if (!inserted && it->second != base.itheta) {
    throw InputError("label '" + base.label + "' used with two different I(theta)");
  }
  entries_[w] += mult;
}

int ModuleCharacter::multiplicity(const Weight& w) const {
  auto it = entries_.find(w);
  return it == entries_.end() ? 0 : it->second;
}

bool ModuleCharacter::contains(const ModuleCharacter& other) const {
  return std::all_of(other.entries_.begin(), other.entries_.end(),
                     [&](const auto& e) { return multiplicity(e.first) >= e.second; });
}

bool ModuleCharacter::subtract(const ModuleCharacter& other) {
  if (!contains(other)) return false;
  for (const auto& [w, m] : other.entries_) {
    auto it = entries_.find(w);
    it->second -= m;
    if (it->second == 0) entries_.erase(it);
  }
  return true;
}

ModuleCharacter& ModuleCharacter::operator+=(const ModuleCharacter& other) {
  for (const auto& [w, m] : other.entries_) add(w, m);
  return *this;
}

long ModuleCharacter::total() const {
  long t = 0;
  for (const auto& e : entries_) t += e.second;
  return t;
}

std::vector<WeylElement> z_set(const WeylGroup& W, const FormalCharacter& theta, IndexSet J) {
  require_in_itheta(W, theta, J);
  const WeylElement wJ = longest_element(W.root_system(), J);
  const IndexSet allowed = J | (W.simple_indices() - theta.itheta);
  std::vector<WeylElement> out;
  for (const auto& w : min_coset_reps(W, J)) {
    if ((w * wJ).descent_set().subset_of(allowed)) out.push_back(w);
  }
  return out;
}

ModuleCharacter ch_M(const WeylGroup& W, const FormalCharacter& theta, IndexSet J) {
  require_in_itheta(W, theta, J);
  return weights_over(W, theta, longest_element(W.root_system(), J), min_coset_reps(W, J));
}

ModuleCharacter ch_E(const WeylGroup& W, const FormalCharacter& theta, IndexSet J) {
  const auto reps = z_set(W, theta, J);
  return weights_over(W, theta, longest_element(W.root_system(), J), reps);
}

ModuleCharacter ch_nabla(const WeylGroup& W, const FormalCharacter& theta, IndexSet J,
                         JPrimeConvention convention, NablaWeight shape) {
  require_in_itheta(W, theta, J);
  const IndexSet outer = convention == JPrimeConvention::kIthetaMinusJ ? theta.itheta : W.simple_indices();
  const WeylElement left = shape == NablaWeight::kWInverse ? W.identity() : longest_element(W.root_system(), J);
  return weights_over(W, theta, left, min_coset_reps(W, outer - J));
}

const std::vector<WeylElement>& WeightOrder::stabilizer(IndexSet itheta) {
  auto it = stabilizers_.find(itheta.mask());
  if (it == stabilizers_.end()) it = stabilizers_.emplace(itheta.mask(), parabolic_subgroup(*W_, itheta)).first;
  return it->second;
}

bool WeightOrder::less(const Weight& a, const Weight& b) {
  if (a.tchar.base != b.tchar.base) return false;
  const RootSet target = b.v.positive_part();
  const RootSet source = a.v.positive_part();
  if (source.count() >= target.count()) return false;
  // a.tchar = (b.tchar)^x  <=>  x b.rep W_I = a.rep W_I  <=>  x in a.rep W_I b.rep^{-1}.
  const WeylElement right = b.tchar.coset_rep.inverse();
  for (const auto& u : stabilizer(a.tchar.base.itheta)) {
    const WeylElement x = a.tchar.coset_rep * u * right;
    const auto image = x.inverse().map_positive(source);
    if (image && (*image & ~target).none()) return true;
  }
  return false;
}

bool weight_lt(const WeylGroup& W, const Weight& a, const Weight& b) {
  WeightOrder order(W);
  return order.less(a, b);
}

std::vector<Weight> sweep_weights(const WeylGroup& W, const FormalCharacter& theta,
                                  JPrimeConvention convention, NablaWeight shape) {
  std::set<Weight> seen;
  for (IndexSet J : theta.itheta.subsets()) {
    for (const auto& c : {ch_M(W, theta, J), ch_E(W, theta, J), ch_nabla(W, theta, J, convention, shape)}) {
      for (const auto& e : c.entries()) seen.insert(e.first);
    }
  }
  return {seen.begin(), seen.end()};
}

OrderAxiomStats check_order_axioms(const WeylGroup& W, const std::vector<Weight>& weights,
                                   std::size_t samples, std::uint64_t seed) {
  WeightOrder order(W);
  const std::size_t n = weights.size();
  OrderAxiomStats out;
  out.weights = n;
  out.exhaustive = samples == 0;

  // below[b] holds every a with a < b.
  std::vector<std::vector<std::size_t>> below(n), above(n);
  std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!order.less(weights[a], weights[b])) continue;
      lt[a][b] = true;
      below[b].push_back(a);
      above[a].push_back(b);
      ++out.related_pairs;
      if (a == b) {
        ++out.reflexive;
        if (out.counterexample.empty()) out.counterexample = {weights[a]};
      }
    }
  }

  auto check = [&](std::size_t a, std::size_t b, std::size_t c) {
    ++out.triples;
    if (lt[a][c]) return;
    ++out.intransitive;
    if (out.counterexample.empty()) out.counterexample = {weights[a], weights[b], weights[c]};
  };

  if (samples == 0) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t a : below[b]) {
        for (std::size_t c : above[b]) check(a, b, c);
      }
    }
    return out;
  }

  std::vector<std::size_t> middles;
  for (std::size_t b = 0; b < n; ++b) {
    if (!below[b].empty() && !above[b].empty()) middles.push_back(b);
  }
  if (middles.empty()) return out;
  std::mt19937_64 rng(seed);
  auto pick = [&](const std::vector<std::size_t>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  };
  for (std::size_t k = 0; k < samples; ++k) {
    const std::size_t b = pick(middles);
    check(pick(below[b]), b, pick(above[b]));
  }
  return out;
}

bool omega0_lt(const SimpleLabel& a, const SimpleLabel& b) {
  return a.theta == b.theta && b.J.proper_subset_of(a.J);
}

namespace {

bool default_before(const SimpleLabel& a, const SimpleLabel& b) {
  if (a.J.size() != b.J.size()) return a.J.size() > b.J.size();
  if (a.J != b.J) return a.J < b.J;
  return a.theta < b.theta;
}

}  // namespace

Decomposition decompose_character(const WeylGroup& W, const ModuleCharacter& c,
                                  const DecomposeOptions& options) {
  const auto& rs = W.root_system();
  WeightOrder order(W);
  std::mt19937_64 rng(options.seed);

  // w_J -> J for every J in I, to recognise candidate highest weights.
  std::map<WeylElement, IndexSet> longest;
  for (IndexSet J : W.simple_indices().subsets()) longest.emplace(longest_element(rs, J), J);

  Decomposition out;
  ModuleCharacter cur = c;
  while (!cur.empty()) {
    std::vector<SimpleLabel> maxima;
    for (const auto& [wt, mult] : cur.entries()) {
      (void)mult;
      if (!wt.tchar.coset_rep.is_identity()) continue;
      auto it = longest.find(wt.v);
      if (it == longest.end() || !it->second.subset_of(wt.tchar.base.itheta)) continue;
      const bool dominated = std::any_of(cur.entries().begin(), cur.entries().end(),
                                         [&](const auto& other) { return order.less(wt, other.first); });
      if (!dominated) maxima.push_back(SimpleLabel{wt.tchar.base, it->second});
    }
    if (maxima.empty()) break;

    std::sort(maxima.begin(), maxima.end(), default_before);
    SimpleLabel pick = maxima.front();
    if (options.tie_break == TieBreak::kReversed) {
      pick = maxima.back();
    } else if (options.tie_break == TieBreak::kSeeded) {
      pick = maxima[std::uniform_int_distribution<std::size_t>(0, maxima.size() - 1)(rng)];
    }

    const ModuleCharacter simple = ch_E(W, pick.theta, pick.J);
    if (!cur.subtract(simple)) {
      out.negative_multiplicity = true;
      for (const auto& [wt, m] : simple.entries()) {
        if (cur.multiplicity(wt) < m) {
          out.missing_weight = wt;
          break;
        }
      }
      break;
    }
    ++out.factors[pick];
  }
  out.remainder = std::move(cur);
  return out;
}

namespace {

std::string describe_factors(const std::map<SimpleLabel, int>& f) {
  std::string s = "{";
  bool first = true;
  for (const auto& [k, m] : f) {
    if (!first) s += ", ";
    s += k.theta.label + k.J.to_string() + ":" + std::to_string(m);
    first = false;
  }
  return s + "}";
}

long total_of(const std::map<SimpleLabel, int>& f) {
  long t = 0;
  for (const auto& e : f) t += e.second;
  return t;
}

std::vector<Weight> symmetric_difference(const ModuleCharacter& a, const ModuleCharacter& b) {
  std::vector<Weight> out;
  for (const auto& [w, m] : a.entries()) {
    if (b.multiplicity(w) != m) out.push_back(w);
  }
  for (const auto& [w, m] : b.entries()) {
    if (a.multiplicity(w) != m) out.push_back(w);
  }
  return out;
}

}  // namespace

std::vector<FiltrationCheck> verify_filtration(const WeylGroup& W, const FormalCharacter& theta,
                                               JPrimeConvention convention, NablaWeight shape) {
  std::vector<FiltrationCheck> out;
  const IndexSet I = theta.itheta;
  for (IndexSet J : I.subsets()) {
    const ModuleCharacter nabla = ch_nabla(W, theta, J, convention, shape);

    ModuleCharacter sum;
    long z_count = 0;
    std::map<SimpleLabel, int> expected_nabla;
    for (IndexSet K : J.subsets()) {
      sum += ch_E(W, theta, K);
      z_count += static_cast<long>(z_set(W, theta, K).size());
      expected_nabla[SimpleLabel{theta, K}] = 1;
    }

    FiltrationCheck sum_check{"nabla_sum", J, nabla == sum, "", {}};
    if (!sum_check.pass) {
      sum_check.detail = "|ch nabla| = " + std::to_string(nabla.total()) +
                         ", |sum of ch E| = " + std::to_string(sum.total());
      sum_check.witnesses = symmetric_difference(nabla, sum);
    }
    out.push_back(std::move(sum_check));

    const IndexSet outer = convention == JPrimeConvention::kIthetaMinusJ ? I : W.simple_indices();
    const long x_count = static_cast<long>(min_coset_reps(W, outer - J).size());
    FiltrationCheck count_check{"counting", J, x_count == z_count, "", {}};
    if (!count_check.pass) {
      count_check.detail = "|X_J'| = " + std::to_string(x_count) + ", sum |Z_K| = " + std::to_string(z_count);
    }
    out.push_back(std::move(count_check));

    const Decomposition dn = decompose_character(W, nabla);
    FiltrationCheck nf{"nabla_factors", J, dn.complete() && dn.factors == expected_nabla, "", {}, total_of(dn.factors)};
    if (!nf.pass) {
      nf.detail = "factors " + describe_factors(dn.factors) + ", expected " + describe_factors(expected_nabla);
      for (const auto& e : dn.remainder.entries()) nf.witnesses.push_back(e.first);
    }
    out.push_back(std::move(nf));

    std::map<SimpleLabel, int> expected_m;
    for (IndexSet K : I.subsets()) {
      if (J.subset_of(K)) expected_m[SimpleLabel{theta, K}] = 1;
    }
    const Decomposition dm = decompose_character(W, ch_M(W, theta, J));
    FiltrationCheck pf{"projective_factors", J, dm.complete() && dm.factors == expected_m, "", {}, total_of(dm.factors)};
    if (!pf.pass) {
      pf.detail = "factors " + describe_factors(dm.factors) + ", expected " + describe_factors(expected_m);
      for (const auto& e : dm.remainder.entries()) pf.witnesses.push_back(e.first);
    }
    out.push_back(std::move(pf));

    const Decomposition de = decompose_character(W, ch_E(W, theta, J));
    const std::map<SimpleLabel, int> self{{SimpleLabel{theta, J}, 1}};
    FiltrationCheck rt{"simple_roundtrip", J, de.complete() && de.factors == self, "", {}};
    if (!rt.pass) rt.detail = "factors " + describe_factors(de.factors);
    out.push_back(std::move(rt));
  }
  return out;
}

SuccessiveDiagnostic successive_property(const WeylGroup& W, const ModuleCharacter& c,
                                         const FormalCharacter& theta, IndexSet J,
                                         SuccessiveReading reading) {
  const auto& rs = W.root_system();
  const WeylElement wJ = longest_element(rs, J);
  const TwistedCharacter base = untwisted(W, theta);
  auto weight_of = [&](const WeylElement& u) {
    return Weight{canonical_twist(W, base, u), wJ * u.inverse()};
  };
  std::vector<WeylElement> gens;
  for (int i = 1; i <= rs.rank(); ++i) gens.push_back(WeylElement::simple_reflection(rs, i));

  SuccessiveDiagnostic out;
  for (const auto& v : W.elements()) {
    if (c.multiplicity(weight_of(v)) == 0) continue;
    for (const auto& s : gens) {
      const WeylElement sv = reading == SuccessiveReading::kLeft ? s * v : v * s;
      if (sv.length() != v.length() + 1) continue;
      for (const auto& r : gens) {
        const WeylElement w = reading == SuccessiveReading::kLeft ? r * sv : sv * r;
        if (w.length() != sv.length() + 1 || c.multiplicity(weight_of(w)) == 0) continue;
        ++out.hypotheses;
        if (c.multiplicity(weight_of(sv)) > 0) ++out.satisfied;
      }
    }
  }
  return out;
}

}  // namespace catx
