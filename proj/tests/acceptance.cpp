// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

#include "catx/charcalc.hpp"
#include "catx/incidence.hpp"
#include "catx/modules.hpp"

using namespace catx;

namespace {

const char* kBiclosedTypes[] = {"A1", "A2", "A3", "B2", "B3", "C3", "G2"};
const char* kSweepTypes[] = {"A1", "A2", "A3", "B2", "C2", "B3", "C3", "G2"};

struct Outcome {
  bool pass = true;
  std::string note;

  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // <= 0: no limit
  std::function<Outcome()> run;
};

// Calls f(W, theta, J) for every type of the sweep, I(theta) in I, J in I(theta).
void for_sweep(const std::function<void(const WeylGroup&, const FormalCharacter&, IndexSet)>& f) {
  for (const char* name : kSweepTypes) {
    const WeylGroup W(CartanType::parse(name));
    for (IndexSet itheta : W.simple_indices().subsets()) {
      const FormalCharacter theta{"theta", itheta};
      for (IndexSet J : itheta.subsets()) f(W, theta, J);
    }
  }
}

std::string where(const WeylGroup& W, const FormalCharacter& theta, IndexSet J) {
  return W.root_system().cartan_type().name() + " I(theta)=" + theta.itheta.to_string() + " J=" + J.to_string();
}

Outcome biclosed_oracle() {
  Outcome out;
  std::string counts;
  for (const char* name : kBiclosedTypes) {
    const WeylGroup W(CartanType::parse(name));
    std::set<std::string> expected;
    for (const auto& w : W.elements()) expected.insert(w.positive_part().to_string());
    std::set<std::string> found;
    for (const auto& b : enumerate_biclosed(W)) {
      found.insert(b.set.to_string());
      if (!b.witness || b.witness->positive_part() != b.set) out.fail(std::string(name) + ": unwitnessed set");
    }
    if (found != expected || found.size() != W.order()) {
      out.fail(std::string(name) + ": " + std::to_string(found.size()) + " biclosed vs |W| = " +
               std::to_string(W.order()));
    }
    counts += std::string(counts.empty() ? "" : " ") + name + "=" + std::to_string(found.size());
  }
  if (out.pass) out.note = counts;
  return out;
}

Outcome nabla_identity() {
  Outcome out;
  int cases = 0;
  for_sweep([&](const WeylGroup& W, const FormalCharacter& theta, IndexSet J) {
    ++cases;
    ModuleCharacter sum;
    std::size_t z_total = 0;
    for (IndexSet K : J.subsets()) {
      sum += ch_E(W, theta, K);
      z_total += z_set(W, theta, K).size();
    }
    if (!(ch_nabla(W, theta, J) == sum)) out.fail("multiset differs at " + where(W, theta, J));
    const std::size_t x = min_coset_reps(W, theta.itheta - J).size();
    if (x != z_total) {
      out.fail("count " + std::to_string(x) + " vs " + std::to_string(z_total) + " at " + where(W, theta, J));
    }
  });
  if (out.pass) out.note = std::to_string(cases) + " (type, I(theta), J) cases";
  return out;
}

Outcome projective_pattern() {
  Outcome out;
  for_sweep([&](const WeylGroup& W, const FormalCharacter& theta, IndexSet J) {
    std::map<SimpleLabel, int> expected;
    for (IndexSet K : theta.itheta.subsets()) {
      if (J.subset_of(K)) expected[SimpleLabel{theta, K}] = 1;
    }
    const Decomposition d = decompose_character(W, ch_M(W, theta, J));
    if (!d.complete() || d.factors != expected) out.fail("unexpected factors at " + where(W, theta, J));
  });
  return out;
}

Outcome decomposition_round_trip() {
  Outcome out;
  const DecomposeOptions runs[] = {{TieBreak::kDefault, 0}, {TieBreak::kReversed, 0}, {TieBreak::kSeeded, 17}};
  for_sweep([&](const WeylGroup& W, const FormalCharacter& theta, IndexSet J) {
    const Decomposition d = decompose_character(W, ch_E(W, theta, J));
    const std::map<SimpleLabel, int> single{{SimpleLabel{theta, J}, 1}};
    if (!d.complete() || d.factors != single) out.fail("E does not round-trip at " + where(W, theta, J));
    for (const ModuleCharacter& c : {ch_E(W, theta, J), ch_M(W, theta, J), ch_nabla(W, theta, J)}) {
      const Decomposition first = decompose_character(W, c, runs[0]);
      for (const auto& opt : runs) {
        const Decomposition other = decompose_character(W, c, opt);
        if (other.factors != first.factors || !(other.remainder == first.remainder)) {
          out.fail("tie-break dependence at " + where(W, theta, J));
        }
      }
    }
  });
  return out;
}

Outcome order_axioms() {
  Outcome out;
  std::size_t exhaustive_chains = 0, sampled_chains = 0;
  for (const char* name : kSweepTypes) {
    const WeylGroup W(CartanType::parse(name));
    std::set<Weight> all;
    for (IndexSet itheta : W.simple_indices().subsets()) {
      for (const auto& w : sweep_weights(W, FormalCharacter{"theta", itheta})) all.insert(w);
    }
    const bool exhaustive = W.root_system().rank() <= 2;
    const OrderAxiomStats s = check_order_axioms(W, std::vector<Weight>(all.begin(), all.end()),
                                                 exhaustive ? 0 : 10000, 1);
    (exhaustive ? exhaustive_chains : sampled_chains) += s.triples;
    if (!s.pass()) {
      out.fail(std::string(name) + ": " + std::to_string(s.reflexive) + " reflexive, " +
               std::to_string(s.intransitive) + " intransitive");
    }
    if (!exhaustive && s.triples < 10000) out.fail(std::string(name) + ": only " + std::to_string(s.triples) + " chains");
  }
  if (out.pass) {
    out.note = std::to_string(exhaustive_chains) + " chains exhaustive (rank <= 2), " +
               std::to_string(sampled_chains) + " sampled (rank 3)";
  }
  return out;
}

Outcome algebra_structure() {
  Outcome out;
  std::size_t three_n = 1;
  for (int n = 0; n <= 6; ++n, three_n *= 3) {
    const IncidenceAlgebra A = build_incidence_algebra(n);
    if (A.dim() != three_n) out.fail("dim A_" + std::to_string(n) + " = " + std::to_string(A.dim()));
    if (n > 5) continue;
    const CartanExt ce = cartan_and_ext(A);
    if (ce.determinant != 1) out.fail("Cartan determinant of A_" + std::to_string(n));
    if (n > 4) continue;
    const std::size_t covers = n == 0 ? 0 : static_cast<std::size_t>(n) << (n - 1);
    std::size_t arrows = 0;
    for (const auto& [yz, m] : ce.ext1) {
      const bool covering = yz.first.proper_subset_of(yz.second) && yz.second.size() == yz.first.size() + 1;
      if (!covering || m != 1) out.fail("unexpected Ext^1 entry in A_" + std::to_string(n));
      arrows += static_cast<std::size_t>(m);
    }
    if (arrows != covers) out.fail("Ext^1 of A_" + std::to_string(n) + " has " + std::to_string(arrows) + " arrows");
    if (!heredity_chain_check(A).pass()) out.fail("heredity chain of A_" + std::to_string(n));
  }
  return out;
}

std::vector<std::vector<std::size_t>> dim_vectors(const std::vector<Summand>& parts, bool& local) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& s : parts) {
    local = local && s.certified_local;
    for (int k = 0; k < s.multiplicity; ++k) out.push_back(s.module.dim_vector());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Outcome krull_schmidt() {
  Outcome out;
  {
    const IncidenceAlgebra A1 = build_incidence_algebra(1);
    const auto parts = krull_schmidt_decompose(A1, regular_module(A1), 0);
    std::multiset<std::size_t> totals;
    bool local = true;
    for (const auto& s : parts) {
      for (int k = 0; k < s.multiplicity; ++k) totals.insert(s.module.total_dim());
      local = local && s.certified_local;
      bool projective = false;
      for (IndexSet Y : A1.vertices()) projective = projective || isomorphic(s.module, interval_module(1, Y, IndexSet::full(1)));
      if (!projective) out.fail("A_1 regular summand is not projective");
    }
    if (totals != std::multiset<std::size_t>{1, 2} || !local) out.fail("A_1 regular module");
  }

  const IncidenceAlgebra A = build_incidence_algebra(2);
  std::vector<std::pair<IndexSet, IndexSet>> intervals;
  for (IndexSet lo : A.vertices()) {
    for (IndexSet hi : A.vertices()) {
      if (lo.subset_of(hi)) intervals.emplace_back(lo, hi);
    }
  }
  std::mt19937_64 rng(2024);
  const int trials = 50;
  for (int t = 0; t < trials; ++t) {
    std::vector<AlgebraModule> pieces;
    const int count = 1 + static_cast<int>(rng() % 5);
    for (int k = 0; k < count; ++k) {
      const auto& [lo, hi] = intervals[rng() % intervals.size()];
      pieces.push_back(interval_module(2, lo, hi));
    }
    std::vector<std::vector<std::size_t>> expected;
    for (const auto& p : pieces) expected.push_back(p.dim_vector());
    std::sort(expected.begin(), expected.end());
    const AlgebraModule M = direct_sum(pieces);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      bool local = true;
      if (dim_vectors(krull_schmidt_decompose(A, M, seed), local) != expected || !local) {
        out.fail("trial " + std::to_string(t) + " seed " + std::to_string(seed));
      }
    }
  }
  if (out.pass) out.note = std::to_string(trials) + " random sums over A_2, seeds 1..3";
  return out;
}

Outcome bridge() {
  Outcome out;
  std::map<int, std::map<std::uint32_t, std::size_t>> injective;
  for (int k = 0; k <= 3; ++k) {
    for (const auto& v : projective_injective_dims(build_incidence_algebra(k))) injective[k][v.vertex.mask()] = v.injective_dim;
  }
  for_sweep([&](const WeylGroup& W, const FormalCharacter& theta, IndexSet J) {
    const Decomposition d = decompose_character(W, ch_nabla(W, theta, J));
    long length = 0;
    for (const auto& [label, m] : d.factors) length += m;
    // J as a vertex of A_k: the p-th index of I(theta) becomes p.
    IndexSet Y;
    const auto idx = theta.itheta.indices();
    for (std::size_t p = 0; p < idx.size(); ++p) {
      if (J.contains(idx[p])) Y.insert(static_cast<int>(p) + 1);
    }
    const long expected = 1L << J.size();
    const long dim_i = static_cast<long>(injective.at(theta.itheta.size()).at(Y.mask()));
    if (!d.complete() || length != expected || dim_i != expected) {
      out.fail("length " + std::to_string(length) + ", dim I(Y) " + std::to_string(dim_i) + " at " +
               where(W, theta, J));
    }
  });
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "biclosed subsets are the sets Phi+_w", 10, biclosed_oracle},
      {2, "nabla filtration identity and counting identity", 60, nabla_identity},
      {3, "ch M decomposes as {K : J <= K <= I(theta)}", 0, projective_pattern},
      {4, "ch E round trip, tie-break independence", 0, decomposition_round_trip},
      {5, "order axioms on the sweep weights", 0, order_axioms},
      {6, "structure of A_n", 30, algebra_structure},
      {7, "Krull-Schmidt decompositions", 0, krull_schmidt},
      {8, "nabla composition length = dim I(Y)", 0, bridge},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    }
    all = all && o.pass;
    std::printf("%s %d %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.note.empty() ? "" : ": ",
                o.note.c_str());
  }
  std::fflush(stdout);
  return all ? 0 : 1;
}
