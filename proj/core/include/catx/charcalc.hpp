#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "catx/weyl.hpp"

namespace catx {

/// An abstract torus character theta, known only through a label and I(theta).
///
/// The stabilizer of theta in W is modelled as W_{I(theta)}; every index set
/// and every twist below depends on theta only through I(theta).
struct FormalCharacter {
  std::string label;
  IndexSet itheta;

  friend bool operator==(const FormalCharacter&, const FormalCharacter&) = default;
  friend auto operator<=>(const FormalCharacter& a, const FormalCharacter& b) {
    if (auto c = a.label <=> b.label; c != 0) return c;
    return a.itheta.mask() <=> b.itheta.mask();
  }
};

/// theta^w, normalized to the minimal-length representative of w W_{I(theta)}.
struct TwistedCharacter {
  FormalCharacter base;
  WeylElement coset_rep;

  friend bool operator==(const TwistedCharacter&, const TwistedCharacter&) = default;
  friend std::strong_ordering operator<=>(const TwistedCharacter& a, const TwistedCharacter& b);
};

/// theta^e.
TwistedCharacter untwisted(const WeylGroup& W, const FormalCharacter& theta);

/// (theta^w)^v = theta^{vw}, re-canonicalized.
TwistedCharacter canonical_twist(const WeylGroup& W, const TwistedCharacter& tc, const WeylElement& v);

/// The weight {lambda, Phi^+_v}; the closed set is carried by its Weyl witness v.
struct Weight {
  TwistedCharacter tchar;
  WeylElement v;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b);
};

/// Finite multiset of weights with positive multiplicities.
class ModuleCharacter {
 public:
  using Map = std::map<Weight, int>;

  /// Adds `mult` copies; mult must be positive. Rejects a label reused with a
  /// different I(theta).
  void add(const Weight& w, int mult = 1);
  int multiplicity(const Weight& w) const;

  /// True iff every multiplicity of `other` is <= the one here.
  bool contains(const ModuleCharacter& other) const;
  /// Removes `other`; returns false (and leaves *this untouched) if some
  /// multiplicity would go negative.
  bool subtract(const ModuleCharacter& other);

  ModuleCharacter& operator+=(const ModuleCharacter& other);
  friend ModuleCharacter operator+(ModuleCharacter a, const ModuleCharacter& b) { return a += b; }

  const Map& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  /// Number of distinct weights.
  std::size_t distinct() const { return entries_.size(); }
  /// Sum of multiplicities.
  long total() const;

  friend bool operator==(const ModuleCharacter& a, const ModuleCharacter& b) {
    return a.entries_ == b.entries_;
  }

 private:
  Map entries_;
  std::map<std::string, IndexSet> labels_;
};

/// Which complement indexes the parabolic data of nabla(theta)_J.
enum class JPrimeConvention {
  kIthetaMinusJ,  // J' = I(theta) \ J
  kIMinusJ,       // J' = I \ J
};

/// The v-component attached to w in X_{J'} for the weights of nabla(theta)_J.
enum class NablaWeight {
  kWInverse,    // {theta^w, Phi^+_{w^{-1}}}: the generator of the induced module is U-fixed
  kWJWInverse,  // {theta^w, Phi^+_{w_J w^{-1}}}, the same shape as for M and E
};

/// Z_J(theta) = {w in X_J : R(w w_J) subset of J u (I \ I(theta))}.
std::vector<WeylElement> z_set(const WeylGroup& W, const FormalCharacter& theta, IndexSet J);

/// sum over w in X_J of {theta^w, w_J w^{-1}}.
ModuleCharacter ch_M(const WeylGroup& W, const FormalCharacter& theta, IndexSet J);
/// sum over w in Z_J(theta) of {theta^w, w_J w^{-1}}.
ModuleCharacter ch_E(const WeylGroup& W, const FormalCharacter& theta, IndexSet J);
/// sum over w in X_{J'} of {theta^w, w^{-1}} (or of {theta^w, w_J w^{-1}}).
ModuleCharacter ch_nabla(const WeylGroup& W, const FormalCharacter& theta, IndexSet J,
                         JPrimeConvention convention = JPrimeConvention::kIthetaMinusJ,
                         NablaWeight shape = NablaWeight::kWInverse);

/// Order on weights: a < b iff a.tchar = b.tchar^x and
/// x^{-1}(Phi^+_{a.v}) is a proper subset of Phi^+_{b.v} for some x.
///
/// Caches the parabolic subgroups W_{I(theta)} it needs; not thread-safe.
class WeightOrder {
 public:
  explicit WeightOrder(const WeylGroup& W) : W_(&W) {}
  bool less(const Weight& a, const Weight& b);

 private:
  const std::vector<WeylElement>& stabilizer(IndexSet itheta);

  const WeylGroup* W_;
  std::map<std::uint32_t, std::vector<WeylElement>> stabilizers_;
};

bool weight_lt(const WeylGroup& W, const Weight& a, const Weight& b);

/// Union of the weights of ch M, ch E and ch nabla over all J in I(theta),
/// sorted and without repeats.
std::vector<Weight> sweep_weights(const WeylGroup& W, const FormalCharacter& theta,
                                  JPrimeConvention convention = JPrimeConvention::kIthetaMinusJ,
                                  NablaWeight shape = NablaWeight::kWInverse);

struct OrderAxiomStats {
  std::size_t weights = 0;
  std::size_t related_pairs = 0;
  std::size_t reflexive = 0;  // weights with w < w
  bool exhaustive = true;
  std::size_t triples = 0;    // chains a < b < c examined
  std::size_t intransitive = 0;
  std::vector<Weight> counterexample;

  bool pass() const { return reflexive == 0 && intransitive == 0; }
};

/// Irreflexivity on every weight; transitivity on every chain a < b < c when
/// samples == 0, otherwise on `samples` seeded random chains.
OrderAxiomStats check_order_axioms(const WeylGroup& W, const std::vector<Weight>& weights,
                                   std::size_t samples = 0, std::uint64_t seed = 0);

/// An element (theta, w_J) of Omega_0, i.e. the label of the simple E(theta)_J.
struct SimpleLabel {
  FormalCharacter theta;
  IndexSet J;

  friend bool operator==(const SimpleLabel&, const SimpleLabel&) = default;
  friend auto operator<=>(const SimpleLabel& a, const SimpleLabel& b) {
    if (auto c = a.theta <=> b.theta; c != 0) return c;
    if (a.J == b.J) return std::strong_ordering::equal;
    return a.J < b.J ? std::strong_ordering::less : std::strong_ordering::greater;
  }
};

/// Same character and J_a a proper superset of J_b.
bool omega0_lt(const SimpleLabel& a, const SimpleLabel& b);

enum class TieBreak {
  kDefault,   // |J| descending, then lex on J, then label
  kReversed,  // the exact reverse of kDefault
  kSeeded,    // uniform choice among the maxima, from DecomposeOptions::seed
};

struct DecomposeOptions {
  TieBreak tie_break = TieBreak::kDefault;
  std::uint64_t seed = 0;
};

struct Decomposition {
  std::map<SimpleLabel, int> factors;
  ModuleCharacter remainder;
  /// Set when a selected simple character did not fit inside what was left.
  bool negative_multiplicity = false;
  /// A weight of the offending simple character that was missing.
  std::optional<Weight> missing_weight;

  bool complete() const { return remainder.empty() && !negative_multiplicity; }
};

/// Greedy triangular elimination by simple characters ch E(theta)_J.
Decomposition decompose_character(const WeylGroup& W, const ModuleCharacter& c,
                                  const DecomposeOptions& options = {});

/// One line of a filtration report.
struct FiltrationCheck {
  std::string check;  // nabla_sum, counting, nabla_factors, projective_factors, simple_roundtrip
  IndexSet J;
  bool pass = true;
  std::string detail;
  std::vector<Weight> witnesses;
  /// Sum of the factor multiplicities found (the *_factors checks only).
  long length = 0;
};

/// Character-level checks of the nabla filtration and projective covers for
/// every J in I(theta).
std::vector<FiltrationCheck> verify_filtration(
    const WeylGroup& W, const FormalCharacter& theta,
    JPrimeConvention convention = JPrimeConvention::kIthetaMinusJ,
    NablaWeight shape = NablaWeight::kWInverse);

/// Closure of a highest weight module's weights under one
/// simple step. Two readings of the multiplication side are offered.
enum class SuccessiveReading {
  kLeft,   // v < sv < w = rsv  =>  {theta^{sv}, w_J (sv)^{-1}}
  kRight,  // v < vs < w = vsr  =>  {theta^{vs}, w_J (vs)^{-1}}
};

struct SuccessiveDiagnostic {
  int hypotheses = 0;
  int satisfied = 0;
};

SuccessiveDiagnostic successive_property(const WeylGroup& W, const ModuleCharacter& c,
                                         const FormalCharacter& theta, IndexSet J,
                                         SuccessiveReading reading);

}  // namespace catx
