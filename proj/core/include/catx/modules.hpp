#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "catx/incidence.hpp"

namespace catx {

/// A finite-dimensional right module over the Boolean incidence algebra.
///
/// The component at vertex Y is M e_Y (row vectors of length dim(Y)); the
/// basis element e_{Y,Z} acts by the dim(Y) x dim(Z) matrix action(Y, Z).
/// Only some maps need to be supplied: a missing covering map (|Z| = |Y|+1)
/// is zero and a missing longer map is the composite along a chain.
class AlgebraModule {
 public:
  using MapKey = std::pair<std::uint32_t, std::uint32_t>;

  /// Throws InputError when the supplied maps do not define a module.
  AlgebraModule(int n, std::vector<std::size_t> dims, std::map<MapKey, Matrix> maps);

  static AlgebraModule zero(int n);

  int n() const { return n_; }
  std::size_t dim(IndexSet Y) const { return dims_[Y.mask()]; }
  /// Indexed by vertex mask.
  const std::vector<std::size_t>& dim_vector() const { return dims_; }
  std::size_t total_dim() const;

  /// Action of e_{Y,Z} for Y a subset of Z (identity when Y == Z).
  const Matrix& action(IndexSet Y, IndexSet Z) const;
  /// Every proper (Y, Z) pair with its matrix.
  const std::map<MapKey, Matrix>& maps() const { return maps_; }

 private:
  AlgebraModule() = default;

  int n_ = 0;
  std::vector<std::size_t> dims_;
  std::map<MapKey, Matrix> maps_;
  std::vector<Matrix> identities_;
};

/// The right regular module A_A.
AlgebraModule regular_module(const IncidenceAlgebra& A);

/// Q on every vertex of the interval [lo, hi], identity maps inside it.
AlgebraModule interval_module(int n, IndexSet lo, IndexSet hi);

AlgebraModule direct_sum(const std::vector<AlgebraModule>& parts);

/// The same module written in new bases: row b of basis[Y] becomes the b-th
/// basis vector at Y. Every basis[Y] must be invertible.
AlgebraModule change_basis(const AlgebraModule& M, const std::vector<Matrix>& basis);

/// A module endomorphism, one square block per vertex mask.
using Endomorphism = std::vector<Matrix>;

/// Basis of Hom(M, N): blocks F_Y with A^M_{YZ} F_Z = F_Y A^N_{YZ}.
std::vector<Endomorphism> hom_basis(const AlgebraModule& M, const AlgebraModule& N);
std::vector<Endomorphism> endomorphism_basis(const AlgebraModule& M);

/// dim End(M) - dim rad End(M), with the radical taken as the null space of
/// the trace form of End(M) acting on M.
std::size_t endomorphism_top_dim(const AlgebraModule& M);

struct Summand {
  AlgebraModule module;
  int multiplicity = 1;
  /// End(module) / rad End(module) is one-dimensional.
  bool certified_local = false;
};

/// Krull-Schmidt decomposition by Fitting splittings along pseudo-random
/// endomorphisms (seeded). Guarded to total dimension <= 64.
std::vector<Summand> krull_schmidt_decompose(const IncidenceAlgebra& A, const AlgebraModule& M,
                                             std::uint64_t seed, Guard guard = {});

/// True iff some random element of Hom(a, b) is invertible.
bool isomorphic(const AlgebraModule& a, const AlgebraModule& b, std::uint64_t seed = 0);

}  // namespace catx
