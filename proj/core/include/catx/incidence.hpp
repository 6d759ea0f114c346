#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "catx/common.hpp"
#include "catx/linalg.hpp"

namespace catx {

using SparseVector = std::vector<std::pair<std::uint32_t, Rational>>;

/// A finite-dimensional associative Q-algebra given by structure constants
/// on a fixed basis b_0, ..., b_{d-1}.
class FiniteAlgebra {
 public:
  FiniteAlgebra() = default;
  /// products[i * dim + j] holds b_i b_j.
  FiniteAlgebra(std::size_t dim, std::vector<SparseVector> products);

  std::size_t dim() const { return dim_; }
  const SparseVector& product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }
  Vector multiply(const Vector& x, const Vector& y) const;
  Vector basis_vector(std::size_t i) const;

  /// tr(L_{b_i}) in the regular representation.
  Rational regular_trace(std::size_t i) const;

 private:
  std::size_t dim_ = 0;
  std::vector<SparseVector> products_;
};

/// span{x y : x in left, y in right}.
Subspace span_products(const FiniteAlgebra& A, const std::vector<Vector>& left,
                       const std::vector<Vector>& right);

/// Null space of the trace form (x, y) -> tr(L_{xy}) of the regular
/// representation; this is the Jacobson radical in characteristic zero.
Subspace trace_form_radical(const FiniteAlgebra& A);

struct QuotientAlgebra {
  FiniteAlgebra algebra;
  Subspace ideal;
  /// Coordinates of A kept as the basis of A / ideal (the non-pivot ones).
  std::vector<std::size_t> kept;

  /// Image of an element of A in the quotient basis.
  Vector project(const Vector& x) const;
};

/// A / ideal for a two-sided ideal.
QuotientAlgebra quotient(const FiniteAlgebra& A, const Subspace& ideal);

/// The incidence algebra of the Boolean lattice of subsets of {1..n}:
/// basis e_{Y,Z} for Y subset of Z, with e_{Y,Z} e_{Z,W} = e_{Y,W}.
class IncidenceAlgebra {
 public:
  int n() const { return n_; }
  std::size_t dim() const { return basis_.size(); }

  /// Pairs (Y, Z) ordered by (|Y|, lex Y, |Z|, lex Z).
  const std::vector<std::pair<IndexSet, IndexSet>>& basis() const { return basis_; }
  std::optional<std::size_t> index_of(IndexSet Y, IndexSet Z) const;
  /// All subsets of {1..n} ordered by (|Y|, lex).
  const std::vector<IndexSet>& vertices() const { return vertices_; }

  /// Index of e_{Y,Z} e_{Z',W}, or nullopt when the product vanishes.
  std::optional<std::size_t> multiply_basis(std::size_t i, std::size_t j) const;

  const FiniteAlgebra& structure() const { return structure_; }
  /// The idempotent e_{Y,Y} as a vector.
  Vector idempotent(IndexSet Y) const;
  Vector unit() const;

 private:
  friend IncidenceAlgebra build_incidence_algebra(int n, Guard guard);

  int n_ = 0;
  std::vector<std::pair<IndexSet, IndexSet>> basis_;
  std::vector<IndexSet> vertices_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> lookup_;
  FiniteAlgebra structure_;
};

/// Guarded to 0 <= n <= 6.
IncidenceAlgebra build_incidence_algebra(int n, Guard guard = {});

struct RadicalInfo {
  /// Pairs (Y, Z) spanning rad; every one has Y a proper subset of Z.
  std::vector<std::pair<IndexSet, IndexSet>> basis;
  /// dim rad^1, dim rad^2, ... down to and including the first zero.
  std::vector<std::size_t> series;
  bool nilpotent = false;
  /// A / rad is spanned by the 2^n vertex idempotents and is commutative semisimple.
  bool split_semisimple_top = false;
};

RadicalInfo algebra_radical(const IncidenceAlgebra& A);

struct CartanExt {
  std::vector<IndexSet> vertices;
  /// cartan[y][z] = dim e_Y A e_Z, indexed in vertex order.
  std::vector<std::vector<long>> cartan;
  Rational determinant;
  /// Nonzero dim e_Y (rad / rad^2) e_Z.
  std::map<std::pair<IndexSet, IndexSet>, long> ext1;
};

CartanExt cartan_and_ext(const IncidenceAlgebra& A);

struct HeredityLayer {
  int level = 0;  // cardinality of the vertices peeled in this layer
  std::size_t ideal_dim = 0;
  bool idempotent = false;        // J^2 = J
  bool kills_radical = false;     // J rad J = 0
  bool semisimple_corner = false;  // e A' e is split semisimple
  std::size_t tensor_dim = 0;     // dim A'e (x)_{eA'e} eA'
  std::size_t image_dim = 0;      // rank of the multiplication map
  bool projective = false;        // multiplication map is bijective onto J

  bool pass() const { return idempotent && kills_radical && semisimple_corner && projective; }
};

struct HeredityReport {
  std::vector<HeredityLayer> layers;
  bool pass() const;
};

/// Peels the vertex idempotents by descending cardinality and checks every
/// layer of the resulting chain of ideals for the heredity axioms.
HeredityReport heredity_chain_check(const IncidenceAlgebra& A);

struct VertexModules {
  IndexSet vertex;
  std::size_t projective_dim = 0;     // dim e_Y A
  std::size_t injective_dim = 0;      // dim A e_Y
  std::size_t projective_length = 0;  // composition length of e_Y A
  std::size_t injective_length = 0;
  bool multiplicity_free = false;
};

std::vector<VertexModules> projective_injective_dims(const IncidenceAlgebra& A);

}  // namespace catx
