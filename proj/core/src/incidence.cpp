#include "catx/incidence.hpp"

#include <algorithm>

namespace catx {

namespace {

SparseVector to_sparse(const Vector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) out.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  }
  return out;
}

Vector to_dense(const SparseVector& v, std::size_t dim) {
  Vector out(dim);
  for (const auto& [i, q] : v) out[i] += q;
  return out;
}

// Product of sparse elements; result is accumulated densely.
bool multiply_into(const FiniteAlgebra& A, const SparseVector& x, const SparseVector& y, Vector& out) {
  bool any = false;
  for (const auto& [i, a] : x) {
    for (const auto& [j, b] : y) {
      const auto& p = A.product(i, j);
      if (p.empty()) continue;
      const Rational ab = a * b;
      for (const auto& [k, c] : p) out[k] += ab * c;
      any = true;
    }
  }
  return any;
}

std::vector<SparseVector> sparse_basis(const std::vector<Vector>& vs) {
  std::vector<SparseVector> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(to_sparse(v));
  return out;
}

Subspace span_sparse_products(const FiniteAlgebra& A, const std::vector<SparseVector>& left,
                              const std::vector<SparseVector>& right) {
  Subspace out(A.dim());
  Vector buf(A.dim());
  for (const auto& x : left) {
    for (const auto& y : right) {
      std::fill(buf.begin(), buf.end(), 0);
      if (multiply_into(A, x, y, buf) && !is_zero(buf)) {
        out.add(buf);
        if (out.dim() == A.dim()) return out;
      }
    }
  }
  return out;
}

std::vector<Vector> unit_vectors(std::size_t dim) {
  std::vector<Vector> out(dim, Vector(dim));
  for (std::size_t i = 0; i < dim; ++i) out[i][i] = 1;
  return out;
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(std::size_t dim, std::vector<SparseVector> products)
    : dim_(dim), products_(std::move(products)) {
  if (products_.size() != dim_ * dim_) throw InputError("structure constant table has wrong size");
}

Vector FiniteAlgebra::multiply(const Vector& x, const Vector& y) const {
  Vector out(dim_);
  multiply_into(*this, to_sparse(x), to_sparse(y), out);
  return out;
}

Vector FiniteAlgebra::basis_vector(std::size_t i) const {
  Vector v(dim_);
  v[i] = 1;
  return v;
}

Rational FiniteAlgebra::regular_trace(std::size_t i) const {
  Rational t = 0;
  for (std::size_t k = 0; k < dim_; ++k) {
    for (const auto& [idx, c] : product(i, k)) {
      if (idx == k) t += c;
    }
  }
  return t;
}

Subspace span_products(const FiniteAlgebra& A, const std::vector<Vector>& left,
                       const std::vector<Vector>& right) {
  return span_sparse_products(A, sparse_basis(left), sparse_basis(right));
}

Subspace trace_form_radical(const FiniteAlgebra& A) {
  const std::size_t d = A.dim();
  std::vector<Rational> traces(d);
  for (std::size_t k = 0; k < d; ++k) traces[k] = A.regular_trace(k);
  Matrix gram(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (const auto& [k, c] : A.product(i, j)) gram(i, j) += c * traces[k];
    }
  }
  Subspace rad(d);
  for (const auto& v : nullspace(gram)) rad.add(v);
  return rad;
}

Vector QuotientAlgebra::project(const Vector& x) const {
  const Vector r = ideal.reduce(x);
  Vector out(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) out[i] = r[kept[i]];
  return out;
}

QuotientAlgebra quotient(const FiniteAlgebra& A, const Subspace& ideal) {
  std::vector<bool> pivot(A.dim(), false);
  for (auto p : ideal.pivots()) pivot[p] = true;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    if (!pivot[i]) kept.push_back(i);
  }
  QuotientAlgebra q{FiniteAlgebra{}, ideal, kept};
  const std::size_t d = kept.size();
  std::vector<SparseVector> table(d * d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      const auto& p = A.product(kept[a], kept[b]);
      if (p.empty()) continue;
      table[a * d + b] = to_sparse(q.project(to_dense(p, A.dim())));
    }
  }
  q.algebra = FiniteAlgebra(d, std::move(table));
  return q;
}

IncidenceAlgebra build_incidence_algebra(int n, Guard guard) {
  if (n < 0) throw InputError("n must be non-negative");
  if (n > 6 && !guard.override_limits) throw ResourceError("incidence algebra guard is n <= 6");
  if (n > 10) throw ResourceError("incidence algebra is limited to n <= 10");

  IncidenceAlgebra A;
  A.n_ = n;
  A.vertices_ = IndexSet::full(n).subsets();
  std::sort(A.vertices_.begin(), A.vertices_.end());
  for (IndexSet Y : A.vertices_) {
    for (IndexSet Z : A.vertices_) {
      if (!Y.subset_of(Z)) continue;
      A.lookup_.emplace(std::make_pair(Y.mask(), Z.mask()), A.basis_.size());
      A.basis_.emplace_back(Y, Z);
    }
  }
  const std::size_t d = A.basis_.size();
  std::vector<SparseVector> table(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (auto k = A.multiply_basis(i, j)) table[i * d + j] = {{static_cast<std::uint32_t>(*k), Rational(1)}};
    }
  }
  A.structure_ = FiniteAlgebra(d, std::move(table));
  return A;
}

std::optional<std::size_t> IncidenceAlgebra::index_of(IndexSet Y, IndexSet Z) const {
  if (auto it = lookup_.find({Y.mask(), Z.mask()}); it != lookup_.end()) return it->second;
  return std::nullopt;
}

std::optional<std::size_t> IncidenceAlgebra::multiply_basis(std::size_t i, std::size_t j) const {
  if (basis_[i].second != basis_[j].first) return std::nullopt;
  return index_of(basis_[i].first, basis_[j].second);
}

Vector IncidenceAlgebra::idempotent(IndexSet Y) const {
  auto k = index_of(Y, Y);
  if (!k) throw InputError("vertex " + Y.to_string() + " is not a subset of {1..n}");
  return structure_.basis_vector(*k);
}

Vector IncidenceAlgebra::unit() const {
  Vector u(dim());
  for (IndexSet Y : vertices_) u[*index_of(Y, Y)] = 1;
  return u;
}

RadicalInfo algebra_radical(const IncidenceAlgebra& A) {
  const auto& S = A.structure();
  RadicalInfo info;
  const Subspace rad = trace_form_radical(S);

  // The trace-form radical of a monomial algebra is spanned by basis vectors.
  for (const auto& row : rad.basis()) {
    const auto sp = to_sparse(row);
    if (sp.size() == 1) info.basis.push_back(A.basis()[sp.front().first]);
  }
  std::sort(info.basis.begin(), info.basis.end(), [&](const auto& a, const auto& b) {
    return *A.index_of(a.first, a.second) < *A.index_of(b.first, b.second);
  });

  const auto rad_sparse = sparse_basis(rad.basis());
  std::vector<SparseVector> power = rad_sparse;
  std::size_t prev = rad.dim();
  info.series.push_back(prev);
  // rad^k for k = 2, 3, ... until it vanishes or stops shrinking.
  while (prev > 0) {
    const Subspace next = span_sparse_products(S, power, rad_sparse);
    info.series.push_back(next.dim());
    if (next.dim() == prev) break;
    prev = next.dim();
    power = sparse_basis(next.basis());
  }
  info.nilpotent = info.series.back() == 0;

  const QuotientAlgebra top = quotient(S, rad);
  Subspace idems(top.algebra.dim());
  bool ok = top.algebra.dim() == A.vertices().size();
  for (IndexSet Y : A.vertices()) {
    const Vector e = top.project(A.idempotent(Y));
    ok = ok && idems.add(e) && top.algebra.multiply(e, e) == e;
  }
  info.split_semisimple_top = ok && idems.dim() == top.algebra.dim();
  return info;
}

CartanExt cartan_and_ext(const IncidenceAlgebra& A) {
  const auto& S = A.structure();
  const auto& V = A.vertices();
  CartanExt out;
  out.vertices = V;

  std::vector<SparseVector> idem;
  for (IndexSet Y : V) idem.push_back(to_sparse(A.idempotent(Y)));

  // dim e_Y X e_Z for a subspace X given by a sparse spanning set.
  auto corner_dim = [&](std::size_t y, std::size_t z, const std::vector<SparseVector>& span) {
    std::vector<SparseVector> left;
    for (const auto& x : span) {
      Vector buf(S.dim());
      if (multiply_into(S, idem[y], x, buf) && !is_zero(buf)) left.push_back(to_sparse(buf));
    }
    return static_cast<long>(span_sparse_products(S, left, {idem[z]}).dim());
  };

  const auto all = sparse_basis(unit_vectors(S.dim()));
  out.cartan.assign(V.size(), std::vector<long>(V.size(), 0));
  Matrix c(V.size(), V.size());
  for (std::size_t y = 0; y < V.size(); ++y) {
    for (std::size_t z = 0; z < V.size(); ++z) {
      out.cartan[y][z] = corner_dim(y, z, all);
      c(y, z) = out.cartan[y][z];
    }
  }
  out.determinant = determinant(c);

  const Subspace rad = trace_form_radical(S);
  const auto rad_sparse = sparse_basis(rad.basis());
  const auto rad2_sparse = sparse_basis(span_sparse_products(S, rad_sparse, rad_sparse).basis());
  for (std::size_t y = 0; y < V.size(); ++y) {
    for (std::size_t z = 0; z < V.size(); ++z) {
      if (out.cartan[y][z] == 0) continue;
      const long arrows = corner_dim(y, z, rad_sparse) - corner_dim(y, z, rad2_sparse);
      if (arrows != 0) out.ext1[{V[y], V[z]}] = arrows;
    }
  }
  return out;
}

bool HeredityReport::pass() const {
  return std::all_of(layers.begin(), layers.end(), [](const HeredityLayer& l) { return l.pass(); });
}

HeredityReport heredity_chain_check(const IncidenceAlgebra& A) {
  HeredityReport report;
  if (A.n() == 0) return report;

  FiniteAlgebra cur = A.structure();
  std::vector<std::pair<IndexSet, Vector>> idem;
  for (IndexSet Y : A.vertices()) idem.emplace_back(Y, A.idempotent(Y));

  for (int level = A.n(); level >= 0; --level) {
    HeredityLayer layer;
    layer.level = level;
    const std::size_t d = cur.dim();
    const auto basis = sparse_basis(unit_vectors(d));

    std::vector<SparseVector> level_idems;
    Vector eps(d);
    for (const auto& [Y, e] : idem) {
      if (Y.size() != level) continue;
      level_idems.push_back(to_sparse(e));
      for (std::size_t k = 0; k < d; ++k) eps[k] += e[k];
    }
    const std::vector<SparseVector> eps_v{to_sparse(eps)};

    const Subspace left = span_sparse_products(cur, basis, eps_v);   // A'e
    const Subspace right = span_sparse_products(cur, eps_v, basis);  // eA'
    const Subspace J = span_sparse_products(cur, sparse_basis(left.basis()), sparse_basis(right.basis()));
    layer.ideal_dim = J.dim();
    const auto J_sparse = sparse_basis(J.basis());

    const Subspace J2 = span_sparse_products(cur, J_sparse, J_sparse);
    layer.idempotent = J2.dim() == J.dim() && J.contains(J2);

    const Subspace rad = trace_form_radical(cur);
    const Subspace JR = span_sparse_products(cur, J_sparse, sparse_basis(rad.basis()));
    layer.kills_radical = span_sparse_products(cur, sparse_basis(JR.basis()), J_sparse).dim() == 0;

    // eA'e must be the product of the lines Q e_Y.
    bool corner = true;
    for (std::size_t a = 0; a < level_idems.size() && corner; ++a) {
      for (std::size_t b = 0; b < level_idems.size() && corner; ++b) {
        const Subspace lhs = span_sparse_products(cur, {level_idems[a]}, basis);
        const Subspace c = span_sparse_products(cur, sparse_basis(lhs.basis()), {level_idems[b]});
        corner = c.dim() == (a == b ? 1u : 0u);
      }
    }
    layer.semisimple_corner = corner;

    // Over a split semisimple corner the tensor product splits vertex by vertex.
    Subspace image(d);
    for (const auto& e : level_idems) {
      const Subspace Ae = span_sparse_products(cur, basis, {e});
      const Subspace eA = span_sparse_products(cur, {e}, basis);
      layer.tensor_dim += Ae.dim() * eA.dim();
      const Subspace prod = span_sparse_products(cur, sparse_basis(Ae.basis()), sparse_basis(eA.basis()));
      for (const auto& v : prod.basis()) image.add(v);
    }
    layer.image_dim = image.dim();
    layer.projective = layer.tensor_dim == layer.image_dim && image == J;
    report.layers.push_back(layer);

    const QuotientAlgebra q = quotient(cur, J);
    for (auto& [Y, e] : idem) e = q.project(e);
    cur = q.algebra;
  }
  return report;
}

std::vector<VertexModules> projective_injective_dims(const IncidenceAlgebra& A) {
  const auto& S = A.structure();
  const auto basis = sparse_basis(unit_vectors(S.dim()));
  const CartanExt ce = cartan_and_ext(A);
  std::vector<VertexModules> out;
  for (std::size_t y = 0; y < A.vertices().size(); ++y) {
    const std::vector<SparseVector> e{to_sparse(A.idempotent(A.vertices()[y]))};
    VertexModules row;
    row.vertex = A.vertices()[y];
    row.projective_dim = span_sparse_products(S, e, basis).dim();
    row.injective_dim = span_sparse_products(S, basis, e).dim();
    bool free = true;
    for (std::size_t z = 0; z < A.vertices().size(); ++z) {
      row.projective_length += static_cast<std::size_t>(ce.cartan[y][z]);
      row.injective_length += static_cast<std::size_t>(ce.cartan[z][y]);
      free = free && ce.cartan[y][z] <= 1 && ce.cartan[z][y] <= 1;
    }
    row.multiplicity_free = free;
    out.push_back(row);
  }
  return out;
}

}  // namespace catx
