#include "catx/modules.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <set>

namespace catx {

namespace {

constexpr std::size_t kMaxModuleDim = 64;
constexpr int kSplitAttempts = 64;

std::vector<IndexSet> all_vertices(int n) { return IndexSet::full(n).subsets(); }

bool covers(IndexSet Y, IndexSet Z) { return Y.proper_subset_of(Z) && Z.size() == Y.size() + 1; }

}  // namespace

AlgebraModule::AlgebraModule(int n, std::vector<std::size_t> dims, std::map<MapKey, Matrix> maps)
    : n_(n), dims_(std::move(dims)) {
  if (n < 0 || n > 10) throw InputError("module over A_n needs 0 <= n <= 10");
  const std::size_t vertices = std::size_t{1} << n;
  if (dims_.size() != vertices) throw InputError("dimension vector must have 2^n entries");

  for (auto& [key, m] : maps) {
    const IndexSet Y(key.first), Z(key.second);
    if (key.first >= vertices || key.second >= vertices || !Y.proper_subset_of(Z)) {
      throw InputError("map " + Y.to_string() + "->" + Z.to_string() + " is not a proper inclusion in {1.." +
                       std::to_string(n) + "}");
    }
    if (m.rows() != dims_[key.first] || m.cols() != dims_[key.second]) {
      // Allow an empty placeholder for a zero-dimensional end.
      if (!(m.rows() == 0 && m.cols() == 0)) {
        throw InputError("map " + Y.to_string() + "->" + Z.to_string() + " has the wrong shape");
      }
      m = Matrix(dims_[key.first], dims_[key.second]);
    }
  }

  // Fill missing maps by increasing gap |Z| - |Y|.
  const auto verts = all_vertices(n);
  for (int gap = 1; gap <= n; ++gap) {
    for (IndexSet Y : verts) {
      for (IndexSet Z : verts) {
        if (!Y.proper_subset_of(Z) || Z.size() - Y.size() != gap) continue;
        const MapKey key{Y.mask(), Z.mask()};
        if (auto it = maps.find(key); it != maps.end()) {
          maps_.emplace(key, std::move(it->second));
        } else if (gap == 1) {
          maps_.emplace(key, Matrix(dims_[Y.mask()], dims_[Z.mask()]));
        } else {
          const int first = (Z - Y).indices().front();
          IndexSet V = Y;
          V.insert(first);
          maps_.emplace(key, maps_.at({Y.mask(), V.mask()}) * maps_.at({V.mask(), Z.mask()}));
        }
      }
    }
  }

  for (const auto& [yz, a] : maps_) {
    const IndexSet Y(yz.first), Z(yz.second);
    for (IndexSet V : verts) {
      if (!Y.proper_subset_of(V) || !V.proper_subset_of(Z)) continue;
      if (maps_.at({Y.mask(), V.mask()}) * maps_.at({V.mask(), Z.mask()}) != a) {
        throw InputError("action is not compatible with the algebra: " + Y.to_string() + "->" +
                         V.to_string() + "->" + Z.to_string() + " differs from " + Y.to_string() + "->" +
                         Z.to_string());
      }
    }
  }

  for (std::size_t v = 0; v < vertices; ++v) identities_.push_back(Matrix::identity(dims_[v]));
}

AlgebraModule AlgebraModule::zero(int n) {
  return AlgebraModule(n, std::vector<std::size_t>(std::size_t{1} << n, 0), {});
}

std::size_t AlgebraModule::total_dim() const {
  std::size_t t = 0;
  for (auto d : dims_) t += d;
  return t;
}

const Matrix& AlgebraModule::action(IndexSet Y, IndexSet Z) const {
  if (Y == Z) return identities_.at(Y.mask());
  auto it = maps_.find({Y.mask(), Z.mask()});
  if (it == maps_.end()) throw InputError("e_{Y,Z} needs Y to be a subset of Z");
  return it->second;
}

AlgebraModule regular_module(const IncidenceAlgebra& A) {
  const int n = A.n();
  // M e_Y has basis e_{U,Y}, U a subset of Y, in vertex order.
  std::vector<std::vector<IndexSet>> below(std::size_t{1} << n);
  for (IndexSet U : A.vertices()) {
    for (IndexSet Y : A.vertices()) {
      if (U.subset_of(Y)) below[Y.mask()].push_back(U);
    }
  }
  std::vector<std::size_t> dims(below.size());
  for (std::size_t y = 0; y < below.size(); ++y) dims[y] = below[y].size();

  std::map<AlgebraModule::MapKey, Matrix> maps;
  for (IndexSet Y : A.vertices()) {
    for (IndexSet Z : A.vertices()) {
      if (!covers(Y, Z)) continue;
      Matrix m(dims[Y.mask()], dims[Z.mask()]);
      const auto& from = below[Y.mask()];
      const auto& to = below[Z.mask()];
      for (std::size_t r = 0; r < from.size(); ++r) {
        const auto c = std::find(to.begin(), to.end(), from[r]) - to.begin();
        m(r, static_cast<std::size_t>(c)) = 1;
      }
      maps.emplace(AlgebraModule::MapKey{Y.mask(), Z.mask()}, std::move(m));
    }
  }
  return AlgebraModule(n, std::move(dims), std::move(maps));
}

AlgebraModule interval_module(int n, IndexSet lo, IndexSet hi) {
  if (!lo.subset_of(hi) || !hi.subset_of(IndexSet::full(n))) {
    throw InputError("interval needs lo subset of hi subset of {1..n}");
  }
  std::vector<std::size_t> dims(std::size_t{1} << n, 0);
  for (IndexSet U : all_vertices(n)) {
    if (lo.subset_of(U) && U.subset_of(hi)) dims[U.mask()] = 1;
  }
  std::map<AlgebraModule::MapKey, Matrix> maps;
  for (IndexSet Y : all_vertices(n)) {
    for (IndexSet Z : all_vertices(n)) {
      if (covers(Y, Z) && dims[Y.mask()] == 1 && dims[Z.mask()] == 1) {
        maps.emplace(AlgebraModule::MapKey{Y.mask(), Z.mask()}, Matrix::identity(1));
      }
    }
  }
  return AlgebraModule(n, std::move(dims), std::move(maps));
}

AlgebraModule direct_sum(const std::vector<AlgebraModule>& parts) {
  if (parts.empty()) throw InputError("direct sum of no modules");
  const int n = parts.front().n();
  std::vector<std::size_t> dims(std::size_t{1} << n, 0);
  for (const auto& p : parts) {
    if (p.n() != n) throw InputError("direct sum of modules over different algebras");
    for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += p.dim_vector()[v];
  }
  std::map<AlgebraModule::MapKey, Matrix> maps;
  for (IndexSet Y : all_vertices(n)) {
    for (IndexSet Z : all_vertices(n)) {
      if (!covers(Y, Z)) continue;
      Matrix m(dims[Y.mask()], dims[Z.mask()]);
      std::size_t r0 = 0, c0 = 0;
      for (const auto& p : parts) {
        const Matrix& a = p.action(Y, Z);
        for (std::size_t r = 0; r < a.rows(); ++r) {
          for (std::size_t c = 0; c < a.cols(); ++c) m(r0 + r, c0 + c) = a(r, c);
        }
        r0 += a.rows();
        c0 += a.cols();
      }
      maps.emplace(AlgebraModule::MapKey{Y.mask(), Z.mask()}, std::move(m));
    }
  }
  return AlgebraModule(n, std::move(dims), std::move(maps));
}

AlgebraModule change_basis(const AlgebraModule& M, const std::vector<Matrix>& basis) {
  const int n = M.n();
  if (basis.size() != M.dim_vector().size()) throw InputError("one basis per vertex is required");
  std::vector<Matrix> inv;
  for (std::size_t v = 0; v < basis.size(); ++v) {
    if (basis[v].rows() != M.dim_vector()[v]) throw InputError("basis has the wrong size");
    auto i = inverse(basis[v]);
    if (!i) throw InputError("basis change is not invertible");
    inv.push_back(std::move(*i));
  }
  std::map<AlgebraModule::MapKey, Matrix> maps;
  for (IndexSet Y : all_vertices(n)) {
    for (IndexSet Z : all_vertices(n)) {
      if (!covers(Y, Z)) continue;
      maps.emplace(AlgebraModule::MapKey{Y.mask(), Z.mask()}, basis[Y.mask()] * M.action(Y, Z) * inv[Z.mask()]);
    }
  }
  return AlgebraModule(n, M.dim_vector(), std::move(maps));
}

std::vector<Endomorphism> hom_basis(const AlgebraModule& M, const AlgebraModule& N) {
  if (M.n() != N.n()) throw InputError("modules over different algebras");
  const int n = M.n();
  const auto verts = all_vertices(n);
  const std::size_t nv = std::size_t{1} << n;

  // Unknown F_Y(r, c) lives at offset[Y] + r * dN(Y) + c.
  std::vector<std::size_t> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + M.dim_vector()[v] * N.dim_vector()[v];
  const std::size_t unknowns = offset[nv];
  if (unknowns == 0) return {};

  std::vector<Vector> rows;
  for (IndexSet Y : verts) {
    for (IndexSet Z : verts) {
      if (!covers(Y, Z)) continue;
      const Matrix& a = M.action(Y, Z);
      const Matrix& b = N.action(Y, Z);
      const std::size_t dmY = M.dim(Y), dnY = N.dim(Y), dmZ = M.dim(Z), dnZ = N.dim(Z);
      // (a F_Z - F_Y b)(r, c) = 0 for r < dmY, c < dnZ.
      for (std::size_t r = 0; r < dmY; ++r) {
        for (std::size_t c = 0; c < dnZ; ++c) {
          Vector eq(unknowns);
          bool any = false;
          for (std::size_t k = 0; k < dmZ; ++k) {
            if (sgn(a(r, k)) == 0) continue;
            eq[offset[Z.mask()] + k * dnZ + c] += a(r, k);
            any = true;
          }
          for (std::size_t k = 0; k < dnY; ++k) {
            if (sgn(b(k, c)) == 0) continue;
            eq[offset[Y.mask()] + r * dnY + k] -= b(k, c);
            any = true;
          }
          if (any) rows.push_back(std::move(eq));
        }
      }
    }
  }
  const Matrix system = Matrix::from_rows(rows, unknowns);
  std::vector<Vector> sols = rows.empty() ? std::vector<Vector>{} : nullspace(system);
  if (rows.empty()) {
    for (std::size_t u = 0; u < unknowns; ++u) {
      Vector e(unknowns);
      e[u] = 1;
      sols.push_back(std::move(e));
    }
  }

  std::vector<Endomorphism> out;
  for (const auto& s : sols) {
    Endomorphism f(nv);
    for (std::size_t v = 0; v < nv; ++v) {
      f[v] = Matrix(M.dim_vector()[v], N.dim_vector()[v]);
      for (std::size_t r = 0; r < f[v].rows(); ++r) {
        for (std::size_t c = 0; c < f[v].cols(); ++c) f[v](r, c) = s[offset[v] + r * f[v].cols() + c];
      }
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Endomorphism> endomorphism_basis(const AlgebraModule& M) { return hom_basis(M, M); }

namespace {

Rational block_trace_product(const Endomorphism& f, const Endomorphism& g) {
  Rational t = 0;
  for (std::size_t v = 0; v < f.size(); ++v) {
    const Matrix& a = f[v];
    const Matrix& b = g[v];
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (sgn(a(i, k)) != 0 && sgn(b(k, i)) != 0) t += a(i, k) * b(k, i);
      }
    }
  }
  return t;
}

std::size_t top_dim(const std::vector<Endomorphism>& E) {
  if (E.empty()) return 0;
  Matrix gram(E.size(), E.size());
  for (std::size_t i = 0; i < E.size(); ++i) {
    for (std::size_t j = i; j < E.size(); ++j) {
      gram(i, j) = block_trace_product(E[i], E[j]);
      gram(j, i) = gram(i, j);
    }
  }
  return rank(gram);
}

Endomorphism combine(const std::vector<Endomorphism>& basis, const std::vector<std::pair<std::size_t, int>>& terms) {
  Endomorphism f = basis.front();
  for (auto& m : f) m = m.scaled(0);
  for (const auto& [idx, coeff] : terms) {
    for (std::size_t v = 0; v < f.size(); ++v) f[v] = f[v] + basis[idx][v].scaled(coeff);
  }
  return f;
}

// Monic minimal polynomial of a square matrix, lowest degree first.
std::vector<Rational> minimal_polynomial(const Matrix& m) {
  const std::size_t d = m.rows();
  std::vector<Vector> powers;
  Subspace span(d * d);
  Matrix p = Matrix::identity(d);
  while (true) {
    Vector flat(d * d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) flat[i * d + j] = p(i, j);
    }
    if (!span.add(flat)) {
      const auto coeffs = solve_left(Matrix::from_rows(powers, d * d), flat);
      std::vector<Rational> poly(powers.size() + 1);
      for (std::size_t k = 0; k < powers.size(); ++k) poly[k] = -(*coeffs)[k];
      poly.back() = 1;
      return poly;
    }
    powers.push_back(std::move(flat));
    p = p * m;
  }
}

Rational evaluate(const std::vector<Rational>& poly, const Rational& x) {
  Rational acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Rational roots of a polynomial with rational coefficients. Candidates come
// from a numerical root finder; every reported root is verified exactly.
std::vector<Rational> rational_roots(std::vector<Rational> poly) {
  std::vector<Rational> roots;
  while (poly.size() > 1 && sgn(poly.front()) == 0) {
    poly.erase(poly.begin());
    roots.emplace_back(0);
  }
  const std::size_t deg = poly.size() - 1;
  if (deg == 0) return roots;
  if (deg == 1) {
    roots.push_back(-poly[0] / poly[1]);
    return roots;
  }

  mpz_class den_lcm = 1;
  for (const auto& c : poly) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : poly) ints.push_back(mpz_class(c * den_lcm));
  const mpz_class lead = abs(ints.back());

  using C = std::complex<long double>;
  std::vector<long double> monic(deg + 1);
  for (std::size_t k = 0; k <= deg; ++k) {
    monic[k] = static_cast<long double>(ints[k].get_d()) / static_cast<long double>(ints.back().get_d());
    if (!std::isfinite(monic[k])) return roots;
  }
  std::vector<C> z(deg);
  for (std::size_t k = 0; k < deg; ++k) z[k] = std::pow(C(0.4L, 0.9L), static_cast<long double>(k));
  for (int iter = 0; iter < 800; ++iter) {
    for (std::size_t k = 0; k < deg; ++k) {
      C num = 1;
      for (std::size_t j = deg; j-- > 0;) num = num * z[k] + monic[j];
      num = num * 1.0L;  // value of the monic polynomial without its leading term folded in
      C val = 1;
      for (std::size_t j = deg; j-- > 0;) val = val * z[k] + monic[j];
      C den = 1;
      for (std::size_t j = 0; j < deg; ++j) {
        if (j != k) den *= (z[k] - z[j]);
      }
      if (std::abs(den) > 0) z[k] -= val / den;
    }
  }

  std::set<Rational> found(roots.begin(), roots.end());
  for (const C& r : z) {
    if (!std::isfinite(r.real()) || std::abs(r.imag()) > 1e-6L * (1 + std::abs(r.real()))) continue;
    // Continued fraction convergents of the real part, denominators bounded by |lead|.
    long double x = r.real();
    mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    for (int step = 0; step < 40; ++step) {
      const long double a = std::floor(x);
      const mpz_class ai(static_cast<double>(a));
      const mpz_class h2 = ai * h1 + h0, k2 = ai * k1 + k0;
      if (k2 > lead) break;
      const Rational cand(h2, k2);
      Rational canon = cand;
      canon.canonicalize();
      if (!found.count(canon) && sgn(evaluate(poly, canon)) == 0) {
        found.insert(canon);
        roots.push_back(canon);
      }
      h0 = h1;
      h1 = h2;
      k0 = k1;
      k1 = k2;
      const long double frac = x - a;
      if (frac < 1e-12L) break;
      x = 1 / frac;
    }
  }
  return roots;
}

std::vector<Rational> rational_eigenvalues(const Endomorphism& f) {
  std::set<Rational> out;
  for (const auto& block : f) {
    if (block.rows() == 0) continue;
    for (const auto& r : rational_roots(minimal_polynomial(block))) out.insert(r);
  }
  return {out.begin(), out.end()};
}

std::vector<Vector> row_space(const Matrix& m) {
  Subspace s(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) s.add(m.row(r));
  return s.basis();
}

AlgebraModule submodule(const AlgebraModule& M, const std::vector<std::vector<Vector>>& bases) {
  const int n = M.n();
  std::vector<std::size_t> dims(bases.size());
  std::vector<Matrix> B(bases.size());
  for (std::size_t v = 0; v < bases.size(); ++v) {
    dims[v] = bases[v].size();
    B[v] = Matrix::from_rows(bases[v], M.dim_vector()[v]);
  }
  std::map<AlgebraModule::MapKey, Matrix> maps;
  for (IndexSet Y : all_vertices(n)) {
    for (IndexSet Z : all_vertices(n)) {
      if (!covers(Y, Z)) continue;
      Matrix a(dims[Y.mask()], dims[Z.mask()]);
      if (dims[Y.mask()] > 0 && dims[Z.mask()] > 0) {
        const Matrix img = B[Y.mask()] * M.action(Y, Z);
        for (std::size_t r = 0; r < img.rows(); ++r) {
          const auto c = solve_left(B[Z.mask()], img.row(r));
          if (!c) throw std::logic_error("subspace is not a submodule");
          for (std::size_t j = 0; j < dims[Z.mask()]; ++j) a(r, j) = (*c)[j];
        }
      }
      maps.emplace(AlgebraModule::MapKey{Y.mask(), Z.mask()}, std::move(a));
    }
  }
  return AlgebraModule(n, std::move(dims), std::move(maps));
}

struct Split {
  AlgebraModule kernel;
  AlgebraModule image;
};

// Fitting decomposition M = ker psi^N + im psi^N, if both parts are nonzero.
std::optional<Split> fitting_split(const AlgebraModule& M, const Endomorphism& psi) {
  std::vector<std::vector<Vector>> ker(psi.size()), img(psi.size());
  std::size_t kdim = 0, idim = 0;
  for (std::size_t v = 0; v < psi.size(); ++v) {
    const std::size_t d = psi[v].rows();
    if (d == 0) continue;
    Matrix p = Matrix::identity(d);
    for (std::size_t k = 0; k < d; ++k) p = p * psi[v];
    ker[v] = left_nullspace(p);
    img[v] = row_space(p);
    kdim += ker[v].size();
    idim += img[v].size();
  }
  if (kdim == 0 || idim == 0) return std::nullopt;
  return Split{submodule(M, ker), submodule(M, img)};
}

void split_recursive(const AlgebraModule& M, std::mt19937_64& rng, std::vector<Summand>& out) {
  if (M.total_dim() == 0) return;
  const auto E = endomorphism_basis(M);
  if (E.size() == 1) {
    out.push_back(Summand{M, 1, true});
    return;
  }
  std::uniform_int_distribution<std::size_t> pick(0, E.size() - 1);
  std::uniform_int_distribution<int> terms(1, 3);
  std::uniform_int_distribution<int> coeff(-2, 1);
  for (int attempt = 0; attempt < kSplitAttempts; ++attempt) {
    std::vector<std::pair<std::size_t, int>> combo;
    const int t = terms(rng);
    for (int k = 0; k < t; ++k) {
      int c = coeff(rng);
      if (c >= 0) ++c;  // {-2, -1, 1, 2}
      combo.emplace_back(pick(rng), c);
    }
    const Endomorphism phi = combine(E, combo);
    for (const auto& lambda : rational_eigenvalues(phi)) {
      Endomorphism psi = phi;
      for (auto& block : psi) block = block - Matrix::identity(block.rows()).scaled(lambda);
      if (auto split = fitting_split(M, psi)) {
        split_recursive(split->kernel, rng, out);
        split_recursive(split->image, rng, out);
        return;
      }
    }
  }
  out.push_back(Summand{M, 1, top_dim(E) == 1});
}

}  // namespace

std::size_t endomorphism_top_dim(const AlgebraModule& M) { return top_dim(endomorphism_basis(M)); }

bool isomorphic(const AlgebraModule& a, const AlgebraModule& b, std::uint64_t seed) {
  if (a.n() != b.n() || a.dim_vector() != b.dim_vector()) return false;
  if (a.total_dim() == 0) return true;
  const auto H = hom_basis(a, b);
  if (H.empty()) return false;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<std::pair<std::size_t, int>> combo;
    for (std::size_t k = 0; k < H.size(); ++k) combo.emplace_back(k, coeff(rng));
    const Endomorphism f = combine(H, combo);
    if (std::all_of(f.begin(), f.end(), [](const Matrix& m) { return m.rows() == 0 || sgn(determinant(m)) != 0; })) {
      return true;
    }
  }
  return false;
}

std::vector<Summand> krull_schmidt_decompose(const IncidenceAlgebra& A, const AlgebraModule& M,
                                             std::uint64_t seed, Guard guard) {
  if (M.n() != A.n()) throw InputError("module and algebra have different n");
  if (M.total_dim() > kMaxModuleDim && !guard.override_limits) {
    throw ResourceError("module dimension " + std::to_string(M.total_dim()) + " exceeds the guard of 64");
  }
  std::mt19937_64 rng(seed);
  std::vector<Summand> pieces;
  split_recursive(M, rng, pieces);

  std::vector<Summand> grouped;
  for (auto& p : pieces) {
    auto it = std::find_if(grouped.begin(), grouped.end(), [&](const Summand& g) {
      return g.certified_local == p.certified_local && isomorphic(g.module, p.module, seed);
    });
    if (it != grouped.end()) {
      ++it->multiplicity;
    } else {
      grouped.push_back(std::move(p));
    }
  }
  std::sort(grouped.begin(), grouped.end(), [](const Summand& a, const Summand& b) {
    if (a.module.dim_vector() != b.module.dim_vector()) return a.module.dim_vector() > b.module.dim_vector();
    return a.multiplicity > b.multiplicity;
  });
  return grouped;
}

}  // namespace catx
