#include "lieinv/complex_structure.hpp"

#include <sstream>
#include <stdexcept>

namespace lieinv {

bool is_almost_complex(const RationalMatrix& j) {
  if (j.rows() != j.cols()) return false;
  RationalMatrix m = j * j + RationalMatrix::identity(j.rows());
  return m.is_zero_matrix();
}

std::vector<Scalar> nijenhuis(const LieAlgebra& g, const RationalMatrix& j,
                              const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
  std::vector<Scalar> jx = j.apply(x), jy = j.apply(y);
  std::vector<Scalar> out = g.bracket(jx, jy);
  std::vector<Scalar> b = g.bracket(x, y);
  std::vector<Scalar> m1 = j.apply(g.bracket(jx, y));
  std::vector<Scalar> m2 = j.apply(g.bracket(x, jy));
  for (int k = 0; k < g.dim(); ++k) out[k] = out[k] - b[k] - m1[k] - m2[k];
  return out;
}

bool is_integrable(const LieAlgebra& g, const RationalMatrix& j) {
  int n = g.dim();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      std::vector<Scalar> ea(n), eb(n);
      ea[a] = 1;
      eb[b] = 1;
      for (const Scalar& c : nijenhuis(g, j, ea, eb))
        if (!is_zero(c)) return false;
    }
  return true;
}

std::optional<std::pair<GaussianScalar, GaussianScalar>> subalgebra_certificate(
    const LieAlgebra& g, const GaussianVector& u, const GaussianVector& v) {
  GaussianVector w = g.bracket(u, v);
  GaussianMatrix m = GaussianMatrix::from_columns({u, v});
  if (m.rank() < 2) {
    // degenerate plane: closed iff [u,v] stays inside span{u,v}
    std::vector<GaussianVector> span = {u, v};
    if (!in_span(w, span)) return std::nullopt;
    auto x = m.solve(w);
    if (!x) return std::nullopt;
    return std::make_pair((*x)[0], (*x)[1]);
  }
  auto x = m.solve(w);
  if (!x) return std::nullopt;
  // m has full column rank, so the solve is exact only if consistent;
  // re-substitute to be safe.
  GaussianVector chk = m.apply(*x);
  for (size_t k = 0; k < w.size(); ++k)
    if (!is_zero(chk[k] - w[k])) return std::nullopt;
  return std::make_pair((*x)[0], (*x)[1]);
}

bool direct_sum_with_conjugate(const GaussianVector& u, const GaussianVector& v) {
  int n = int(u.size());
  std::vector<std::vector<Scalar>> rows(4, std::vector<Scalar>(n));
  for (int k = 0; k < n; ++k) {
    rows[0][k] = u[k].re;
    rows[1][k] = u[k].im;
    rows[2][k] = v[k].re;
    rows[3][k] = v[k].im;
  }
  return rank_of_span(rows) == 4;
}

std::optional<RationalMatrix> j_from_subalgebra(const GaussianVector& u,
                                                const GaussianVector& v) {
  if (!direct_sum_with_conjugate(u, v)) return std::nullopt;
  int n = int(u.size());
  // columns X1, Y1, X2, Y2 with U = X1 + iY1, V = X2 + iY2; U, V lie in the
  // -i eigenspace of the J that sends X -> Y on each pair, i.e.
  // J(X + iY) = -i(X + iY) means JX = Y, JY = -X.
  RationalMatrix b(n, 4);
  for (int k = 0; k < n; ++k) {
    b(k, 0) = u[k].re;
    b(k, 1) = u[k].im;
    b(k, 2) = v[k].re;
    b(k, 3) = v[k].im;
  }
  RationalMatrix kmat(4, 4);
  kmat(0, 1) = -1;
  kmat(1, 0) = 1;
  kmat(2, 3) = -1;
  kmat(3, 2) = 1;
  auto binv = b.inverse();
  if (!binv) return std::nullopt;
  return b * kmat * *binv;
}

ComplexSubalgebra subalgebra_from_j(const RationalMatrix& j) {
  if (!is_almost_complex(j)) throw std::invalid_argument("J^2 != -Id");
  int n = j.rows();
  // -i eigenspace over Q(i): kernel of J - (-i) Id = J + i Id
  GaussianMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      m(r, c) = GaussianScalar(j(r, c));
      if (r == c) m(r, c) += GaussianScalar::i();
    }
  auto basis = m.nullspace();
  if (basis.size() != 2) throw std::logic_error("eigenspace of J is not 2-dimensional");
  return ComplexSubalgebra{basis[0], basis[1]};
}

bool is_integrable_via_subalgebra(const LieAlgebra& g, const RationalMatrix& j) {
  ComplexSubalgebra q = subalgebra_from_j(j);
  return subalgebra_certificate(g, q.u, q.v).has_value();
}

bool is_abelian_structure(const LieAlgebra& g, const RationalMatrix& j) {
  int n = g.dim();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      std::vector<Scalar> ea(n), eb(n);
      ea[a] = 1;
      eb[b] = 1;
      std::vector<Scalar> lhs = g.bracket(j.apply(ea), j.apply(eb));
      std::vector<Scalar> rhs = g.bracket(ea, eb);
      for (int k = 0; k < n; ++k)
        if (!is_zero(lhs[k] - rhs[k])) return false;
    }
  return true;
}

bool is_biinvariant(const LieAlgebra& g, const RationalMatrix& j) {
  int n = g.dim();
  for (int a = 0; a < n; ++a) {
    std::vector<Scalar> ea(n);
    ea[a] = 1;
    RationalMatrix lhs = j * g.ad(ea);
    RationalMatrix rhs = g.ad(j.apply(ea));
    if (!((lhs - rhs).is_zero_matrix())) return false;
  }
  return true;
}

std::vector<GaussianScalar> default_coefficient_grid() {
  GaussianScalar i = GaussianScalar::i();
  GaussianScalar half{Scalar(1, 2), Scalar(1, 2)};
  GaussianScalar halfi{Scalar(0), Scalar(1, 2)};
  return {GaussianScalar(0), GaussianScalar(1), GaussianScalar(-1),
          i, -i, GaussianScalar(2) * i, GaussianScalar(-2) * i,
          halfi, -halfi, half, -half};
}

std::vector<ComplexSubalgebra> grid_search_subalgebras(const LieAlgebra& g,
                                                       const GridSearchOptions& opt) {
  std::vector<GaussianScalar> grid = opt.grid.empty() ? default_coefficient_grid() : opt.grid;
  int n = g.dim();
  if (n != 4) throw std::invalid_argument("grid search implemented for dimension 4");
  std::vector<ComplexSubalgebra> hits;
  long long seen = 0;
  // enumerate 2x4 reduced-echelon matrices by pivot pair (p0 < p1); free
  // entries run over the grid, pivot columns are fixed, entries left of the
  // pivot and in other pivots' columns are zero.
  for (int p0 = 0; p0 < n; ++p0) {
    for (int p1 = p0 + 1; p1 < n; ++p1) {
      std::vector<int> free0, free1;
      for (int c = p0 + 1; c < n; ++c)
        if (c != p1) free0.push_back(c);
      for (int c = p1 + 1; c < n; ++c) free1.push_back(c);
      int nf = int(free0.size() + free1.size());
      std::vector<size_t> idx(nf, 0);
      while (true) {
        if (++seen > opt.cap) throw std::runtime_error("grid search cap exceeded");
        GaussianVector u(n), v(n);
        u[p0] = GaussianScalar(1);
        v[p1] = GaussianScalar(1);
        for (size_t t = 0; t < free0.size(); ++t) u[free0[t]] = grid[idx[t]];
        for (size_t t = 0; t < free1.size(); ++t) v[free1[t]] = grid[idx[free0.size() + t]];
        if (direct_sum_with_conjugate(u, v) && subalgebra_certificate(g, u, v))
          hits.push_back(ComplexSubalgebra{u, v});
        int d = nf - 1;
        while (d >= 0 && ++idx[d] == grid.size()) idx[d--] = 0;
        if (d < 0) break;
      }
    }
  }
  return hits;
}

std::optional<RationalMatrix> find_complex_structure(const LieAlgebra& g,
                                                     const GridSearchOptions& opt) {
  for (const ComplexSubalgebra& q : grid_search_subalgebras(g, opt)) {
    auto j = j_from_subalgebra(q.u, q.v);
    if (j) return j;
  }
  return std::nullopt;
}

std::string to_string(const GaussianVector& v) {
  std::ostringstream out;
  bool first = true;
  for (size_t k = 0; k < v.size(); ++k) {
    if (is_zero(v[k])) continue;
    std::string coeff = to_string(v[k]);
    if (!first) out << " + ";
    if (coeff == "1")
      out << "e" << (k + 1);
    else
      out << "(" << coeff << ")*e" << (k + 1);
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace lieinv
