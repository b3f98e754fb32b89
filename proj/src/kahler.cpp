#include "lieinv/kahler.hpp"

#include <stdexcept>

namespace lieinv {

namespace {

std::vector<Scalar> basis_vec(int n, int k) {
  std::vector<Scalar> x(n);
  x[k] = 1;
  return x;
}

}  // namespace

bool is_compatible(const RationalForm& w, const RationalMatrix& j) {
  int n = w.n();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Scalar lhs = w.evaluate({j.apply(basis_vec(n, a)), j.apply(basis_vec(n, b))});
      if (lhs != w.coefficient({a, b})) return false;
    }
  return true;
}

std::vector<RationalForm> compatible_family(const LieAlgebra& g, const RationalMatrix& j) {
  if (!is_almost_complex(j)) throw std::invalid_argument("J^2 != -Id");
  int n = g.dim();
  std::vector<RationalForm> closed = closed_two_form_basis(g);
  if (closed.empty()) return {};
  // rows: for each basis pair (a,b), the linear functional
  // x -> sum_t x_t (B_t(Je_a, Je_b) - B_t(e_a, e_b))
  std::vector<std::vector<Scalar>> rows;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      std::vector<Scalar> row;
      row.reserve(closed.size());
      std::vector<Scalar> ja = j.apply(basis_vec(n, a));
      std::vector<Scalar> jb = j.apply(basis_vec(n, b));
      for (const RationalForm& f : closed)
        row.push_back(f.evaluate({ja, jb}) - f.coefficient({a, b}));
      rows.push_back(std::move(row));
    }
  auto kernel = RationalMatrix::from_rows(rows).nullspace();
  if (kernel.empty()) return {};
  // expand kernel coordinates to Lambda^2 coefficient vectors, canonicalize
  std::vector<std::vector<Scalar>> coeff_rows;
  for (const auto& x : kernel) {
    std::vector<Scalar> coeffs(kform_basis(n, 2).size());
    for (size_t t = 0; t < closed.size(); ++t) {
      if (is_zero(x[t])) continue;
      std::vector<Scalar> ct = closed[t].coefficient_vector();
      for (size_t s = 0; s < coeffs.size(); ++s) coeffs[s] += x[t] * ct[s];
    }
    coeff_rows.push_back(std::move(coeffs));
  }
  RationalMatrix m = RationalMatrix::from_rows(coeff_rows);
  m.rref();
  std::vector<RationalForm> out;
  for (int r = 0; r < m.rows(); ++r) {
    bool nonzero = false;
    for (const Scalar& c : m.row(r))
      if (!is_zero(c)) nonzero = true;
    if (nonzero) out.push_back(RationalForm::from_coefficients(n, 2, m.row(r)));
  }
  return out;
}

KahlerDecision kahler_decision(const LieAlgebra& g, const RationalMatrix& j) {
  KahlerDecision d;
  d.family = compatible_family(g, j);
  d.witness = nondegenerate_witness(d.family);
  if (!d.witness) {
    d.status = KahlerStatus::NONE;
    return d;
  }
  d.status = is_integrable(g, j) ? KahlerStatus::KAHLER : KahlerStatus::ALMOST_KAHLER;
  return d;
}

RationalMatrix metric_from(const RationalForm& w, const RationalMatrix& j) {
  int n = w.n();
  RationalMatrix phi(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      phi(a, b) = w.evaluate({basis_vec(n, a), j.apply(basis_vec(n, b))});
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (phi(a, b) != phi(b, a))
        throw std::invalid_argument("metric_from: form is not compatible with J");
  return phi;
}

Signature metric_signature(const RationalMatrix& phi) { return signature_of(phi); }

bool compatibility_transport_check(const LieAlgebra& g, const RationalMatrix& j1,
                                   const RationalMatrix& j2, const RationalMatrix& x,
                                   const RationalForm& w) {
  auto xinv = x.inverse();
  if (!xinv) throw std::invalid_argument("transport: x is singular");
  if (!g.is_automorphism(x)) throw std::invalid_argument("transport: x is not an automorphism");
  if (!((x * j1 - j2 * x).is_zero_matrix()))
    throw std::invalid_argument("transport: x does not intertwine J1 and J2");
  if (!is_compatible(w, j1))
    throw std::invalid_argument("transport: form is not compatible with J1");
  // transported form w~(X, Y) = w(x^-1 X, x^-1 Y) must be compatible with
  // J2 = x J1 x^-1; recomputed pointwise rather than assumed
  int n = w.n();
  RationalForm wt(n, 2);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      wt.add({a, b}, w.evaluate({xinv->column(a), xinv->column(b)}));
  return is_compatible(wt, j2);
}

}  // namespace lieinv
