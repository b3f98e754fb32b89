#include "lieinv/symplectic.hpp"

#include <stdexcept>

namespace lieinv {

Scalar pfaffian(const RationalForm& w) {
  if (w.n() != 4 || w.degree() != 2)
    throw std::invalid_argument("pfaffian: expected a 2-form on a 4-dimensional algebra");
  auto a = [&](int i, int j) { return w.coefficient({i, j}); };
  return a(0, 1) * a(2, 3) - a(0, 2) * a(1, 3) + a(0, 3) * a(1, 2);
}

namespace {

std::vector<RationalForm> forms_from_rows(const RationalMatrix& rows, int n, int k) {
  std::vector<RationalForm> out;
  for (int r = 0; r < rows.rows(); ++r) {
    std::vector<Scalar> coeffs = rows.row(r);
    bool nonzero = false;
    for (const Scalar& c : coeffs)
      if (!is_zero(c)) nonzero = true;
    if (nonzero) out.push_back(RationalForm::from_coefficients(n, k, coeffs));
  }
  return out;
}

}  // namespace

std::vector<RationalForm> closed_two_form_basis(const LieAlgebra& g) {
  RationalMatrix d2 = ce_matrix(g, 2);
  auto kernel = d2.nullspace();
  if (kernel.empty()) return {};
  RationalMatrix rows = RationalMatrix::from_rows(kernel);
  rows.rref();  // canonical basis
  return forms_from_rows(rows, g.dim(), 2);
}

std::vector<RationalForm> exact_two_form_basis(const LieAlgebra& g) {
  RationalMatrix d1 = ce_matrix(g, 1);
  RationalMatrix rows = d1.transpose();  // rows = images of the basis 1-forms
  rows.rref();
  return forms_from_rows(rows, g.dim(), 2);
}

bool pfaffian_vanishes_on(const std::vector<RationalForm>& basis) {
  for (size_t i = 0; i < basis.size(); ++i) {
    if (!is_zero(pfaffian(basis[i]))) return false;
    for (size_t j = i + 1; j < basis.size(); ++j)
      if (!is_zero(pfaffian(basis[i] + basis[j]))) return false;
  }
  return true;
}

std::optional<RationalForm> nondegenerate_witness(const std::vector<RationalForm>& basis) {
  for (const RationalForm& b : basis)
    if (!is_zero(pfaffian(b))) return b;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) {
      RationalForm s = basis[i] + basis[j];
      if (!is_zero(pfaffian(s))) return s;
    }
  return std::nullopt;
}

std::optional<RationalForm> find_symplectic_form(const LieAlgebra& g) {
  return nondegenerate_witness(closed_two_form_basis(g));
}

std::optional<RationalForm> find_exact_symplectic_form(const LieAlgebra& g) {
  return nondegenerate_witness(exact_two_form_basis(g));
}

bool is_symplectic(const LieAlgebra& g, const RationalForm& w) {
  return is_closed(g, w) && !is_zero(pfaffian(w));
}

}  // namespace lieinv
