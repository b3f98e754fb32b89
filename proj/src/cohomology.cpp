#include "lieinv/cohomology.hpp"

namespace lieinv {

RationalMatrix ce_matrix(const LieAlgebra& g, int k) {
  const int n = g.dim();
  auto dom = kform_basis(n, k);
  auto cod = kform_basis(n, k + 1);
  RationalMatrix m(int(cod.size()), int(dom.size()));
  for (size_t c = 0; c < dom.size(); ++c) {
    auto img = ce_differential(g, RationalForm::basis_form(n, dom[c]));
    auto col = img.coefficient_vector();
    for (size_t r = 0; r < cod.size(); ++r) m(int(r), int(c)) = col[r];
  }
  return m;
}

bool is_closed(const LieAlgebra& g, const RationalForm& w) {
  return ce_differential(g, w).is_zero_form();
}

std::optional<RationalForm> exact_primitive(const LieAlgebra& g, const RationalForm& w) {
  int k = w.degree();
  if (k == 0) return w.is_zero_form() ? std::optional<RationalForm>(w) : std::nullopt;
  RationalMatrix d = ce_matrix(g, k - 1);
  auto sol = d.solve(w.coefficient_vector());
  if (!sol) return std::nullopt;
  return RationalForm::from_coefficients(g.dim(), k - 1, *sol);
}

CohomologySpace cohomology(const LieAlgebra& g, int k) {
  const int n = g.dim();
  CohomologySpace out;
  if (k < 0 || k > n) return out;

  std::vector<std::vector<Scalar>> kernel;
  if (k == n) {
    // top degree: everything is closed and Lambda^n is one-dimensional
    kernel.push_back({Scalar(1)});
  } else {
    kernel = ce_matrix(g, k).nullspace();
  }

  std::vector<std::vector<Scalar>> image;
  if (k > 0) {
    RationalMatrix d = ce_matrix(g, k - 1);
    RationalMatrix dt = d.transpose();  // rows = image generators
    auto piv = dt.rref();
    for (size_t r = 0; r < piv.size(); ++r) image.push_back(dt.row(int(r)));
  }

  out.betti = int(kernel.size() - image.size());
  // pick kernel vectors extending the image to a basis of ker d
  std::vector<std::vector<Scalar>> stack = image;
  for (const auto& v : kernel) {
    std::vector<std::vector<Scalar>> trial = stack;
    trial.push_back(v);
    if (rank_of_span(trial) > rank_of_span(stack)) {
      stack.push_back(v);
      out.representatives.push_back(RationalForm::from_coefficients(n, k, v));
    }
  }
  if (int(out.representatives.size()) != out.betti)
    throw std::logic_error("cohomology representative count mismatch");
  return out;
}

std::vector<int> betti_numbers(const LieAlgebra& g) {
  std::vector<int> b;
  for (int k = 0; k <= g.dim(); ++k) b.push_back(cohomology(g, k).betti);
  return b;
}

}  // namespace lieinv
