#pragma once

#include <optional>

#include "lieinv/kform.hpp"
#include "lieinv/lie_algebra.hpp"

namespace lieinv {

// The differential of the cochain complex of a Lie algebra, as an
// antiderivation: on 1-forms  d e^m = -sum_{i<j} c^m_{ij} e^i ^ e^j,
// extended to higher degree by the graded Leibniz rule.
template <class F>
KForm<F> ce_differential(const LieAlgebra& g, const KForm<F>& w) {
  const int n = g.dim();
  KForm<F> out(n, w.degree() + 1);
  for (const auto& [idx, coeff] : w.terms()) {
    for (size_t t = 0; t < idx.size(); ++t) {
      int m = idx[t];
      // rest = e^{idx \ m}, inserted after d e^m with sign (-1)^t
      std::vector<int> rest;
      for (size_t s = 0; s < idx.size(); ++s)
        if (s != t) rest.push_back(idx[s]);
      int sgn_t = (t % 2 == 0) ? 1 : -1;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          const Scalar& c = g.c(i, j, m);
          if (is_zero(c)) continue;
          std::vector<int> merged = {i, j};
          merged.insert(merged.end(), rest.begin(), rest.end());
          out.add(std::move(merged), F(Scalar(-sgn_t) * c) * coeff);
        }
    }
  }
  return out;
}

// Independent pointwise definition of the same differential:
//   (dw)(X_0..X_k) = sum_{i<j} (-1)^{i+j} w([X_i,X_j], X_0..^i..^j..X_k).
// Used to cross-check ce_differential, never derived from it.
template <class F>
F ce_differential_pointwise(const LieAlgebra& g, const KForm<F>& w,
                            const std::vector<std::vector<F>>& vectors) {
  const int k1 = int(vectors.size());  // degree + 1 arguments
  if (k1 != w.degree() + 1) throw std::invalid_argument("argument count mismatch");
  F total(0);
  for (int i = 0; i < k1; ++i)
    for (int j = i + 1; j < k1; ++j) {
      std::vector<std::vector<F>> args;
      args.push_back(g.bracket(vectors[i], vectors[j]));
      for (int t = 0; t < k1; ++t)
        if (t != i && t != j) args.push_back(vectors[t]);
      F val = w.evaluate(args);
      total += ((i + j) % 2 == 0) ? val : -val;
    }
  return total;
}

// Matrix of d : Lambda^k -> Lambda^{k+1} in the kform_basis orderings.
RationalMatrix ce_matrix(const LieAlgebra& g, int k);

bool is_closed(const LieAlgebra& g, const RationalForm& w);
// Primitive of w if w is exact, std::nullopt otherwise.
std::optional<RationalForm> exact_primitive(const LieAlgebra& g, const RationalForm& w);

struct CohomologySpace {
  int betti = 0;
  std::vector<RationalForm> representatives;  // closed, independent mod exact
};

CohomologySpace cohomology(const LieAlgebra& g, int k);
std::vector<int> betti_numbers(const LieAlgebra& g);  // b_0 .. b_n

}  // namespace lieinv
