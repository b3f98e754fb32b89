#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lieinv/matrix.hpp"
#include "lieinv/scalar.hpp"

namespace lieinv {

// Finite-dimensional real Lie algebra given by structure constants:
// [e_i, e_j] = sum_k c^k_{ij} e_k, stored for i < j only (0-based indices).
class LieAlgebra {
 public:
  // brackets maps (i, j) with i < j to the coefficient list of [e_i, e_j].
  LieAlgebra(int dim, std::map<std::pair<int, int>, std::vector<Scalar>> brackets,
             std::string name = "");

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }

  // c^k_{ij} for i <= j (only that triangle is stored).
  const Scalar& c(int i, int j, int k) const;

  // [x, y] by bilinear extension; works over Scalar and GaussianScalar
  // (the latter is the complexified bracket).
  template <class F>
  std::vector<F> bracket(const std::vector<F>& x, const std::vector<F>& y) const {
    std::vector<F> out(dim_);
    for (int i = 0; i < dim_; ++i) {
      if (is_zero(x[i])) continue;
      for (int j = 0; j < dim_; ++j) {
        if (i == j || is_zero(y[j])) continue;
        F f = x[i] * y[j];
        for (int k = 0; k < dim_; ++k) {
          const Scalar& ck = c(std::min(i, j), std::max(i, j), k);
          if (is_zero(ck)) continue;
          out[k] += F(i < j ? ck : -ck) * f;
        }
      }
    }
    return out;
  }

  std::vector<Scalar> bracket_basis(int i, int j) const;

  // Largest violation-free check: returns all nonzero Jacobi cyclic sums.
  // Empty result means the constants define a Lie algebra.
  std::vector<std::string> jacobi_defects() const;
  bool satisfies_jacobi() const { return jacobi_defects().empty(); }

  // Matrix of ad_x, columns ad_x(e_j).
  RationalMatrix ad(const std::vector<Scalar>& x) const;

  // Basis (reduced echelon rows) of [g, g].
  std::vector<std::vector<Scalar>> derived_subalgebra() const;

  bool is_unimodular() const;  // trace ad_x = 0 for all x

  // Does the invertible matrix p satisfy p[x,y] = [px, py]?
  bool is_automorphism(const RationalMatrix& p) const;

 private:
  int dim_;
  std::string name_;
  std::vector<Scalar> c_;  // c_[ (i*dim+j)*dim + k ] for i < j
  Scalar zero_;
};

// Text format, one algebra per file:
//   dim 4
//   [1,2] = 1*3
//   [1,4] = 1/2*1 , -1*2
// 1-based indices; right side lists coeff*basis terms. Unlisted brackets
// vanish. Duplicate (i,j) or (j,i) lines are an error. Throws
// std::runtime_error with a line number on malformed input.
LieAlgebra parse_lie_algebra(std::istream& in, const std::string& name = "");
LieAlgebra parse_lie_algebra_file(const std::string& path);

}  // namespace lieinv
