#include "lieinv/matrix.hpp"

namespace lieinv {

CongruenceResult congruence_diagonalize(const RationalMatrix& b) {
  const int n = b.rows();
  if (b.cols() != n) throw std::invalid_argument("congruence of non-square matrix");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (b(i, j) != b(j, i)) throw std::invalid_argument("matrix is not symmetric");

  RationalMatrix a = b;
  RationalMatrix p = RationalMatrix::identity(n);
  auto add_col = [&](RationalMatrix& m, int dst, int src, const Scalar& f) {
    for (int i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
  };
  auto add_row = [&](RationalMatrix& m, int dst, int src, const Scalar& f) {
    for (int j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
  };

  for (int k = 0; k < n; ++k) {
    if (is_zero(a(k, k))) {
      // try to pull a nonzero diagonal from below by a symmetric swap
      int sw = -1;
      for (int i = k + 1; i < n; ++i)
        if (!is_zero(a(i, i))) { sw = i; break; }
      if (sw >= 0) {
        for (int j = 0; j < n; ++j) std::swap(a(k, j), a(sw, j));
        for (int i = 0; i < n; ++i) std::swap(a(i, k), a(i, sw));
        for (int i = 0; i < n; ++i) std::swap(p(i, k), p(i, sw));
      } else {
        // all remaining diagonal entries are zero: use an off-diagonal entry
        int oi = -1, oj = -1;
        for (int i = k; i < n && oi < 0; ++i)
          for (int j = i + 1; j < n; ++j)
            if (!is_zero(a(i, j))) { oi = i; oj = j; break; }
        if (oi < 0) break;  // remaining block is zero
        // column_oi += column_oj (and symmetric row op) puts 2*a(oi,oj) on the diagonal
        add_col(a, oi, oj, Scalar(1));
        add_row(a, oi, oj, Scalar(1));
        add_col(p, oi, oj, Scalar(1));
        if (oi != k) {
          for (int j = 0; j < n; ++j) std::swap(a(k, j), a(oi, j));
          for (int i = 0; i < n; ++i) std::swap(a(i, k), a(i, oi));
          for (int i = 0; i < n; ++i) std::swap(p(i, k), p(i, oi));
        }
      }
    }
    if (is_zero(a(k, k))) continue;
    for (int j = k + 1; j < n; ++j) {
      if (is_zero(a(k, j))) continue;
      Scalar f = -a(k, j) / a(k, k);
      add_col(a, j, k, f);
      add_row(a, j, k, f);
      add_col(p, j, k, f);
    }
  }

  CongruenceResult res;
  res.diagonal.resize(n);
  for (int i = 0; i < n; ++i) res.diagonal[i] = a(i, i);
  res.transform = p;
  return res;
}

Signature signature_of(const RationalMatrix& symmetric) {
  CongruenceResult cr = congruence_diagonalize(symmetric);
  Signature s;
  for (const Scalar& d : cr.diagonal) {
    if (is_zero(d))
      ++s.zeros;
    else if (d > 0)
      ++s.positives;
    else
      ++s.negatives;
  }
  return s;
}

}  // namespace lieinv
