#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lieinv/scalar.hpp"

namespace lieinv {

// Dense exact matrix over Scalar or GaussianScalar. Gaussian elimination with
// first-nonzero pivoting; every result re-substitutes to exact zero.
template <class F>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<F>>& rows) {
    if (rows.empty()) return Matrix(0, 0);
    Matrix m(int(rows.size()), int(rows[0].size()));
    for (int i = 0; i < m.rows_; ++i) {
      if (int(rows[i].size()) != m.cols_) throw std::invalid_argument("ragged rows");
      for (int j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix from_columns(const std::vector<std::vector<F>>& cols) {
    if (cols.empty()) return Matrix(0, 0);
    Matrix m(int(cols[0].size()), int(cols.size()));
    for (int j = 0; j < m.cols_; ++j) {
      if (int(cols[j].size()) != m.rows_) throw std::invalid_argument("ragged columns");
      for (int i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  F& operator()(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  const F& operator()(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

  std::vector<F> row(int i) const {
    std::vector<F> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }
  std::vector<F> column(int j) const {
    std::vector<F> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
    Matrix c = a;
    for (size_t t = 0; t < c.e_.size(); ++t) c.e_[t] = c.e_[t] + b.e_[t];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
    Matrix c = a;
    for (size_t t = 0; t < c.e_.size(); ++t) c.e_[t] = c.e_[t] - b.e_[t];
    return c;
  }
  friend Matrix operator*(const F& s, const Matrix& a) {
    Matrix c = a;
    for (auto& x : c.e_) x = s * x;
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  std::vector<F> apply(const std::vector<F>& v) const {
    if (int(v.size()) != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<F> out(rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!is_zero((*this)(i, j))) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  bool is_zero_matrix() const {
    for (const auto& x : e_)
      if (!is_zero(x)) return false;
    return true;
  }

  // In-place reduced row echelon form; returns pivot column indices.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int p = -1;
      for (int i = r; i < rows_; ++i)
        if (!is_zero((*this)(i, c))) { p = i; break; }
      if (p < 0) continue;
      if (p != r)
        for (int j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
      F inv = F(1) / (*this)(r, c);
      for (int j = 0; j < cols_; ++j) (*this)(r, j) = inv * (*this)(r, j);
      for (int i = 0; i < rows_; ++i) {
        if (i == r || is_zero((*this)(i, c))) continue;
        F f = (*this)(i, c);
        for (int j = 0; j < cols_; ++j) (*this)(i, j) = (*this)(i, j) - f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  int rank() const {
    Matrix m = *this;
    return int(m.rref().size());
  }

  // Basis of {v : Mv = 0}; list length is cols - rank.
  std::vector<std::vector<F>> nullspace() const {
    Matrix m = *this;
    std::vector<int> piv = m.rref();
    std::vector<bool> is_piv(cols_, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<std::vector<F>> basis;
    for (int c = 0; c < cols_; ++c) {
      if (is_piv[c]) continue;
      std::vector<F> v(cols_);
      v[c] = F(1);
      for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(int(r), c);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // One solution of Mx = b, if consistent.
  std::optional<std::vector<F>> solve(const std::vector<F>& b) const {
    if (int(b.size()) != rows_) throw std::invalid_argument("rhs length mismatch");
    Matrix aug(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_) = b[i];
    }
    std::vector<int> piv = aug.rref();
    if (!piv.empty() && piv.back() == cols_) return std::nullopt;  // inconsistent
    std::vector<F> x(cols_);
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(int(r), cols_);
    return x;
  }

  std::optional<Matrix> inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    Matrix aug(rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_ + i) = F(1);
    }
    std::vector<int> piv = aug.rref();
    if (int(piv.size()) != rows_ || piv.back() != rows_ - 1) return std::nullopt;
    Matrix inv(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
    return inv;
  }

 private:
  int rows_, cols_;
  std::vector<F> e_;
};

using RationalMatrix = Matrix<Scalar>;
using GaussianMatrix = Matrix<GaussianScalar>;

template <class F>
int rank_of_span(const std::vector<std::vector<F>>& vectors) {
  if (vectors.empty()) return 0;
  return Matrix<F>::from_rows(vectors).rank();
}

template <class F>
bool in_span(const std::vector<F>& v, const std::vector<std::vector<F>>& basis) {
  std::vector<std::vector<F>> all = basis;
  all.push_back(v);
  return rank_of_span(all) == rank_of_span(basis);
}

template <class F>
bool same_span(const std::vector<std::vector<F>>& a, const std::vector<std::vector<F>>& b) {
  std::vector<std::vector<F>> both = a;
  both.insert(both.end(), b.begin(), b.end());
  int ra = rank_of_span(a), rb = rank_of_span(b);
  return ra == rb && rank_of_span(both) == ra;
}

struct CongruenceResult {
  std::vector<Scalar> diagonal;        // entries of D = P^T B P
  RationalMatrix transform;            // P, invertible
};

// Diagonalizes a symmetric bilinear form by congruence, P^T B P = D.
CongruenceResult congruence_diagonalize(const RationalMatrix& b);

struct Signature {
  int positives = 0, negatives = 0, zeros = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

Signature signature_of(const RationalMatrix& symmetric);

}  // namespace lieinv
