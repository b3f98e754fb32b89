#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "lieinv/scalar.hpp"

namespace lieinv {

// Lexicographically ordered strictly increasing k-tuples from {0..n-1};
// these index the basis e^{i1...ik} of Lambda^k.
std::vector<std::vector<int>> kform_basis(int n, int k);

// Sorts idx in place and returns the permutation sign, or 0 on a repeat.
int sort_index_sign(std::vector<int>& idx);

// Alternating k-form with exact coefficients, stored sparsely on sorted
// index tuples. F is Scalar or GaussianScalar.
template <class F>
class KForm {
 public:
  KForm(int n, int degree) : n_(n), degree_(degree) {}

  static KForm basis_form(int n, std::vector<int> idx) {
    KForm f(n, int(idx.size()));
    f.add(std::move(idx), F(1));
    return f;
  }

  int n() const { return n_; }
  int degree() const { return degree_; }
  const std::map<std::vector<int>, F>& terms() const { return c_; }

  bool is_zero_form() const { return c_.empty(); }

  // Adds coeff * e^{idx}; idx may be unsorted, repeats annihilate the term.
  void add(std::vector<int> idx, F coeff) {
    if (int(idx.size()) != degree_) throw std::invalid_argument("index arity mismatch");
    int s = sort_index_sign(idx);
    if (s == 0 || is_zero(coeff)) return;
    if (s < 0) coeff = -coeff;
    auto it = c_.find(idx);
    if (it == c_.end()) {
      c_.emplace(std::move(idx), std::move(coeff));
    } else {
      it->second += coeff;
      if (is_zero(it->second)) c_.erase(it);
    }
  }

  F coefficient(std::vector<int> idx) const {
    int s = sort_index_sign(idx);
    if (s == 0) return F(0);
    auto it = c_.find(idx);
    if (it == c_.end()) return F(0);
    return s < 0 ? -it->second : it->second;
  }

  KForm wedge(const KForm& other) const {
    KForm out(n_, degree_ + other.degree_);
    for (const auto& [ia, ca] : c_)
      for (const auto& [ib, cb] : other.c_) {
        std::vector<int> merged = ia;
        merged.insert(merged.end(), ib.begin(), ib.end());
        out.add(std::move(merged), ca * cb);
      }
    return out;
  }

  // omega(v_1, ..., v_k): each basis term contributes the minor determinant.
  F evaluate(const std::vector<std::vector<F>>& vectors) const {
    if (int(vectors.size()) != degree_) throw std::invalid_argument("wrong number of vectors");
    F total(0);
    for (const auto& [idx, coeff] : c_) {
      // det of the k x k matrix m[a][b] = vectors[a][idx[b]]
      int k = degree_;
      std::vector<int> perm(k);
      for (int i = 0; i < k; ++i) perm[i] = i;
      F det(0);
      do {
        int sign = 1;
        for (int a = 0; a < k; ++a)
          for (int b = a + 1; b < k; ++b)
            if (perm[a] > perm[b]) sign = -sign;
        F prod(sign);
        for (int a = 0; a < k; ++a) prod *= vectors[a][idx[perm[a]]];
        det += prod;
      } while (std::next_permutation(perm.begin(), perm.end()));
      total += coeff * det;
    }
    return total;
  }

  // Dense coefficient vector in kform_basis(n, degree) order.
  std::vector<F> coefficient_vector() const {
    auto basis = kform_basis(n_, degree_);
    std::vector<F> out(basis.size());
    for (size_t t = 0; t < basis.size(); ++t) {
      auto it = c_.find(basis[t]);
      if (it != c_.end()) out[t] = it->second;
    }
    return out;
  }

  static KForm from_coefficients(int n, int k, const std::vector<F>& coeffs) {
    auto basis = kform_basis(n, k);
    if (coeffs.size() != basis.size()) throw std::invalid_argument("coefficient vector length");
    KForm f(n, k);
    for (size_t t = 0; t < basis.size(); ++t)
      if (!is_zero(coeffs[t])) f.c_.emplace(basis[t], coeffs[t]);
    return f;
  }

  friend KForm operator+(const KForm& a, const KForm& b) {
    KForm out = a;
    for (const auto& [idx, coeff] : b.c_) out.add(idx, coeff);
    return out;
  }
  friend KForm operator-(const KForm& a, const KForm& b) {
    KForm out = a;
    for (const auto& [idx, coeff] : b.c_) out.add(idx, -coeff);
    return out;
  }
  friend KForm operator*(const F& s, const KForm& a) {
    KForm out(a.n_, a.degree_);
    for (const auto& [idx, coeff] : a.c_) out.add(idx, s * coeff);
    return out;
  }
  friend bool operator==(const KForm& a, const KForm& b) {
    return a.n_ == b.n_ && a.degree_ == b.degree_ && a.c_ == b.c_;
  }

  // "1*e12 + -3/2*e134" style; "0" for the zero form.
  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (const auto& [idx, coeff] : c_) {
      if (!out.empty()) out += " + ";
      out += to_string(coeff) + "*e";
      for (int i : idx) out += std::to_string(i + 1);
    }
    return out;
  }

 private:
  int n_, degree_;
  std::map<std::vector<int>, F> c_;
};

using RationalForm = KForm<Scalar>;
using GaussianForm = KForm<GaussianScalar>;

// Parses the str() format above (also accepts "e12 - e34", bare "e13",
// coefficients like "3/2" without "*"). degree is inferred; all terms must
// agree on arity.
RationalForm parse_form(const std::string& text, int n);

}  // namespace lieinv
