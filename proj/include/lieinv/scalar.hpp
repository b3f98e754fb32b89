#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace lieinv {

// Exact rational scalar. Every computation in the engine is exact; there is
// no floating point anywhere in the core.
using Scalar = boost::multiprecision::cpp_rational;

inline bool is_zero(const Scalar& x) { return x.is_zero(); }

// Parses "3", "-3", "1/2", "-7/4". Denominator must be nonzero.
Scalar parse_rational(const std::string& text);

std::string to_string(const Scalar& x);

// Exact Gaussian rational a + bi, the coefficient field for complexified
// Lie algebras and complex subalgebra data.
struct GaussianScalar {
  Scalar re;
  Scalar im;

  GaussianScalar() = default;
  GaussianScalar(Scalar r) : re(std::move(r)) {}  // NOLINT: implicit from real
  GaussianScalar(Scalar r, Scalar i) : re(std::move(r)), im(std::move(i)) {}
  GaussianScalar(int r) : re(r) {}  // NOLINT

  static GaussianScalar i() { return {Scalar(0), Scalar(1)}; }

  GaussianScalar conj() const { return {re, -im}; }
  Scalar norm2() const { return re * re + im * im; }

  friend GaussianScalar operator+(const GaussianScalar& a, const GaussianScalar& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianScalar operator-(const GaussianScalar& a, const GaussianScalar& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianScalar operator-(const GaussianScalar& a) { return {-a.re, -a.im}; }
  friend GaussianScalar operator*(const GaussianScalar& a, const GaussianScalar& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianScalar operator/(const GaussianScalar& a, const GaussianScalar& b) {
    Scalar n = b.norm2();
    if (is_zero(n)) throw std::domain_error("GaussianScalar: division by zero");
    GaussianScalar num = a * b.conj();
    return {num.re / n, num.im / n};
  }
  GaussianScalar& operator+=(const GaussianScalar& b) { return *this = *this + b; }
  GaussianScalar& operator-=(const GaussianScalar& b) { return *this = *this - b; }
  GaussianScalar& operator*=(const GaussianScalar& b) { return *this = *this * b; }

  friend bool operator==(const GaussianScalar& a, const GaussianScalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianScalar& a, const GaussianScalar& b) { return !(a == b); }
  friend bool operator<(const GaussianScalar& a, const GaussianScalar& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }
};

inline bool is_zero(const GaussianScalar& z) { return is_zero(z.re) && is_zero(z.im); }

std::string to_string(const GaussianScalar& z);

}  // namespace lieinv
