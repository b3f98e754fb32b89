#pragma once

#include <map>
#include <string>
#include <vector>

#include "lieinv/scalar.hpp"

namespace lieinv {

// Multivariate polynomial over Q(i). Monomials are multisets of variable
// names; a variable may itself be an atomic "Re(x)" or "Im(x)" symbol, which
// evaluates to the real or imaginary part of x's assigned value.
class Poly {
 public:
  using Monomial = std::vector<std::string>;  // sorted with repetition

  Poly() = default;
  explicit Poly(GaussianScalar c);
  static Poly variable(const std::string& name);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  GaussianScalar constant_value() const;  // throws unless constant

  const std::map<Monomial, GaussianScalar>& terms() const { return terms_; }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  std::vector<std::string> variables() const;

  // Substitutes every variable and returns the value. "Re(x)"/"Im(x)" read
  // from x's assignment. Throws std::invalid_argument on a missing variable.
  GaussianScalar evaluate(const std::map<std::string, GaussianScalar>& assignment) const;

  std::string str() const;

 private:
  std::map<Monomial, GaussianScalar> terms_;
  void add_term(Monomial m, const GaussianScalar& c);
  friend Poly parse_poly(const std::string&);
};

// Grammar: expr = term (('+'|'-') term)*, term = factor ('*' factor)*,
// factor = rational | 'i' | identifier | 'Re(' id ')' | 'Im(' id ')'
//        | '(' expr ')' | '-' factor.
// Throws std::invalid_argument with position info on malformed input.
Poly parse_poly(const std::string& text);

// Conjunction of (in)equations "p != 0" / "p == 0" joined by "and";
// the empty string is the always-true condition.
struct Condition {
  struct Clause {
    Poly lhs;
    bool nonzero = true;  // true: lhs != 0, false: lhs == 0
  };
  std::vector<Clause> clauses;

  bool evaluate(const std::map<std::string, GaussianScalar>& assignment) const;
  std::vector<std::string> variables() const;
};

Condition parse_condition(const std::string& text);

// Linear combination of basis vectors e1..e<dim> with Poly coefficients,
// e.g. "e1 + a1*e3 + (1-i)*e4". Coefficients may involve free variables.
struct VectorTemplate {
  std::vector<Poly> components;  // length dim

  std::vector<GaussianScalar> evaluate(
      const std::map<std::string, GaussianScalar>& assignment) const;
  std::vector<std::string> variables() const;
};

VectorTemplate parse_vector_template(const std::string& text, int dim);

}  // namespace lieinv
