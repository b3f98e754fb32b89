#include "lieinv/expr.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lieinv {

Poly::Poly(GaussianScalar c) {
  if (!lieinv::is_zero(c)) terms_[{}] = std::move(c);
}

Poly Poly::variable(const std::string& name) {
  Poly p;
  p.terms_[{name}] = GaussianScalar(1);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

GaussianScalar Poly::constant_value() const {
  if (terms_.empty()) return GaussianScalar(0);
  if (!is_constant()) throw std::logic_error("Poly is not constant: " + str());
  return terms_.begin()->second;
}

void Poly::add_term(Monomial m, const GaussianScalar& c) {
  if (lieinv::is_zero(c)) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), c);
  } else {
    it->second += c;
    if (lieinv::is_zero(it->second)) terms_.erase(it);
  }
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
  return out;
}

Poly operator-(const Poly& a) {
  Poly out;
  for (const auto& [m, c] : a.terms_) out.terms_[m] = -c;
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Poly::Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      std::sort(m.begin(), m.end());
      out.add_term(std::move(m), ca * cb);
    }
  return out;
}

std::vector<std::string> Poly::variables() const {
  std::set<std::string> vars;
  for (const auto& [m, c] : terms_) vars.insert(m.begin(), m.end());
  return {vars.begin(), vars.end()};
}

namespace {

// base variable of an atomic symbol: "Re(x)" -> x, plain name -> itself
bool split_re_im(const std::string& var, std::string& base, bool& want_re) {
  if (var.size() > 4 && var.back() == ')' &&
      (var.compare(0, 3, "Re(") == 0 || var.compare(0, 3, "Im(") == 0)) {
    base = var.substr(3, var.size() - 4);
    want_re = var[0] == 'R';
    return true;
  }
  return false;
}

}  // namespace

GaussianScalar Poly::evaluate(const std::map<std::string, GaussianScalar>& assignment) const {
  GaussianScalar total(0);
  for (const auto& [m, c] : terms_) {
    GaussianScalar prod = c;
    for (const std::string& var : m) {
      std::string base;
      bool want_re = false;
      GaussianScalar value;
      if (split_re_im(var, base, want_re)) {
        auto it = assignment.find(base);
        if (it == assignment.end())
          throw std::invalid_argument("unassigned variable: " + base);
        value = GaussianScalar(want_re ? it->second.re : it->second.im);
      } else {
        auto it = assignment.find(var);
        if (it == assignment.end())
          throw std::invalid_argument("unassigned variable: " + var);
        value = it->second;
      }
      prod *= value;
    }
    total += prod;
  }
  return total;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    std::string coeff = to_string(c);
    if (m.empty()) {
      out << coeff;
      continue;
    }
    if (coeff != "1") out << "(" << coeff << ")*";
    for (size_t k = 0; k < m.size(); ++k) {
      if (k) out << "*";
      out << m[k];
    }
  }
  return out.str();
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  Poly parse_expression() {
    Poly p = parse_term();
    for (;;) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        p = p + parse_term();
      } else if (peek() == '-' && !at_comparison()) {
        ++pos_;
        p = p - parse_term();
      } else {
        return p;
      }
    }
  }

  void expect_end() {
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
  }

  bool consume(const std::string& token) {
    skip_ws();
    if (s_.compare(pos_, token.size(), token) == 0) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  bool at_end() {
    skip_ws();
    return pos_ == s_.size();
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error at position " + std::to_string(pos_) + " of '" +
                                s_ + "': " + what);
  }

 private:
  Poly parse_term() {
    Poly p = parse_factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        p = p * parse_factor();
      } else {
        return p;
      }
    }
  }

  Poly parse_factor() {
    skip_ws();
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -parse_factor();
    }
    if (c == '(') {
      ++pos_;
      Poly p = parse_expression();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly(GaussianScalar(parse_number()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = parse_identifier();
      if (name == "i") return Poly(GaussianScalar::i());
      if ((name == "Re" || name == "Im")) {
        skip_ws();
        if (peek() == '(') {
          ++pos_;
          skip_ws();
          std::string inner = parse_identifier();
          skip_ws();
          if (peek() != ')') fail("expected ')' after " + name + "(");
          ++pos_;
          return Poly::variable(name + "(" + inner + ")");
        }
      }
      return Poly::variable(name);
    }
    fail("expected a factor");
  }

  Scalar parse_number() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        fail("expected denominator digits");
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    return parse_rational(s_.substr(start, pos_ - start));
  }

  std::string parse_identifier() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
            s_[pos_] == '\''))
      ++pos_;
    if (pos_ == start) fail("expected an identifier");
    return s_.substr(start, pos_ - start);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  bool at_comparison() const {
    return s_.compare(pos_, 2, "==") == 0 || s_.compare(pos_, 2, "!=") == 0;
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text) {
  Parser p(text);
  Poly out = p.parse_expression();
  p.expect_end();
  return out;
}

bool Condition::evaluate(const std::map<std::string, GaussianScalar>& assignment) const {
  for (const Clause& cl : clauses) {
    bool zero = is_zero(cl.lhs.evaluate(assignment));
    if (cl.nonzero == zero) return false;
  }
  return true;
}

std::vector<std::string> Condition::variables() const {
  std::set<std::string> vars;
  for (const Clause& cl : clauses)
    for (const std::string& v : cl.lhs.variables()) vars.insert(v);
  return {vars.begin(), vars.end()};
}

Condition parse_condition(const std::string& text) {
  Condition cond;
  Parser p(text);
  if (p.at_end()) return cond;
  for (;;) {
    Condition::Clause cl;
    cl.lhs = p.parse_expression();
    if (p.consume("!="))
      cl.nonzero = true;
    else if (p.consume("=="))
      cl.nonzero = false;
    else
      p.fail("expected '!=' or '=='");
    Poly rhs = p.parse_expression();
    cl.lhs = cl.lhs - rhs;
    cond.clauses.push_back(std::move(cl));
    if (p.at_end()) return cond;
    if (!p.consume("and")) p.fail("expected 'and'");
  }
}

std::vector<GaussianScalar> VectorTemplate::evaluate(
    const std::map<std::string, GaussianScalar>& assignment) const {
  std::vector<GaussianScalar> out;
  out.reserve(components.size());
  for (const Poly& p : components) out.push_back(p.evaluate(assignment));
  return out;
}

std::vector<std::string> VectorTemplate::variables() const {
  std::set<std::string> vars;
  for (const Poly& p : components)
    for (const std::string& v : p.variables()) vars.insert(v);
  return {vars.begin(), vars.end()};
}

VectorTemplate parse_vector_template(const std::string& text, int dim) {
  Poly whole = parse_poly(text);
  VectorTemplate out;
  out.components.assign(dim, Poly());
  for (const auto& [m, c] : whole.terms()) {
    int basis_index = -1;
    Poly::Monomial rest;
    for (const std::string& var : m) {
      int idx = -1;
      if (var.size() >= 2 && var[0] == 'e') {
        bool digits = true;
        for (size_t k = 1; k < var.size(); ++k)
          if (!std::isdigit(static_cast<unsigned char>(var[k]))) digits = false;
        if (digits) idx = std::stoi(var.substr(1)) - 1;
      }
      if (idx >= 0) {
        if (idx >= dim)
          throw std::invalid_argument("basis vector out of range in '" + text + "': " + var);
        if (basis_index >= 0)
          throw std::invalid_argument("term not linear in basis vectors: '" + text + "'");
        basis_index = idx;
      } else {
        rest.push_back(var);
      }
    }
    if (basis_index < 0)
      throw std::invalid_argument("term without a basis vector in '" + text + "'");
    Poly mono;
    mono = Poly(c);
    for (const std::string& var : rest) mono = mono * Poly::variable(var);
    out.components[basis_index] = out.components[basis_index] + mono;
  }
  return out;
}

}  // namespace lieinv
