#include "lieinv/lie_algebra.hpp"

#include <fstream>
#include <sstream>

namespace lieinv {

LieAlgebra::LieAlgebra(int dim, std::map<std::pair<int, int>, std::vector<Scalar>> brackets,
                       std::string name)
    : dim_(dim), name_(std::move(name)), c_(size_t(dim) * dim * dim) {
  if (dim <= 0) throw std::invalid_argument("dimension must be positive");
  for (auto& [ij, coeffs] : brackets) {
    auto [i, j] = ij;
    if (i < 0 || j < 0 || i >= dim || j >= dim || i >= j)
      throw std::invalid_argument("bracket indices must satisfy 0 <= i < j < dim");
    if (int(coeffs.size()) != dim) throw std::invalid_argument("bracket coefficient length");
    for (int k = 0; k < dim; ++k) c_[(size_t(i) * dim + j) * dim + k] = coeffs[k];
  }
}

const Scalar& LieAlgebra::c(int i, int j, int k) const {
  if (i == j) return zero_;
  if (i < j) return c_[(size_t(i) * dim_ + j) * dim_ + k];
  // only the i<j triangle is stored; use bracket_basis() for either order
  throw std::invalid_argument("c(i,j,k) requires i <= j; use bracket_basis() otherwise");
}

std::vector<Scalar> LieAlgebra::bracket_basis(int i, int j) const {
  std::vector<Scalar> out(dim_);
  if (i == j) return out;
  int a = std::min(i, j), b = std::max(i, j);
  for (int k = 0; k < dim_; ++k) {
    out[k] = c(a, b, k);
    if (i > j) out[k] = -out[k];
  }
  return out;
}

std::vector<std::string> LieAlgebra::jacobi_defects() const {
  std::vector<std::string> defects;
  auto basis = [&](int i) {
    std::vector<Scalar> v(dim_);
    v[i] = 1;
    return v;
  };
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = j + 1; k < dim_; ++k) {
        std::vector<Scalar> sum(dim_);
        auto acc = [&](int a, int b, int c3) {
          auto inner = bracket_basis(b, c3);
          auto outer = bracket(basis(a), inner);
          for (int t = 0; t < dim_; ++t) sum[t] += outer[t];
        };
        acc(i, j, k);
        acc(j, k, i);
        acc(k, i, j);
        bool bad = false;
        for (const Scalar& s : sum)
          if (!is_zero(s)) bad = true;
        if (bad) {
          std::ostringstream os;
          os << "jacobi(" << i + 1 << "," << j + 1 << "," << k + 1 << ") = [";
          for (int t = 0; t < dim_; ++t) os << (t ? ", " : "") << to_string(sum[t]);
          os << "]";
          defects.push_back(os.str());
        }
      }
  return defects;
}

RationalMatrix LieAlgebra::ad(const std::vector<Scalar>& x) const {
  RationalMatrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    std::vector<Scalar> ej(dim_);
    ej[j] = 1;
    auto col = bracket(x, ej);
    for (int i = 0; i < dim_; ++i) m(i, j) = col[i];
  }
  return m;
}

std::vector<std::vector<Scalar>> LieAlgebra::derived_subalgebra() const {
  std::vector<std::vector<Scalar>> gens;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j) {
      auto v = bracket_basis(i, j);
      bool nz = false;
      for (const Scalar& s : v)
        if (!is_zero(s)) nz = true;
      if (nz) gens.push_back(std::move(v));
    }
  if (gens.empty()) return {};
  auto m = RationalMatrix::from_rows(gens);
  auto piv = m.rref();
  std::vector<std::vector<Scalar>> basis;
  for (size_t r = 0; r < piv.size(); ++r) basis.push_back(m.row(int(r)));
  return basis;
}

bool LieAlgebra::is_unimodular() const {
  for (int i = 0; i < dim_; ++i) {
    std::vector<Scalar> ei(dim_);
    ei[i] = 1;
    RationalMatrix a = ad(ei);
    Scalar tr = 0;
    for (int k = 0; k < dim_; ++k) tr += a(k, k);
    if (!is_zero(tr)) return false;
  }
  return true;
}

bool LieAlgebra::is_automorphism(const RationalMatrix& p) const {
  if (p.rows() != dim_ || p.cols() != dim_ || !p.inverse().has_value()) return false;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j) {
      auto lhs = p.apply(bracket_basis(i, j));
      auto rhs = bracket(p.column(i), p.column(j));
      if (lhs != rhs) return false;
    }
  return true;
}

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw std::runtime_error("line " + std::to_string(line) + ": " + msg);
}

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

LieAlgebra parse_lie_algebra(std::istream& in, const std::string& name) {
  int dim = -1;
  std::map<std::pair<int, int>, std::vector<Scalar>> brackets;
  std::map<std::pair<int, int>, int> seen_line;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip(raw);
    if (size_t h = line.find('#'); h != std::string::npos) line = strip(line.substr(0, h));
    if (line.empty()) continue;
    if (line.rfind("dim", 0) == 0) {
      if (dim != -1) fail(lineno, "duplicate dim line");
      try {
        dim = std::stoi(strip(line.substr(3)));
      } catch (...) {
        fail(lineno, "unreadable dimension");
      }
      if (dim <= 0) fail(lineno, "dimension must be positive");
      continue;
    }
    if (dim == -1) fail(lineno, "bracket before dim line");
    // [i,j] = q*k , q*k , ...
    size_t lb = line.find('['), comma = line.find(','), rb = line.find(']'),
           eq = line.find('=');
    if (lb != 0 || comma == std::string::npos || rb == std::string::npos ||
        eq == std::string::npos || !(lb < comma && comma < rb && rb < eq))
      fail(lineno, "expected \"[i,j] = coeff*k, ...\"");
    int i, j;
    try {
      i = std::stoi(strip(line.substr(lb + 1, comma - lb - 1)));
      j = std::stoi(strip(line.substr(comma + 1, rb - comma - 1)));
    } catch (...) {
      fail(lineno, "unreadable bracket indices");
    }
    if (i < 1 || j < 1 || i > dim || j > dim) fail(lineno, "bracket index out of range");
    if (i == j) fail(lineno, "bracket of a basis vector with itself");
    bool flip = i > j;
    std::pair<int, int> key{std::min(i, j) - 1, std::max(i, j) - 1};
    if (seen_line.count(key))
      fail(lineno, "bracket [" + std::to_string(i) + "," + std::to_string(j) +
                       "] already given on line " + std::to_string(seen_line[key]));
    seen_line[key] = lineno;
    std::vector<Scalar> coeffs(dim);
    std::string rhs = strip(line.substr(eq + 1));
    if (rhs != "0") {
      std::istringstream terms(rhs);
      std::string term;
      while (std::getline(terms, term, ',')) {
        term = strip(term);
        size_t star = term.find('*');
        if (star == std::string::npos) fail(lineno, "term \"" + term + "\" needs coeff*index");
        Scalar q;
        int k;
        try {
          q = parse_rational(term.substr(0, star));
          k = std::stoi(strip(term.substr(star + 1)));
        } catch (...) {
          fail(lineno, "unreadable term \"" + term + "\"");
        }
        if (k < 1 || k > dim) fail(lineno, "basis index out of range in \"" + term + "\"");
        coeffs[k - 1] += flip ? -q : q;
      }
    }
    brackets[key] = std::move(coeffs);
  }
  if (dim == -1) throw std::runtime_error("missing dim line");
  return LieAlgebra(dim, std::move(brackets), name);
}

LieAlgebra parse_lie_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_lie_algebra(in, path);
}

}  // namespace lieinv
