#include "lieinv/scalar.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace lieinv {

Scalar parse_rational(const std::string& text) {
  using Int = boost::multiprecision::cpp_int;
  auto trim = [](std::string s) {
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    if (a == std::string::npos) return std::string();
    return s.substr(a, b - a + 1);
  };
  std::string s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Scalar(Int(s));
    Int num(trim(s.substr(0, slash)));
    Int den(trim(s.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Scalar(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational literal: '" + text + "'");
  }
}

std::string to_string(const Scalar& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

std::string to_string(const GaussianScalar& z) {
  if (is_zero(z.im)) return to_string(z.re);
  std::string im_part;
  if (z.im == 1) im_part = "i";
  else if (z.im == -1) im_part = "-i";
  else im_part = to_string(z.im) + "*i";
  if (is_zero(z.re)) return im_part;
  if (z.im > 0) return to_string(z.re) + "+" + (z.im == 1 ? "i" : to_string(z.im) + "*i");
  return to_string(z.re) + "-" + (z.im == -1 ? "i" : to_string(-z.im) + "*i");
}

}  // namespace lieinv
