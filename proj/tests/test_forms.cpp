#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lieinv/kform.hpp"

using namespace lieinv;

namespace {
std::vector<Scalar> ev(int k) {
  std::vector<Scalar> v(4);
  v[k - 1] = 1;
  return v;
}
RationalForm bf(std::vector<int> idx) {  // 1-based convenience
  for (int& i : idx) --i;
  return RationalForm::basis_form(4, idx);
}
}  // namespace

TEST_CASE("basis sizes are binomial coefficients") {
  CHECK(kform_basis(4, 0).size() == 1);
  CHECK(kform_basis(4, 1).size() == 4);
  CHECK(kform_basis(4, 2).size() == 6);
  CHECK(kform_basis(4, 3).size() == 4);
  CHECK(kform_basis(4, 4).size() == 1);
  CHECK(kform_basis(4, 5).empty());
}

TEST_CASE("index sorting sign") {
  std::vector<int> a{2, 0};
  CHECK(sort_index_sign(a) == -1);
  CHECK(a == std::vector<int>{0, 2});
  std::vector<int> b{2, 0, 1};
  CHECK(sort_index_sign(b) == 1);
  std::vector<int> c{1, 1};
  CHECK(sort_index_sign(c) == 0);
}

TEST_CASE("wedge is graded commutative and nilpotent on 1-forms") {
  auto e1 = bf({1}), e2 = bf({2});
  CHECK(e1.wedge(e2) == bf({1, 2}));
  CHECK(e2.wedge(e1) == Scalar(-1) * bf({1, 2}));
  CHECK(e1.wedge(e1).is_zero_form());
  // 2-forms commute with each other
  auto a = bf({1, 2}), b = bf({3, 4});
  CHECK(a.wedge(b) == b.wedge(a));
  CHECK(a.wedge(b) == bf({1, 2, 3, 4}));
}

TEST_CASE("adding with unsorted indices tracks the sign") {
  RationalForm f(4, 2);
  f.add({1, 0}, Scalar(3));  // 3 e^{21} = -3 e^{12}
  CHECK(f.coefficient({0, 1}) == Scalar(-3));
  CHECK(f.coefficient({1, 0}) == Scalar(3));
  f.add({0, 1}, Scalar(3));
  CHECK(f.is_zero_form());
}

TEST_CASE("evaluation is the determinant of the chosen components") {
  auto w = bf({1, 2});
  CHECK(w.evaluate({ev(1), ev(2)}) == Scalar(1));
  CHECK(w.evaluate({ev(2), ev(1)}) == Scalar(-1));
  CHECK(is_zero(w.evaluate({ev(1), ev(3)})));
  // omega = e^{12} + 2 e^{34} on (e1 + e3, e2 + e4) gives 1 + 2
  auto w2 = bf({1, 2}) + Scalar(2) * bf({3, 4});
  std::vector<Scalar> x{1, 0, 1, 0}, y{0, 1, 0, 1};
  CHECK(w2.evaluate({x, y}) == Scalar(3));
}

TEST_CASE("evaluation is alternating and multilinear (random)") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto rv = [&] {
    std::vector<Scalar> v(4);
    for (auto& x : v) x = coef(rng);
    return v;
  };
  RationalForm w(4, 3);
  for (auto& idx : kform_basis(4, 3)) w.add(idx, Scalar(coef(rng)));
  for (int t = 0; t < 20; ++t) {
    auto x = rv(), y = rv(), z = rv();
    CHECK(w.evaluate({x, y, z}) == -w.evaluate({y, x, z}));
    CHECK(is_zero(w.evaluate({x, x, z})));
    std::vector<Scalar> xy(4);
    for (int k = 0; k < 4; ++k) xy[k] = x[k] + Scalar(3) * y[k];
    CHECK(w.evaluate({xy, y, z}) == w.evaluate({x, y, z}));
    CHECK(w.evaluate({xy, z, y}) == w.evaluate({x, z, y}) + Scalar(3) * w.evaluate({y, z, y}));
  }
}

TEST_CASE("coefficient vector round trip") {
  RationalForm w(4, 2);
  w.add({0, 2}, Scalar(5) / 2);
  w.add({1, 3}, Scalar(-1));
  auto v = w.coefficient_vector();
  REQUIRE(v.size() == 6);
  CHECK(RationalForm::from_coefficients(4, 2, v) == w);
}

TEST_CASE("wedge sign between arbitrary degrees") {
  // (1-form) ^ (3-form): a ^ b = (-1)^{1*3} b ^ a
  auto a = bf({2});
  auto b = bf({1, 3, 4});
  CHECK(a.wedge(b) == Scalar(-1) * b.wedge(a));
  CHECK(a.wedge(b) == Scalar(-1) * bf({1, 2, 3, 4}));
}

TEST_CASE("form literal parsing") {
  CHECK(parse_form("1*e123 + -3/2*e134", 4).coefficient({0, 2, 3}) == Scalar(-3) / 2);
  CHECK(parse_form("e13 - e24", 4) == bf({1, 3}) - bf({2, 4}));
  CHECK(parse_form("-2*e1", 4) == Scalar(-2) * bf({1}));
  CHECK(parse_form("3/2e12", 4) == (Scalar(3) / 2) * bf({1, 2}));
  CHECK(parse_form(" e12 + e21 ", 4).is_zero_form());
  CHECK_THROWS_AS(parse_form("e12 + e134", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_form("e15", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_form("2*f12", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_form("", 4), std::invalid_argument);
}

TEST_CASE("printing round trips through the parser") {
  auto w = Scalar(2) * bf({1, 2}) - (Scalar(1) / 3) * bf({2, 4});
  CHECK(parse_form(w.str(), 4) == w);
  CHECK(RationalForm(4, 2).str() == "0");
}
