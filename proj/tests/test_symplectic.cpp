#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lieinv/catalog.hpp"
#include "lieinv/symplectic.hpp"

using namespace lieinv;

namespace {

LieAlgebra build(const std::string& name, Params p = {}) { return build_case(name, p); }

RationalForm pf(const std::string& text) { return parse_form(text, 4); }

std::vector<std::vector<Scalar>> coeffs(const std::vector<RationalForm>& forms) {
  std::vector<std::vector<Scalar>> out;
  for (const auto& f : forms) out.push_back(f.coefficient_vector());
  return out;
}

std::vector<std::vector<Scalar>> coeffs(const std::vector<std::string>& texts) {
  std::vector<std::vector<Scalar>> out;
  for (const auto& t : texts) out.push_back(pf(t).coefficient_vector());
  return out;
}

}  // namespace

TEST_CASE("pfaffian basics and the wedge identity") {
  CHECK(pfaffian(pf("e12 + e34")) == Scalar(1));
  CHECK(pfaffian(pf("e13 + e24")) == Scalar(-1));
  CHECK(pfaffian(pf("e14 + e23")) == Scalar(1));
  CHECK(pfaffian(pf("e12")) == Scalar(0));
  CHECK(pfaffian(pf("3*e12 + 1/2*e34")) == Scalar(3, 2));

  // w ^ w = 2 Pf(w) e^{1234} on random 2-forms
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-4, 4);
  auto basis2 = kform_basis(4, 2);
  for (int t = 0; t < 30; ++t) {
    RationalForm w(4, 2);
    for (const auto& idx : basis2) w.add(idx, Scalar(d(rng)));
    RationalForm sq = w.wedge(w);
    CHECK(sq.coefficient({0, 1, 2, 3}) == 2 * pfaffian(w));
  }

  CHECK_THROWS_AS(pfaffian(RationalForm(4, 3)), std::invalid_argument);
}

TEST_CASE("closed two-form families match frozen bases") {
  CHECK(same_span(coeffs(closed_two_form_basis(build("rh3"))),
                  coeffs({"e12", "e13", "e14", "e23", "e24"})));
  CHECK(same_span(coeffs(closed_two_form_basis(build("r2p"))),
                  coeffs({"e12", "e14 + e23", "-1*e13 + e24"})));
  CHECK(same_span(coeffs(closed_two_form_basis(build("h4"))),
                  coeffs({"e14", "e24", "-1*e12 + e34"})));
  CHECK(same_span(coeffs(closed_two_form_basis(build("n4"))),
                  coeffs({"e12", "e14", "e24", "e34"})));
  CHECK(same_span(coeffs(closed_two_form_basis(build("d4_lambda", {{"lambda", Scalar(2)}}))),
                  coeffs({"e14", "e23", "e24", "-1*e12 + e34"})));
  CHECK(same_span(coeffs(exact_two_form_basis(build("r2p"))),
                  coeffs(std::vector<std::string>{"-1*e13 + e24", "e14 + e23"})));
  CHECK(same_span(coeffs(exact_two_form_basis(build("h4"))),
                  coeffs({"e14", "e24", "-1*e12 + e34"})));
  CHECK(same_span(coeffs(exact_two_form_basis(build("rh3"))),
                  coeffs(std::vector<std::string>{"e12"})));
  CHECK(exact_two_form_basis(build("a4")).empty());
}

TEST_CASE("every closed-basis element is closed, every exact element exact") {
  for (const CatalogCase& c : catalog()) {
    for (const Params& p : c.default_grid) {
      LieAlgebra g = build_case(c.name, p);
      for (const RationalForm& w : closed_two_form_basis(g)) CHECK(is_closed(g, w));
      for (const RationalForm& w : exact_two_form_basis(g)) {
        CHECK(is_closed(g, w));
        CHECK(exact_primitive(g, w).has_value());
      }
    }
  }
}

TEST_CASE("symplectic existence across the whole grid") {
  struct Row {
    std::string name;
    Params params;
    int closed_dim;
    bool symplectic;       // Pf not identically zero on closed 2-forms
    int exact_dim;
    bool exact_symplectic;
  };
  // frozen expectations, one row per default grid instance
  std::vector<Row> rows = {
      {"a4", {}, 6, true, 0, false},
      {"rh3", {}, 5, true, 1, false},
      {"r3", {}, 3, false, 2, false},
      {"r2r2", {}, 3, true, 2, true},
      {"r2p", {}, 3, true, 2, true},
      {"n4", {}, 4, true, 2, false},
      {"r4", {}, 3, false, 3, false},
      {"d4", {}, 3, false, 3, false},
      {"h4", {}, 3, true, 3, true},
      {"r3_lambda", {{"lambda", Scalar(-1)}}, 4, true, 2, false},
      {"r3_lambda", {{"lambda", Scalar(0)}}, 4, true, 1, false},
      {"r3_lambda", {{"lambda", Scalar(1)}}, 3, false, 2, false},
      {"r3_lambda", {{"lambda", Scalar(3, 5)}}, 3, false, 2, false},
      {"r3_lambda", {{"lambda", Scalar(-2, 3)}}, 3, false, 2, false},
      {"r3p_gamma", {{"gamma", Scalar(0)}}, 4, true, 2, false},
      {"r3p_gamma", {{"gamma", Scalar(1)}}, 3, false, 2, false},
      {"r3p_gamma", {{"gamma", Scalar(2, 3)}}, 3, false, 2, false},
      {"r3p_gamma", {{"gamma", Scalar(3)}}, 3, false, 2, false},
      {"r4_mu", {{"mu", Scalar(-1)}}, 4, true, 3, false},
      {"r4_mu", {{"mu", Scalar(-1, 2)}}, 3, false, 3, false},
      {"r4_mu", {{"mu", Scalar(0)}}, 4, true, 2, false},
      {"r4_mu", {{"mu", Scalar(1)}}, 3, false, 3, false},
      {"r4_mu", {{"mu", Scalar(2, 5)}}, 3, false, 3, false},
      {"r4_mu", {{"mu", Scalar(-3)}}, 3, false, 3, false},
      {"r4_alpha_beta", {{"alpha", Scalar(-1)}, {"beta", Scalar(-1)}}, 5, true, 3, false},
      {"r4_alpha_beta", {{"alpha", Scalar(-1)}, {"beta", Scalar(1)}}, 5, true, 3, false},
      {"r4_alpha_beta", {{"alpha", Scalar(-1)}, {"beta", Scalar(1, 2)}}, 4, true, 3, false},
      {"r4_alpha_beta", {{"alpha", Scalar(-1)}, {"beta", Scalar(-1, 2)}}, 4, true, 3, false},
      {"r4_alpha_beta", {{"alpha", Scalar(1)}, {"beta", Scalar(1)}}, 3, false, 3, false},
      {"r4_alpha_beta", {{"alpha", Scalar(1, 2)}, {"beta", Scalar(1)}}, 3, false, 3, false},
      {"r4_alpha_beta", {{"alpha", Scalar(-1, 2)}, {"beta", Scalar(1)}}, 3, false, 3, false},
      {"r4_alpha_beta", {{"alpha", Scalar(1, 2)}, {"beta", Scalar(1, 2)}}, 3, false, 3, false},
      {"r4_alpha_beta", {{"alpha", Scalar(-1, 2)}, {"beta", Scalar(1, 2)}}, 4, true, 3, false},
      {"r4_alpha_beta", {{"alpha", Scalar(-2, 3)}, {"beta", Scalar(1, 3)}}, 3, false, 3, false},
      {"r4_alpha_beta", {{"alpha", Scalar(1, 3)}, {"beta", Scalar(2, 5)}}, 3, false, 3, false},
      {"r4_alpha_beta", {{"alpha", Scalar(-1, 3)}, {"beta", Scalar(1, 4)}}, 3, false, 3, false},
      {"r4_alpha_beta", {{"alpha", Scalar(-2, 3)}, {"beta", Scalar(-1, 3)}}, 3, false, 3, false},
      {"r4_alpha_beta", {{"alpha", Scalar(-1, 2)}, {"beta", Scalar(-1, 2)}}, 3, false, 3, false},
      {"r4p_gamma_delta", {{"gamma", Scalar(0)}, {"delta", Scalar(1)}}, 4, true, 3, false},
      {"r4p_gamma_delta", {{"gamma", Scalar(0)}, {"delta", Scalar(2)}}, 4, true, 3, false},
      {"r4p_gamma_delta", {{"gamma", Scalar(-1, 2)}, {"delta", Scalar(1)}}, 3, false, 3, false},
      {"r4p_gamma_delta", {{"gamma", Scalar(-1, 2)}, {"delta", Scalar(3, 2)}}, 3, false, 3, false},
      {"r4p_gamma_delta", {{"gamma", Scalar(1)}, {"delta", Scalar(1)}}, 3, false, 3, false},
      {"r4p_gamma_delta", {{"gamma", Scalar(2, 3)}, {"delta", Scalar(1, 2)}}, 3, false, 3, false},
      {"d4_lambda", {{"lambda", Scalar(1, 2)}}, 3, true, 3, true},
      {"d4_lambda", {{"lambda", Scalar(1)}}, 3, true, 2, true},
      {"d4_lambda", {{"lambda", Scalar(2)}}, 4, true, 3, true},
      {"d4_lambda", {{"lambda", Scalar(3)}}, 3, true, 3, true},
      {"d4_lambda", {{"lambda", Scalar(5, 3)}}, 3, true, 3, true},
      {"d4p_delta", {{"delta", Scalar(0)}}, 3, false, 3, false},
      {"d4p_delta", {{"delta", Scalar(1)}}, 3, true, 3, true},
      {"d4p_delta", {{"delta", Scalar(2)}}, 3, true, 3, true},
      {"d4p_delta", {{"delta", Scalar(3, 2)}}, 3, true, 3, true},
  };
  for (const Row& r : rows) {
    LieAlgebra g = build(r.name, r.params);
    INFO(r.name, " ", params_to_string(r.params));
    auto closed = closed_two_form_basis(g);
    auto exact = exact_two_form_basis(g);
    CHECK(int(closed.size()) == r.closed_dim);
    CHECK(int(exact.size()) == r.exact_dim);
    CHECK(pfaffian_vanishes_on(closed) == !r.symplectic);
    CHECK(pfaffian_vanishes_on(exact) == !r.exact_symplectic);

    auto w = find_symplectic_form(g);
    CHECK(w.has_value() == r.symplectic);
    if (w) CHECK(is_symplectic(g, *w));

    auto we = find_exact_symplectic_form(g);
    CHECK(we.has_value() == r.exact_symplectic);
    if (we) {
      CHECK(is_symplectic(g, *we));
      CHECK(exact_primitive(g, *we).has_value());
    }
  }
}

TEST_CASE("witness determinism") {
  // first basis vector with nonzero Pfaffian wins; otherwise first pair sum
  std::vector<RationalForm> b1 = {pf("e12 + e34"), pf("e13")};
  CHECK(*nondegenerate_witness(b1) == pf("e12 + e34"));
  std::vector<RationalForm> b2 = {pf("e12"), pf("e13"), pf("e34")};
  CHECK(*nondegenerate_witness(b2) == pf("e12 + e34"));  // pair (0, 2)
  std::vector<RationalForm> b3 = {pf("e12"), pf("e13"), pf("e14")};
  CHECK_FALSE(nondegenerate_witness(b3).has_value());
}

TEST_CASE("is_symplectic rejects non-closed and degenerate forms") {
  LieAlgebra g = build("rh3");  // d e12 = 0, d e34 = -e124
  CHECK_FALSE(is_symplectic(g, pf("e12 + e34")));  // nondegenerate but not closed
  CHECK_FALSE(is_symplectic(g, pf("e12")));        // closed but degenerate
  CHECK(is_symplectic(g, pf("e13 + e24")));
}
