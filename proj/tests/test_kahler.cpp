#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lieinv/catalog.hpp"
#include "lieinv/kahler.hpp"

using namespace lieinv;

namespace {

LieAlgebra build(const std::string& name, Params p = {}) { return build_case(name, p); }

RationalForm pf(const std::string& text) { return parse_form(text, 4); }

// J sending e_{a+1} -> e_{b+1} (and e_{b+1} -> -e_{a+1}) for each pair;
// pairs use 1-based indices with an optional rational factor:
// J e_a = q e_b, J e_b = -(1/q) e_a.
RationalMatrix j_pairs(std::vector<std::tuple<int, int, Scalar>> pairs) {
  RationalMatrix j(4, 4);
  for (auto& [a, b, q] : pairs) {
    j(b - 1, a - 1) = q;
    j(a - 1, b - 1) = -1 / q;
  }
  return j;
}

RationalMatrix j_std() { return j_pairs({{1, 2, 1}, {3, 4, 1}}); }

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

TEST_CASE("compatibility predicate and abelian family") {
  CHECK(is_compatible(pf("e12 + e34"), j_std()));
  CHECK(is_compatible(pf("e13 + e24"), j_std()));
  CHECK_FALSE(is_compatible(pf("e13"), j_std()));

  // on the abelian algebra every 2-form is closed; the family is the full
  // J-invariant subspace, dimension 4
  LieAlgebra a4 = build("a4");
  auto fam = compatible_family(a4, j_std());
  CHECK(same_span(coeffs(fam), coeffs({"e12", "e34", "e13 + e24", "e14 - e23"})));
  CHECK_THROWS_AS(compatible_family(a4, RationalMatrix::identity(4)), std::invalid_argument);
}

TEST_CASE("metric construction and signature") {
  RationalMatrix j = j_std();
  RationalMatrix phi = metric_from(pf("e12 + e34"), j);
  CHECK(phi == RationalMatrix::identity(4));
  CHECK(metric_signature(phi) == Signature{4, 0, 0});
  RationalMatrix neg = metric_from(pf("-1*e12 - e34"), j);
  CHECK(metric_signature(neg) == Signature{0, 4, 0});
  // positive rescaling keeps the signature
  CHECK(metric_signature(metric_from(pf("3/2*e12 + 3/2*e34"), j)) == Signature{4, 0, 0});
  CHECK(metric_signature(metric_from(pf("e13 + e24"), j)) == Signature{2, 2, 0});
  // incompatible form: phi would be asymmetric
  CHECK_THROWS_AS(metric_from(pf("e13"), j), std::invalid_argument);

  // phi(Jx, Jy) = phi(x, y) for a compatible pair
  RationalMatrix invar = j.transpose() * phi * j;
  CHECK(invar == phi);
}

TEST_CASE("frozen compatible families per (case, J)") {
  struct Row {
    std::string name;
    Params params;
    RationalMatrix j;
    std::vector<std::string> family;
    bool nondegenerate;
  };
  std::vector<Row> rows = {
      {"rh3", {}, j_std(), {"e12", "-1*e14 + e23", "e13 + e24"}, true},
      {"r3_lambda", {{"lambda", Scalar(0)}}, j_std(), {"e12", "e34"}, true},
      {"r3p_gamma", {{"gamma", Scalar(0)}}, j_pairs({{1, 4, 1}, {2, 3, 1}}),
       {"e14", "e23"}, true},
      {"r2r2", {}, j_std(), {"e12", "e34"}, true},
      {"r2p", {}, j_pairs({{1, 3, 1}, {2, 4, 1}}), {"e14 + e23", "-1*e13 + e24"}, true},
      {"r2p", {}, j_pairs({{1, 2, -1}, {3, 4, 1}}),
       {"e12", "e14 + e23", "-1*e13 + e24"}, true},
      {"r4_alpha_beta", {{"alpha", Scalar(-1)}, {"beta", Scalar(-1)}},
       j_pairs({{4, 1, 1}, {2, 3, 1}}), {"e14", "-1*e13 + e24", "e12 + e34"}, true},
      {"r4_alpha_beta", {{"alpha", Scalar(-1)}, {"beta", Scalar(1)}},
       j_pairs({{4, 2, 1}, {1, 3, 1}}), {"-1*e14 + e23", "e24", "-1*e12 + e34"}, true},
      {"r4p_gamma_delta", {{"gamma", Scalar(0)}, {"delta", Scalar(1)}},
       j_pairs({{4, 1, 1}, {2, 3, 1}}), {"e14", "e23"}, true},
      {"r4p_gamma_delta", {{"gamma", Scalar(0)}, {"delta", Scalar(1)}},
       j_pairs({{4, 1, 1}, {2, 3, -1}}), {"e14", "e23"}, true},
      {"d4_lambda", {{"lambda", Scalar(1)}}, j_pairs({{1, 4, 1}, {2, 3, 1}}),
       {"e14", "-1*e12 + e34"}, true},
      {"d4_lambda", {{"lambda", Scalar(2)}}, j_pairs({{4, 2, -1}, {1, 3, 1}}),
       {"e14 + e23", "e24"}, true},
      {"d4_lambda", {{"lambda", Scalar(2)}}, j_pairs({{4, 1, -2}, {2, 3, 1}}),
       {"e14", "e23"}, true},
      {"d4_lambda", {{"lambda", Scalar(1, 2)}}, j_pairs({{4, 3, 1}, {1, 2, 1}}),
       {"-1*e12 + e34"}, true},
      {"d4_lambda", {{"lambda", Scalar(1, 2)}}, j_pairs({{4, 3, 1}, {1, 2, -1}}),
       {"-1*e12 + e34"}, true},
      {"d4p_delta", {{"delta", Scalar(1)}}, j_pairs({{4, 3, 1}, {1, 2, 1}}),
       {"-1*e12 + e34"}, true},
      {"d4p_delta", {{"delta", Scalar(1)}}, j_pairs({{4, 3, -1}, {1, 2, 1}}),
       {"-1*e12 + e34"}, true},
      {"d4p_delta", {{"delta", Scalar(1)}}, j_pairs({{4, 3, -1}, {1, 2, -1}}),
       {"-1*e12 + e34"}, true},
      {"h4", {}, j_pairs({{4, 2, 1}, {1, 3, 2}}), {"e24"}, false},
      {"d4", {}, j_pairs({{1, 3, -1}, {4, 2, 1}}), {"e24"}, false},
  };
  for (const Row& r : rows) {
    LieAlgebra g = build(r.name, r.params);
    INFO(r.name, " ", params_to_string(r.params));
    REQUIRE(is_almost_complex(r.j));
    CHECK(is_integrable(g, r.j));
    auto fam = compatible_family(g, r.j);
    CHECK(same_span(coeffs(fam), coeffs(r.family)));
    for (const RationalForm& w : fam) {
      CHECK(is_closed(g, w));
      CHECK(is_compatible(w, r.j));
    }
    KahlerDecision d = kahler_decision(g, r.j);
    if (r.nondegenerate) {
      CHECK(d.status == KahlerStatus::KAHLER);
      REQUIRE(d.witness);
      CHECK(is_symplectic(g, *d.witness));
      CHECK(is_compatible(*d.witness, r.j));
      RationalMatrix phi = metric_from(*d.witness, r.j);
      CHECK((r.j.transpose() * phi * r.j) == phi);
    } else {
      CHECK(d.status == KahlerStatus::NONE);
      CHECK_FALSE(d.witness.has_value());
    }
  }
}

TEST_CASE("r'_2 two-parameter family: compatible pair exactly at (0,-1)") {
  LieAlgebra g = build("r2p");
  for (auto [m, n] : std::vector<std::pair<Scalar, Scalar>>{
           {Scalar(0), Scalar(-1)}, {Scalar(0), Scalar(1)}, {Scalar(1), Scalar(2)},
           {Scalar(-1), Scalar(-1)}, {Scalar(1, 2), Scalar(-1)}}) {
    RationalMatrix j(4, 4);
    j(0, 0) = m / n;
    j(1, 0) = (m * m + n * n) / n;
    j(0, 1) = -1 / n;
    j(1, 1) = -m / n;
    j(3, 2) = 1;
    j(2, 3) = -1;
    REQUIRE(is_almost_complex(j));
    REQUIRE(is_integrable(g, j));
    KahlerDecision d = kahler_decision(g, j);
    bool expect = (m == Scalar(0) && n == Scalar(-1));
    INFO("mu=", to_string(m), " nu=", to_string(n));
    CHECK((d.status == KahlerStatus::KAHLER) == expect);
  }
}

TEST_CASE("almost-Kahler status on an algebra without complex structures") {
  LieAlgebra g = build("n4");
  KahlerDecision d = kahler_decision(g, j_std());
  CHECK(d.status == KahlerStatus::ALMOST_KAHLER);
  REQUIRE(d.witness);
  CHECK(is_symplectic(g, *d.witness));
  CHECK_FALSE(is_integrable(g, j_std()));
}

TEST_CASE("compatibility transport along automorphisms") {
  // abelian: every invertible map is an automorphism
  LieAlgebra a4 = build("a4");
  RationalMatrix x(4, 4);
  x(0, 0) = 1; x(0, 1) = 2; x(1, 1) = 1; x(2, 2) = 3; x(3, 2) = 1; x(3, 3) = 1;
  auto xinv = x.inverse();
  REQUIRE(xinv);
  RationalMatrix j2 = x * j_std() * *xinv;
  CHECK(compatibility_transport_check(a4, j_std(), j2, x, pf("e12 + e34")));
  CHECK(compatibility_transport_check(a4, j_std(), j_std(), RationalMatrix::identity(4),
                                      pf("e12 + e34")));

  // r2r2: scaling e2 is an automorphism that conjugates J nontrivially
  LieAlgebra g = build("r2r2");
  RationalMatrix s = RationalMatrix::identity(4);
  s(1, 1) = 2;
  RationalMatrix j2s = s * j_std() * *s.inverse();
  CHECK(compatibility_transport_check(g, j_std(), j2s, s, pf("e12 + e34")));

  // violated preconditions throw
  RationalMatrix swap12(4, 4);
  swap12(0, 1) = 1; swap12(1, 0) = 1; swap12(2, 2) = 1; swap12(3, 3) = 1;
  CHECK_THROWS_AS(compatibility_transport_check(g, j_std(), j_std(), swap12, pf("e12 + e34")),
                  std::invalid_argument);
  CHECK_THROWS_AS(compatibility_transport_check(g, j_std(), j_std(), s, pf("e12 + e34")),
                  std::invalid_argument);  // s does not intertwine J with itself
  CHECK_THROWS_AS(compatibility_transport_check(g, j_std(), j_std(),
                                                RationalMatrix::identity(4), pf("e13")),
                  std::invalid_argument);  // e13 not compatible with J1
}
