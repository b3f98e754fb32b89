#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lieinv/catalog.hpp"
#include "lieinv/tables.hpp"

using namespace lieinv;

namespace {

const std::string kDataFile = std::string(LIEINV_DATA_DIR) + "/reference_tables.txt";

GaussianScalar gs(long re, long im = 0) {
  return GaussianScalar(Scalar(re), Scalar(im));
}

}  // namespace

TEST_CASE("form template: generators and instantiation") {
  FormTemplate f = parse_form_template("a12*e12 + a34*(e34 - delta*e12)", 4, 2, {"delta"});
  CHECK(f.coeff_vars == std::vector<std::string>{"a12", "a34"});

  std::map<std::string, GaussianScalar> params{{"delta", gs(2)}};
  auto gens = f.generators(params);
  REQUIRE(gens.size() == 2);
  CHECK(gens[0] == parse_form("e12", 4));
  CHECK(gens[1] == parse_form("e34 - 2*e12", 4));

  std::map<std::string, GaussianScalar> a = params;
  a["a12"] = gs(3);
  a["a34"] = gs(1);
  CHECK(f.instantiate(a) == parse_form("e12 + e34", 4));
}

TEST_CASE("form template rejects nonlinear coefficients") {
  CHECK_THROWS(parse_form_template("a*a*e12", 4, 2, {}));
}

TEST_CASE("J literal round trip") {
  RationalMatrix j = parse_j_literal("e1->e2, e3->e4", 4);
  CHECK(j(1, 0) == Scalar(1));
  CHECK(j(0, 1) == Scalar(-1));
  CHECK(j(3, 2) == Scalar(1));
  CHECK(j(2, 3) == Scalar(-1));
  CHECK((j * j) == (Scalar(-1) * RationalMatrix::identity(4)));

  RationalMatrix k = parse_j_literal("e4->-2*e1, e2->e3", 4);
  CHECK(k(0, 3) == Scalar(-2));
  CHECK(k(3, 0) == Scalar(1) / 2);
  CHECK((k * k) == (Scalar(-1) * RationalMatrix::identity(4)));

  CHECK_THROWS(parse_j_literal("e1->e1", 4));        // no J^2 = -Id completion
  CHECK_THROWS(parse_j_literal("e1->e2+e3", 4));     // not a scaled basis vector
}

TEST_CASE("reference table file parses with the expected shape") {
  auto rows = parse_table_file(kDataFile);
  CHECK(rows_for(rows, TableId::Complex).size() == 19);
  CHECK(rows_for(rows, TableId::Symplectic).size() == 19);
  CHECK(rows_for(rows, TableId::ExactSymplectic).size() == 6);
  CHECK(rows_for(rows, TableId::Cohomology).size() == 31);
  CHECK(rows_for(rows, TableId::Kahler).size() == 15);

  for (const auto& row : rows) {
    // every row names a real catalog case
    CHECK_NOTHROW(catalog_case(row.case_name));
    switch (row.table) {
      case TableId::Complex:
        CHECK((!row.q.empty() || !row.templates.empty() || !row.fix_templates.empty()));
        break;
      case TableId::Symplectic:
      case TableId::ExactSymplectic:
        CHECK(row.family.has_value());
        break;
      case TableId::Cohomology:
        CHECK(row.h.size() == 3);
        break;
      case TableId::Kahler:
        CHECK(!row.j_list.empty());
        CHECK(row.family.has_value());
        break;
    }
  }
}

TEST_CASE("cohomology fix lists default missing degrees to the printed ones") {
  auto rows = parse_table_file(kDataFile);
  for (const auto& row : rows_for(rows, TableId::Cohomology)) {
    if (!row.fix_h) continue;
    CHECK(row.fix_h->size() == 3);
  }
}

TEST_CASE("parse errors carry the file location") {
  try {
    parse_table_file(std::string(LIEINV_DATA_DIR) + "/no_such_file.txt");
    CHECK(false);
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("no_such_file") != std::string::npos);
  }
}
