#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lieinv/lie_algebra.hpp"

namespace lieinv {

using Params = std::map<std::string, Scalar>;

std::string params_to_string(const Params& p);

// One family from the classification of 4-dimensional solvable real Lie
// algebras, together with its admissible parameter range, a default sample
// grid used by the verification driver, and the expected derived subalgebra.
struct CatalogCase {
  std::string name;                       // machine name, e.g. "r4_alpha_beta"
  std::string display;                    // pretty name, e.g. "r_{4,a,b}"
  std::vector<std::string> param_names;   // in canonical order
  std::function<std::string(const Params&)> range_error;  // "" when admissible
  std::function<LieAlgebra(const Params&)> build;
  std::vector<Params> default_grid;
  // generators of [g,g] as the classification states them; zero vectors
  // (from vanishing parameter factors) are dropped before comparing spans
  std::function<std::vector<std::vector<Scalar>>(const Params&)> expected_derived;
};

const std::vector<CatalogCase>& catalog();
const CatalogCase& catalog_case(const std::string& name);  // throws on unknown

// Builds the algebra after validating parameter count and range.
LieAlgebra build_case(const std::string& name, const Params& params);

}  // namespace lieinv
