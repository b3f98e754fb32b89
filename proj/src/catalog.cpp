#include "lieinv/catalog.hpp"

#include <sstream>
#include <stdexcept>

namespace lieinv {

std::string params_to_string(const Params& p) {
  if (p.empty()) return "-";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : p) {
    if (!first) os << ",";
    os << k << "=" << to_string(v);
    first = false;
  }
  return os.str();
}

namespace {

using B = std::map<std::pair<int, int>, std::vector<Scalar>>;

// coefficient list for a single basis vector scaled by q (1-based index)
std::vector<Scalar> v(int k, const Scalar& q = Scalar(1)) {
  std::vector<Scalar> out(4);
  out[k - 1] = q;
  return out;
}
std::vector<Scalar> v2(int k1, const Scalar& q1, int k2, const Scalar& q2) {
  std::vector<Scalar> out(4);
  out[k1 - 1] = q1;
  out[k2 - 1] = q2;
  return out;
}

Scalar P(const Params& p, const std::string& key) { return p.at(key); }

std::string no_range(const Params&) { return ""; }

std::vector<Params> grid1(const std::string& key, std::vector<Scalar> vals) {
  std::vector<Params> g;
  for (auto& x : vals) g.push_back({{key, x}});
  return g;
}

std::vector<CatalogCase> make_catalog() {
  std::vector<CatalogCase> cat;
  auto Q = [](long n, long d = 1) { return Scalar(n) / d; };

  cat.push_back({"a4", "a_4", {}, no_range,
                 [](const Params&) { return LieAlgebra(4, {}, "a4"); },
                 {{}},
                 [](const Params&) { return std::vector<std::vector<Scalar>>{}; }});

  cat.push_back({"rh3", "rh_3", {}, no_range,
                 [](const Params&) {
                   return LieAlgebra(4, B{{{0, 1}, v(3)}}, "rh3");
                 },
                 {{}},
                 [](const Params&) { return std::vector<std::vector<Scalar>>{v(3)}; }});

  cat.push_back({"r3", "r_3", {}, no_range,
                 [](const Params&) {
                   return LieAlgebra(4, B{{{0, 1}, v(2)}, {{0, 2}, v2(2, 1, 3, 1)}}, "r3");
                 },
                 {{}},
                 [](const Params&) { return std::vector<std::vector<Scalar>>{v(2), v(3)}; }});

  cat.push_back({"r3_lambda", "r_{3,lambda}", {"lambda"},
                 [](const Params& p) {
                   Scalar l = P(p, "lambda");
                   return (l < -1 || l > 1) ? std::string("lambda must lie in [-1, 1]") : "";
                 },
                 [](const Params& p) {
                   return LieAlgebra(4, B{{{0, 1}, v(2)}, {{0, 2}, v(3, P(p, "lambda"))}},
                                     "r3_lambda");
                 },
                 grid1("lambda", {Q(-1), Q(0), Q(1), Q(3, 5), Q(-2, 3)}),
                 [](const Params& p) {
                   return std::vector<std::vector<Scalar>>{v(2), v(3, P(p, "lambda"))};
                 }});

  cat.push_back({"r3p_gamma", "r'_{3,gamma}", {"gamma"},
                 [](const Params& p) {
                   return P(p, "gamma") < 0 ? std::string("gamma must be >= 0") : "";
                 },
                 [](const Params& p) {
                   Scalar g = P(p, "gamma");
                   return LieAlgebra(
                       4, B{{{0, 1}, v2(2, g, 3, -1)}, {{0, 2}, v2(2, 1, 3, g)}}, "r3p_gamma");
                 },
                 grid1("gamma", {Q(0), Q(1), Q(2, 3), Q(3)}),
                 [](const Params&) { return std::vector<std::vector<Scalar>>{v(2), v(3)}; }});

  cat.push_back({"r2r2", "r_2 r_2", {}, no_range,
                 [](const Params&) {
                   return LieAlgebra(4, B{{{0, 1}, v(2)}, {{2, 3}, v(4)}}, "r2r2");
                 },
                 {{}},
                 [](const Params&) { return std::vector<std::vector<Scalar>>{v(2), v(4)}; }});

  cat.push_back({"r2p", "r'_2", {}, no_range,
                 [](const Params&) {
                   return LieAlgebra(4,
                                     B{{{0, 2}, v(3)},
                                       {{0, 3}, v(4)},
                                       {{1, 2}, v(4)},
                                       {{1, 3}, v(3, Scalar(-1))}},
                                     "r2p");
                 },
                 {{}},
                 [](const Params&) { return std::vector<std::vector<Scalar>>{v(3), v(4)}; }});

  cat.push_back({"n4", "n_4", {}, no_range,
                 [](const Params&) {
                   // [e4,e1] = e2, [e4,e2] = e3, stored as [e1,e4] = -e2 etc.
                   return LieAlgebra(
                       4, B{{{0, 3}, v(2, Scalar(-1))}, {{1, 3}, v(3, Scalar(-1))}}, "n4");
                 },
                 {{}},
                 [](const Params&) { return std::vector<std::vector<Scalar>>{v(2), v(3)}; }});

  cat.push_back({"r4", "r_4", {}, no_range,
                 [](const Params&) {
                   return LieAlgebra(4,
                                     B{{{0, 3}, v(1, Scalar(-1))},
                                       {{1, 3}, v2(1, Scalar(-1), 2, Scalar(-1))},
                                       {{2, 3}, v2(2, Scalar(-1), 3, Scalar(-1))}},
                                     "r4");
                 },
                 {{}},
                 [](const Params&) {
                   return std::vector<std::vector<Scalar>>{v(1), v(2), v(3)};
                 }});

  cat.push_back({"r4_mu", "r_{4,mu}", {"mu"}, no_range,
                 [](const Params& p) {
                   Scalar m = P(p, "mu");
                   return LieAlgebra(4,
                                     B{{{0, 3}, v(1, Scalar(-1))},
                                       {{1, 3}, v(2, -m)},
                                       {{2, 3}, v2(2, Scalar(-1), 3, -m)}},
                                     "r4_mu");
                 },
                 grid1("mu", {Q(-1), Q(-1, 2), Q(0), Q(1), Q(2, 5), Q(-3)}),
                 [](const Params& p) {
                   return std::vector<std::vector<Scalar>>{v(1), v(2), v(3, P(p, "mu"))};
                 }});

  {
    std::vector<Params> g;
    for (auto [a, b] : std::vector<std::pair<Scalar, Scalar>>{
             {Q(-1), Q(-1)}, {Q(-1), Q(1)}, {Q(-1), Q(1, 2)}, {Q(-1), Q(-1, 2)},
             {Q(1), Q(1)}, {Q(1, 2), Q(1)}, {Q(-1, 2), Q(1)}, {Q(1, 2), Q(1, 2)},
             {Q(-1, 2), Q(1, 2)}, {Q(-2, 3), Q(1, 3)}, {Q(1, 3), Q(2, 5)},
             {Q(-1, 3), Q(1, 4)}, {Q(-2, 3), Q(-1, 3)}, {Q(-1, 2), Q(-1, 2)}})
      g.push_back({{"alpha", a}, {"beta", b}});
    cat.push_back({"r4_alpha_beta", "r_{4,alpha,beta}", {"alpha", "beta"},
                   [](const Params& p) {
                     Scalar a = P(p, "alpha"), b = P(p, "beta");
                     if (is_zero(a) || is_zero(b)) return std::string("alpha*beta must be nonzero");
                     if (a < -1 || a > b || b > 1)
                       return std::string("need -1 <= alpha <= beta <= 1");
                     return std::string();
                   },
                   [](const Params& p) {
                     return LieAlgebra(4,
                                       B{{{0, 3}, v(1, Scalar(-1))},
                                         {{1, 3}, v(2, -P(p, "alpha"))},
                                         {{2, 3}, v(3, -P(p, "beta"))}},
                                       "r4_alpha_beta");
                   },
                   g,
                   [](const Params&) {
                     return std::vector<std::vector<Scalar>>{v(1), v(2), v(3)};
                   }});
  }

  {
    std::vector<Params> g;
    for (auto [gm, dl] : std::vector<std::pair<Scalar, Scalar>>{
             {Q(0), Q(1)}, {Q(0), Q(2)}, {Q(-1, 2), Q(1)}, {Q(-1, 2), Q(3, 2)},
             {Q(1), Q(1)}, {Q(2, 3), Q(1, 2)}})
      g.push_back({{"gamma", gm}, {"delta", dl}});
    cat.push_back({"r4p_gamma_delta", "r'_{4,gamma,delta}", {"gamma", "delta"},
                   [](const Params& p) {
                     return P(p, "delta") <= 0 ? std::string("delta must be > 0") : "";
                   },
                   [](const Params& p) {
                     Scalar gm = P(p, "gamma"), dl = P(p, "delta");
                     return LieAlgebra(4,
                                       B{{{0, 3}, v(1, Scalar(-1))},
                                         {{1, 3}, v2(2, -gm, 3, dl)},
                                         {{2, 3}, v2(2, -dl, 3, -gm)}},
                                       "r4p_gamma_delta");
                   },
                   g,
                   [](const Params&) {
                     return std::vector<std::vector<Scalar>>{v(1), v(2), v(3)};
                   }});
  }

  cat.push_back({"d4", "d_4", {}, no_range,
                 [](const Params&) {
                   return LieAlgebra(4,
                                     B{{{0, 1}, v(3)},
                                       {{0, 3}, v(1, Scalar(-1))},
                                       {{1, 3}, v(2)}},
                                     "d4");
                 },
                 {{}},
                 [](const Params&) {
                   return std::vector<std::vector<Scalar>>{v(1), v(2), v(3)};
                 }});

  cat.push_back({"d4_lambda", "d_{4,lambda}", {"lambda"},
                 [](const Params& p) {
                   return P(p, "lambda") < Scalar(1) / 2 ? std::string("lambda must be >= 1/2")
                                                         : "";
                 },
                 [](const Params& p) {
                   Scalar l = P(p, "lambda");
                   return LieAlgebra(4,
                                     B{{{0, 1}, v(3)},
                                       {{2, 3}, v(3, Scalar(-1))},
                                       {{0, 3}, v(1, -l)},
                                       {{1, 3}, v(2, l - 1)}},
                                     "d4_lambda");
                 },
                 grid1("lambda", {Q(1, 2), Q(1), Q(2), Q(3), Q(5, 3)}),
                 [](const Params& p) {
                   // the (1 - lambda) factor matters: at lambda = 1 the
                   // derived subalgebra drops to <e1, e3>
                   return std::vector<std::vector<Scalar>>{
                       v(1, P(p, "lambda")), v(2, Scalar(1) - P(p, "lambda")), v(3)};
                 }});

  cat.push_back({"d4p_delta", "d'_{4,delta}", {"delta"},
                 [](const Params& p) {
                   return P(p, "delta") < 0 ? std::string("delta must be >= 0") : "";
                 },
                 [](const Params& p) {
                   Scalar d = P(p, "delta");
                   return LieAlgebra(4,
                                     B{{{0, 1}, v(3)},
                                       {{0, 3}, v2(1, -d / 2, 2, Scalar(1))},
                                       {{2, 3}, v(3, -d)},
                                       {{1, 3}, v2(1, Scalar(-1), 2, -d / 2)}},
                                     "d4p_delta");
                 },
                 grid1("delta", {Q(0), Q(1), Q(2), Q(3, 2)}),
                 [](const Params&) {
                   return std::vector<std::vector<Scalar>>{v(1), v(2), v(3)};
                 }});

  cat.push_back({"h4", "h_4", {}, no_range,
                 [](const Params&) {
                   auto half = Scalar(1) / 2;
                   return LieAlgebra(4,
                                     B{{{0, 1}, v(3)},
                                       {{2, 3}, v(3, Scalar(-1))},
                                       {{0, 3}, v(1, -half)},
                                       {{1, 3}, v2(1, Scalar(-1), 2, -half)}},
                                     "h4");
                 },
                 {{}},
                 [](const Params&) {
                   return std::vector<std::vector<Scalar>>{v(1), v(2), v(3)};
                 }});

  return cat;
}

}  // namespace

const std::vector<CatalogCase>& catalog() {
  static const std::vector<CatalogCase> cat = make_catalog();
  return cat;
}

const CatalogCase& catalog_case(const std::string& name) {
  for (const auto& c : catalog())
    if (c.name == name) return c;
  throw std::invalid_argument("unknown case \"" + name + "\"");
}

LieAlgebra build_case(const std::string& name, const Params& params) {
  const CatalogCase& c = catalog_case(name);
  if (params.size() != c.param_names.size())
    throw std::invalid_argument(name + " takes " + std::to_string(c.param_names.size()) +
                                " parameter(s)");
  for (const auto& pn : c.param_names)
    if (!params.count(pn)) throw std::invalid_argument(name + " needs parameter " + pn);
  if (std::string err = c.range_error(params); !err.empty())
    throw std::invalid_argument(name + ": " + err);
  return c.build(params);
}

}  // namespace lieinv
