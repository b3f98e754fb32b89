// Command-line front end: catalog listing, per-algebra invariants
// (cohomology, complex structures, symplectic forms, Kahler pairs) and
// whole-table verification against the reference data file.
//
// Exit codes: 0 success, 1 verification mismatch (or, with --strict, a
// suspected typo), 2 usage error, 3 input error.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "lieinv/catalog.hpp"
#include "lieinv/cohomology.hpp"
#include "lieinv/complex_structure.hpp"
#include "lieinv/kahler.hpp"
#include "lieinv/symplectic.hpp"
#include "lieinv/tables.hpp"
#include "lieinv/verify.hpp"

using nlohmann::json;
using namespace lieinv;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Params parse_params(const std::string& text) {
  Params p;
  if (text.empty()) return p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw InputError("bad parameter '" + item + "', expected name=value");
    std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    try {
      p[key] = Scalar(val);
    } catch (const std::exception&) {
      throw InputError("bad rational value '" + val + "' for parameter " + key);
    }
  }
  return p;
}

LieAlgebra build_or_throw(const std::string& name, const std::string& params_text) {
  try {
    return build_case(name, parse_params(params_text));
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

std::string j_to_string(const RationalMatrix& j) {
  std::string out;
  for (int col = 0; col < j.cols(); ++col) {
    std::string img;
    for (int row = 0; row < j.rows(); ++row) {
      if (is_zero(j(row, col))) continue;
      if (!img.empty()) img += " + ";
      std::string c = to_string(j(row, col));
      img += (c == "1" ? "" : c == "-1" ? "-" : c + "*") + ("e" + std::to_string(row + 1));
    }
    if (!out.empty()) out += ", ";
    out += "J e" + std::to_string(col + 1) + " = " + (img.empty() ? "0" : img);
  }
  return out;
}

json j_to_json(const RationalMatrix& j) {
  json rows = json::array();
  for (int r = 0; r < j.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < j.cols(); ++c) row.push_back(to_string(j(r, c)));
    rows.push_back(row);
  }
  return rows;
}

int cmd_catalog(const std::string& case_name, bool as_json) {
  json out = json::array();
  for (const auto& cc : catalog()) {
    if (!case_name.empty() && cc.name != case_name) continue;
    if (as_json) {
      json grid = json::array();
      for (const auto& p : cc.default_grid) grid.push_back(params_to_string(p));
      out.push_back({{"name", cc.name},
                     {"display", cc.display},
                     {"parameters", cc.param_names},
                     {"sample_grid", grid}});
    } else {
      std::string ps;
      for (const auto& p : cc.param_names) ps += (ps.empty() ? "" : ", ") + p;
      std::cout << cc.name << "  (" << cc.display << ")"
                << (ps.empty() ? "" : "  parameters: " + ps) << "\n";
    }
  }
  if (!case_name.empty() && out.empty() && as_json) throw InputError("unknown case " + case_name);
  if (as_json) std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_cohomology(const std::string& case_name, const std::string& params, bool as_json) {
  LieAlgebra g = build_or_throw(case_name, params);
  json out{{"case", case_name}, {"params", params.empty() ? "-" : params}};
  json spaces = json::array();
  for (int k = 0; k <= g.dim(); ++k) {
    CohomologySpace s = cohomology(g, k);
    json reps = json::array();
    for (const auto& w : s.representatives) reps.push_back(w.str());
    spaces.push_back({{"k", k}, {"betti", s.betti}, {"representatives", reps}});
    if (!as_json) {
      std::cout << "b_" << k << " = " << s.betti;
      if (!s.representatives.empty()) {
        std::cout << "   H^" << k << " = span{";
        for (size_t t = 0; t < s.representatives.size(); ++t)
          std::cout << (t ? ", " : "") << s.representatives[t].str();
        std::cout << "}";
      }
      std::cout << "\n";
    }
  }
  out["cohomology"] = spaces;
  if (as_json) std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_complex(const std::string& case_name, const std::string& params, bool as_json,
                long long cap) {
  LieAlgebra g = build_or_throw(case_name, params);
  GridSearchOptions opt;
  opt.cap = cap;
  auto j = find_complex_structure(g, opt);
  json out{{"case", case_name},
           {"params", params.empty() ? "-" : params},
           {"exists", j.has_value()}};
  if (j) {
    out["J"] = j_to_json(*j);
    out["integrable"] = is_integrable(g, *j);
    if (!as_json) std::cout << "complex structure found: " << j_to_string(*j) << "\n";
  } else if (!as_json) {
    std::cout << "no complex structure found over the coefficient grid "
                 "(evidence, not a proof of non-existence)\n";
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_symplectic(const std::string& case_name, const std::string& params, bool as_json) {
  LieAlgebra g = build_or_throw(case_name, params);
  auto w = find_symplectic_form(g);
  auto we = find_exact_symplectic_form(g);
  json out{{"case", case_name},
           {"params", params.empty() ? "-" : params},
           {"symplectic", w.has_value()},
           {"exact_symplectic", we.has_value()}};
  if (w) out["witness"] = w->str();
  if (we) {
    out["exact_witness"] = we->str();
    out["primitive"] = exact_primitive(g, *we)->str();
  }
  if (!as_json) {
    if (w)
      std::cout << "symplectic form: " << w->str() << "\n";
    else
      std::cout << "not symplectic (pfaffian vanishes on all closed 2-forms)\n";
    if (we)
      std::cout << "exact symplectic form: " << we->str() << " = d(" << exact_primitive(g, *we)->str()
                << ")\n";
    else
      std::cout << "no exact symplectic form\n";
  } else {
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

int cmd_kahler(const std::string& case_name, const std::string& params, bool as_json,
               long long cap) {
  LieAlgebra g = build_or_throw(case_name, params);
  GridSearchOptions opt;
  opt.cap = cap;
  json out{{"case", case_name}, {"params", params.empty() ? "-" : params}};
  for (const auto& hit : grid_search_subalgebras(g, opt)) {
    auto j = j_from_subalgebra(hit.u, hit.v);
    if (!j || !is_integrable(g, *j)) continue;
    KahlerDecision dec = kahler_decision(g, *j);
    if (dec.status != KahlerStatus::KAHLER) continue;
    out["kahler"] = true;
    out["J"] = j_to_json(*j);
    out["omega"] = dec.witness->str();
    out["metric_signature"] = [&] {
      Signature s = metric_signature(metric_from(*dec.witness, *j));
      return json{{"positives", s.positives}, {"negatives", s.negatives}, {"zeros", s.zeros}};
    }();
    if (as_json)
      std::cout << out.dump(2) << "\n";
    else
      std::cout << "Kahler pair found:\n  " << j_to_string(*j) << "\n  omega = "
                << dec.witness->str() << "\n";
    return 0;
  }
  out["kahler"] = false;
  if (as_json)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << "no Kahler pair found over the coefficient grid "
                 "(evidence, not a proof of non-existence)\n";
  return 0;
}

int cmd_verify(const std::string& file, bool as_json, bool strict, long long cap) {
  std::vector<TableRow> rows;
  try {
    rows = parse_table_file(file);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  VerifyOptions opt;
  opt.strict = strict;
  opt.grid_cap = cap;
  auto records = verify_all(rows, opt);
  int counts[4] = {0, 0, 0, 0};
  for (const auto& r : records) {
    ++counts[int(r.status)];
    if (as_json) {
      json line{{"table", r.table},     {"label", r.label},
                {"case", r.case_name},  {"params", r.params},
                {"status", to_string(r.status)}, {"detail", r.detail}};
      std::cout << line.dump() << "\n";
    } else {
      std::cout << to_string(r.status) << "  " << r.table << " / " << r.label << " ["
                << r.case_name << (r.params == "-" ? "" : ": " + r.params) << "]";
      if (r.status != VerifyStatus::MATCH) std::cout << "\n    " << r.detail;
      std::cout << "\n";
    }
  }
  if (!as_json)
    std::cout << "summary: " << counts[0] << " match, " << counts[1] << " typo-suspected, "
              << counts[2] << " mismatch, " << counts[3] << " skipped\n";
  return exit_code_for(records, strict);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of 4-dimensional solvable Lie algebras"};
  app.require_subcommand(1);

  std::string case_name, params, file = std::string(LIEINV_DATA_DIR) + "/reference_tables.txt";
  bool as_json = false, strict = false;
  long long cap = 1'000'000;

  auto add_common = [&](CLI::App* sub, bool needs_case) {
    auto* c = sub->add_option("--case", case_name, "catalog case name (see 'catalog')");
    if (needs_case) c->required();
    sub->add_option("--params", params, "parameters, e.g. lambda=1/2 or alpha=-1,beta=1");
    sub->add_flag("--json", as_json, "machine-readable output");
  };

  auto* sc_catalog = app.add_subcommand("catalog", "list the catalog of algebras");
  sc_catalog->add_option("--case", case_name, "show a single case");
  sc_catalog->add_flag("--json", as_json, "machine-readable output");

  auto* sc_coh = app.add_subcommand("cohomology", "Chevalley-Eilenberg cohomology");
  add_common(sc_coh, true);

  auto* sc_cx = app.add_subcommand("complex", "search for a complex structure");
  add_common(sc_cx, true);
  sc_cx->add_option("--grid", cap, "coefficient-grid enumeration cap");

  auto* sc_sp = app.add_subcommand("symplectic", "decide symplectic / exact symplectic");
  add_common(sc_sp, true);

  auto* sc_k = app.add_subcommand("kahler", "search for a Kahler pair");
  add_common(sc_k, true);
  sc_k->add_option("--grid", cap, "coefficient-grid enumeration cap");

  auto* sc_v = app.add_subcommand("verify", "verify the reference tables");
  sc_v->add_option("--file", file, "table data file");
  sc_v->add_flag("--json", as_json, "one JSON record per line");
  sc_v->add_flag("--strict", strict, "fail on suspected typos too");
  sc_v->add_option("--grid", cap, "coefficient-grid enumeration cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sc_catalog->parsed()) return cmd_catalog(case_name, as_json);
    if (sc_coh->parsed()) return cmd_cohomology(case_name, params, as_json);
    if (sc_cx->parsed()) return cmd_complex(case_name, params, as_json, cap);
    if (sc_sp->parsed()) return cmd_symplectic(case_name, params, as_json);
    if (sc_k->parsed()) return cmd_kahler(case_name, params, as_json, cap);
    if (sc_v->parsed()) return cmd_verify(file, as_json, strict, cap);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
