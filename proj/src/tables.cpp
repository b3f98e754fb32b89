#include "lieinv/tables.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lieinv {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

// is the variable name a basis symbol e<digits> with digits in 1..n?
bool is_basis_symbol(const std::string& name, int n, int* arity, std::vector<int>* idx) {
  if (name.size() < 2 || name[0] != 'e') return false;
  std::vector<int> tuple;
  for (size_t p = 1; p < name.size(); ++p) {
    if (!isdigit(static_cast<unsigned char>(name[p]))) return false;
    int d = name[p] - '0';
    if (d < 1 || d > n) return false;
    tuple.push_back(d - 1);
  }
  if (arity) *arity = int(tuple.size());
  if (idx) *idx = tuple;
  return true;
}

Scalar real_of(const GaussianScalar& g, const std::string& what) {
  if (!is_zero(g.im)) throw std::runtime_error(what + ": expected a real value, got " + to_string(g));
  return g.re;
}

}  // namespace

RationalForm FormTemplate::instantiate(
    const std::map<std::string, GaussianScalar>& assignment) const {
  RationalForm out(n, k);
  for (const auto& [mono, c] : expanded.terms()) {
    std::vector<int> tuple;
    GaussianScalar value = c;
    bool seen = false;
    for (const auto& var : mono) {
      int arity = 0;
      std::vector<int> idx;
      if (is_basis_symbol(var, n, &arity, &idx)) {
        if (seen || arity != k)
          throw std::runtime_error("form template monomial is not linear in e-symbols: " +
                                   expanded.str());
        seen = true;
        tuple = idx;
      } else {
        value *= Poly::variable(var).evaluate(assignment);
      }
    }
    if (!seen)
      throw std::runtime_error("form template monomial without e-symbol: " + expanded.str());
    out.add(tuple, real_of(value, "form template coefficient"));
  }
  return out;
}

RationalForm FormTemplate::generator(
    const std::string& var, const std::map<std::string, GaussianScalar>& params) const {
  std::map<std::string, GaussianScalar> assignment = params;
  for (const auto& v : coeff_vars) assignment[v] = GaussianScalar(v == var ? 1 : 0);
  return instantiate(assignment);
}

std::vector<RationalForm> FormTemplate::generators(
    const std::map<std::string, GaussianScalar>& params) const {
  std::vector<RationalForm> out;
  for (const auto& v : coeff_vars) out.push_back(generator(v, params));
  return out;
}

FormTemplate parse_form_template(const std::string& text, int n, int k,
                                 const std::vector<std::string>& param_names) {
  FormTemplate t;
  t.n = n;
  t.k = k;
  t.source = text;
  t.expanded = parse_poly(text);
  std::set<std::string> params(param_names.begin(), param_names.end());
  std::set<std::string> coeffs;
  for (const auto& [mono, c] : t.expanded.terms()) {
    (void)c;
    int basis_count = 0;
    for (const auto& var : mono) {
      int arity = 0;
      if (is_basis_symbol(var, n, &arity, nullptr)) {
        ++basis_count;
        if (arity != k)
          throw std::runtime_error("form template arity mismatch in '" + text + "'");
      } else if (!params.count(var)) {
        if (std::count(mono.begin(), mono.end(), var) > 1)
          throw std::runtime_error("form template is not linear in '" + var + "': " + text);
        coeffs.insert(var);
      }
    }
    if (basis_count != 1)
      throw std::runtime_error("each monomial needs exactly one e-symbol: " + text);
  }
  t.coeff_vars.assign(coeffs.begin(), coeffs.end());
  return t;
}

RationalMatrix parse_j_literal(const std::string& text, int n) {
  RationalMatrix J(n, n);
  for (const auto& piece : split(text, ',')) {
    size_t arrow = piece.find("->");
    if (arrow == std::string::npos)
      throw std::runtime_error("J literal entry without '->': " + piece);
    std::string lhs = trim(piece.substr(0, arrow));
    std::string rhs = trim(piece.substr(arrow + 2));
    std::vector<int> src_idx;
    int arity = 0;
    if (!is_basis_symbol(lhs, n, &arity, &src_idx) || arity != 1)
      throw std::runtime_error("J literal source must be a basis vector: " + lhs);
    int a = src_idx[0];
    VectorTemplate img = parse_vector_template(rhs, n);
    std::vector<GaussianScalar> v = img.evaluate({});
    int b = -1;
    for (int r = 0; r < n; ++r) {
      if (is_zero(v[r])) continue;
      if (b >= 0) throw std::runtime_error("J literal image must be a single basis vector: " + rhs);
      b = r;
    }
    if (b < 0) throw std::runtime_error("J literal image is zero: " + rhs);
    Scalar q = real_of(v[b], "J literal coefficient");
    J(b, a) = q;
    J(a, b) = Scalar(-1) / q;
  }
  // J^2 = -Id must already hold for a well-formed literal
  RationalMatrix sq = J * J;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (sq(r, c) != (r == c ? Scalar(-1) : Scalar(0)))
        throw std::runtime_error("J literal does not square to -Id: " + text);
  return J;
}

std::string table_name(TableId id) {
  switch (id) {
    case TableId::Complex: return "complex-subalgebras";
    case TableId::Symplectic: return "symplectic-families";
    case TableId::ExactSymplectic: return "exact-symplectic-families";
    case TableId::Cohomology: return "cohomology";
    case TableId::Kahler: return "kahler-families";
  }
  return "?";
}

namespace {

std::pair<VectorTemplate, VectorTemplate> parse_pair(const std::string& text, int line_no) {
  auto parts = split(text, '|');
  if (parts.size() != 2)
    throw std::runtime_error("line " + std::to_string(line_no) +
                             ": expected 'vector | vector', got: " + text);
  return {parse_vector_template(parts[0], 4), parse_vector_template(parts[1], 4)};
}

SubalgebraTemplate parse_template_entry(const std::string& text, int line_no) {
  SubalgebraTemplate t;
  t.source = text;
  std::string vecs = text;
  size_t qm = text.find('?');
  if (qm != std::string::npos) {
    vecs = text.substr(0, qm);
    t.condition = parse_condition(trim(text.substr(qm + 1)));
  }
  auto pr = parse_pair(vecs, line_no);
  t.u = pr.first;
  t.v = pr.second;
  return t;
}

std::vector<std::string> parse_rep_list(const std::string& text) {
  if (trim(text) == "0") return {};
  std::vector<std::string> out;
  for (auto& piece : split(text, '|'))
    if (!piece.empty()) out.push_back(piece);
  return out;
}

}  // namespace

std::vector<TableRow> parse_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open table file: " + path);

  std::vector<TableRow> rows;
  std::optional<TableId> current_table;
  std::optional<TableRow> row;
  std::string line;
  int line_no = 0;

  auto fail = [&](const std::string& msg) -> void {
    throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + msg);
  };
  auto flush = [&]() {
    if (!row) return;
    if (row->case_name.empty()) fail("row without 'case:'");
    rows.push_back(std::move(*row));
    row.reset();
  };

  // family degree is 2 for all form-family tables
  auto param_names_guess = [](const TableRow& r) {
    // parameters appearing in families/conditions; harmless to over-approximate
    (void)r;
    return std::vector<std::string>{"lambda", "gamma", "delta", "mu", "alpha", "beta"};
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    if (s.rfind("table ", 0) == 0) {
      flush();
      std::string name = trim(s.substr(6));
      if (name == "complex") current_table = TableId::Complex;
      else if (name == "symplectic") current_table = TableId::Symplectic;
      else if (name == "exact") current_table = TableId::ExactSymplectic;
      else if (name == "cohomology") current_table = TableId::Cohomology;
      else if (name == "kahler") current_table = TableId::Kahler;
      else fail("unknown table name: " + name);
      continue;
    }
    if (s == "row") {
      flush();
      if (!current_table) fail("'row' before any 'table'");
      row.emplace();
      row->table = *current_table;
      continue;
    }
    if (s == "end") {
      flush();
      continue;
    }
    size_t colon = s.find(':');
    if (colon == std::string::npos) fail("expected 'key: value', got: " + s);
    if (!row) fail("'key: value' outside a row");
    std::string key = trim(s.substr(0, colon));
    std::string value = trim(s.substr(colon + 1));
    try {
      if (key == "label") row->label = value;
      else if (key == "case") row->case_name = value;
      else if (key == "when") row->when = parse_condition(value);
      else if (key == "fix-when") row->fix_when = parse_condition(value);
      else if (key == "q") row->q.push_back(parse_pair(value, line_no));
      else if (key == "fix-q") row->fix_q.push_back(parse_pair(value, line_no));
      else if (key == "template") row->templates.push_back(parse_template_entry(value, line_no));
      else if (key == "fix-template")
        row->fix_templates.push_back(parse_template_entry(value, line_no));
      else if (key == "family")
        row->family = parse_form_template(value, 4, 2, param_names_guess(*row));
      else if (key == "fix-family")
        row->fix_family = parse_form_template(value, 4, 2, param_names_guess(*row));
      else if (key == "condition") row->condition_text = value;
      else if (key == "fix-condition") row->fix_condition_text = value;
      else if (key == "J") row->j_list.push_back(parse_j_literal(value, 4));
      else if (key == "h1" || key == "h2" || key == "h3") {
        if (row->h.empty()) row->h.resize(3);
        row->h[key[1] - '1'] = parse_rep_list(value);
      } else if (key == "fix-h1" || key == "fix-h2" || key == "fix-h3") {
        if (!row->fix_h) {
          // corrected lists default to the printed ones
          std::vector<std::vector<std::string>> base = row->h;
          base.resize(3);
          row->fix_h = base;
        }
        (*row->fix_h)[key[5] - '1'] = parse_rep_list(value);
      } else if (key == "suspect") row->suspect = value;
      else if (key == "note") row->note = value;
      else fail("unknown key: " + key);
    } catch (const std::invalid_argument& e) {
      fail(std::string(e.what()) + " in: " + value);
    }
  }
  flush();
  return rows;
}

std::vector<TableRow> rows_for(const std::vector<TableRow>& rows, TableId id) {
  std::vector<TableRow> out;
  for (const auto& r : rows)
    if (r.table == id) out.push_back(r);
  return out;
}

}  // namespace lieinv
