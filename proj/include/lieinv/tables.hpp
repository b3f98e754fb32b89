#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lieinv/expr.hpp"
#include "lieinv/kform.hpp"
#include "lieinv/matrix.hpp"

namespace lieinv {

// A pair of complex eigenvector templates with an admissibility condition
// on the free coefficients ("Im(b1)*Im(d2) != 0" style; empty = none).
struct SubalgebraTemplate {
  VectorTemplate u, v;
  Condition condition;
  std::string source;  // original text, for reports
};

// Linear family of k-forms: free coefficient variables attached to forms,
// e.g. "a12*e12 + a34*e34" or "a*(e12 - delta*e34)". Parameters of the
// catalog case may appear inside; the family must be linear in the
// coefficient variables once parameters are substituted.
struct FormTemplate {
  Poly expanded;                       // monomials contain exactly one e-symbol
  std::vector<std::string> coeff_vars; // free coefficient names, sorted
  int n = 4, k = 2;
  std::string source;

  // the generator obtained by setting one coefficient to 1, the rest to 0
  RationalForm generator(const std::string& var,
                         const std::map<std::string, GaussianScalar>& params) const;
  std::vector<RationalForm> generators(
      const std::map<std::string, GaussianScalar>& params) const;
  RationalForm instantiate(const std::map<std::string, GaussianScalar>& assignment) const;
};

FormTemplate parse_form_template(const std::string& text, int n, int k,
                                 const std::vector<std::string>& param_names);

// "e1->e2, e3->e4" or "e4->-2*e1"; the remaining images follow from
// J^2 = -Id. Every image must be a single scaled basis vector.
RationalMatrix parse_j_literal(const std::string& text, int n);

enum class TableId { Complex, Symplectic, ExactSymplectic, Cohomology, Kahler };

std::string table_name(TableId id);

struct TableRow {
  TableId table;
  std::string label;      // as printed
  std::string case_name;  // catalog case
  Condition when;         // restriction on parameters (printed reading)
  std::optional<Condition> fix_when;

  // complex-subalgebra rows
  std::vector<std::pair<VectorTemplate, VectorTemplate>> q;  // concrete pairs
  std::vector<SubalgebraTemplate> templates;
  std::vector<std::pair<VectorTemplate, VectorTemplate>> fix_q;
  std::vector<SubalgebraTemplate> fix_templates;

  // form-family rows (symplectic / exact-symplectic / kahler)
  std::optional<FormTemplate> family;
  std::string condition_text;  // nondegeneracy condition as tabulated
  std::optional<FormTemplate> fix_family;
  std::optional<std::string> fix_condition_text;

  // cohomology rows: representatives of H^1..H^3
  std::vector<std::vector<std::string>> h;  // h[0..2] lists of form literals
  std::optional<std::vector<std::vector<std::string>>> fix_h;

  // kahler rows: the given complex structures
  std::vector<RationalMatrix> j_list;

  std::string suspect;  // nonempty = row flagged, with the reason
  std::string note;
};

// Parses the table data file; throws std::runtime_error with line numbers.
std::vector<TableRow> parse_table_file(const std::string& path);

std::vector<TableRow> rows_for(const std::vector<TableRow>& rows, TableId id);

}  // namespace lieinv
