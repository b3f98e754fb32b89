#include "lieinv/kform.hpp"

#include <stdexcept>

namespace lieinv {

std::vector<std::vector<int>> kform_basis(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    int t = k - 1;
    while (t >= 0 && idx[t] == n - k + t) --t;
    if (t < 0) break;
    ++idx[t];
    for (int s = t + 1; s < k; ++s) idx[s] = idx[s - 1] + 1;
  }
  if (k == 0) out = {{}};
  return out;
}

int sort_index_sign(std::vector<int>& idx) {
  int sign = 1;
  for (size_t a = 0; a < idx.size(); ++a)
    for (size_t b = 0; b + 1 < idx.size() - a; ++b)
      if (idx[b] > idx[b + 1]) {
        std::swap(idx[b], idx[b + 1]);
        sign = -sign;
      }
  for (size_t a = 0; a + 1 < idx.size(); ++a)
    if (idx[a] == idx[a + 1]) return 0;
  return sign;
}

namespace {

std::string strip_ws(const std::string& s) {
  std::string out;
  for (char ch : s)
    if (ch != ' ' && ch != '\t') out += ch;
  return out;
}

}  // namespace

RationalForm parse_form(const std::string& text, int n) {
  std::string s = strip_ws(text);
  if (s.empty()) throw std::invalid_argument("empty form literal");
  // split into signed terms
  std::vector<std::string> terms;
  std::string cur;
  for (size_t t = 0; t < s.size(); ++t) {
    char ch = s[t];
    if ((ch == '+' || ch == '-') && t > 0 && s[t - 1] != '*' && s[t - 1] != '+' &&
        s[t - 1] != '-') {
      terms.push_back(cur);
      cur.clear();
      if (ch == '-') cur += '-';
    } else {
      cur += ch;
    }
  }
  terms.push_back(cur);

  if (terms.size() == 1 && terms[0] == "0") {
    // degree unknowable from "0"; conventionally a 2-form context uses
    // from_coefficients instead, so reject here
    throw std::invalid_argument("cannot infer the degree of the zero form");
  }

  int degree = -1;
  RationalForm f(n, 0);
  for (std::string term : terms) {
    Scalar coeff(1);
    if (!term.empty() && term[0] == '-') {
      coeff = -1;
      term = term.substr(1);
    }
    size_t e = term.find('e');
    if (e == std::string::npos) throw std::invalid_argument("term lacks basis letter: " + term);
    std::string head = term.substr(0, e);
    if (!head.empty()) {
      if (head.back() == '*') head.pop_back();
      if (!head.empty()) coeff *= parse_rational(head);
    }
    std::vector<int> idx;
    for (size_t t = e + 1; t < term.size(); ++t) {
      if (term[t] < '1' || term[t] > '9')
        throw std::invalid_argument("bad basis index in term: " + term);
      int i = term[t] - '1';
      if (i >= n) throw std::invalid_argument("basis index out of range: " + term);
      idx.push_back(i);
    }
    if (idx.empty()) throw std::invalid_argument("term lacks indices: " + term);
    if (degree == -1) {
      degree = int(idx.size());
      f = RationalForm(n, degree);
    } else if (int(idx.size()) != degree) {
      throw std::invalid_argument("mixed degrees in form literal");
    }
    f.add(std::move(idx), coeff);
  }
  return f;
}

}  // namespace lieinv
