#include "bianchi/elem_io.hpp"

#include <algorithm>
#include <cctype>

namespace bianchi {

namespace {

[[noreturn]] void bad(const std::string& text) {
  throw std::invalid_argument("malformed element: \"" + text + "\"");
}

Rat parse_rat(const std::string& tok, const std::string& whole) {
  if (tok.empty()) bad(whole);
  size_t pos = 0;
  bool neg = false;
  if (tok[pos] == '+' || tok[pos] == '-') {
    neg = tok[pos] == '-';
    ++pos;
  }
  std::string num, den;
  while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos])))
    num += tok[pos++];
  if (num.empty()) bad(whole);
  if (pos < tok.size()) {
    if (tok[pos] != '/') bad(whole);
    ++pos;
    while (pos < tok.size() &&
           std::isdigit(static_cast<unsigned char>(tok[pos])))
      den += tok[pos++];
    if (den.empty() || pos != tok.size()) bad(whole);
  }
  Rat r(num + (den.empty() ? "" : "/" + den));
  if (r.get_den() == 0) bad(whole);
  r.canonicalize();
  return neg ? Rat(-r) : r;
}

}  // namespace

QuadElem parse_elem(const std::string& text, int d_code) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) bad(text);

  Rat x(0), y(0);
  size_t start = 0;
  size_t n_terms = 0;
  while (start < s.size()) {
    size_t end = start + 1;  // a sign at `start` belongs to this term
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(start, end - start);
    if (term == "+" || term == "-") bad(text);
    if (++n_terms > 2) bad(text);

    bool is_w = false;
    if (term.size() >= 1 && term.back() == 'w') {
      is_w = true;
      term.pop_back();
      if (!term.empty() && term.back() == '*') term.pop_back();
      if (term.empty() || term == "+" || term == "-")
        term += "1";  // bare w, +w, -w
    }
    Rat v = parse_rat(term, text);
    if (is_w)
      y += v;
    else
      x += v;
    start = end;
  }
  return QuadElem(d_code, x, y);
}

QuadElem parse_elem_or_quotient(const std::string& text, int d_code) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (!s.empty() && s.front() == '(') {
    size_t close = s.find(')');
    if (close == std::string::npos) bad(text);
    std::string num = s.substr(1, close - 1);
    if (close + 1 == s.size()) return parse_elem(num, d_code);
    if (s[close + 1] != '/' || close + 2 >= s.size() || s[close + 2] != '(' ||
        s.back() != ')')
      bad(text);
    std::string den = s.substr(close + 3, s.size() - close - 4);
    QuadElem dv = parse_elem(den, d_code);
    if (dv.is_zero()) throw std::invalid_argument("zero denominator");
    return parse_elem(num, d_code) / dv;
  }
  return parse_elem(s, d_code);
}

}  // namespace bianchi
