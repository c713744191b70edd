// Test-only naive symbolic engine: dense polynomials in X, Y, Xbar, Ybar
// as exponent->coefficient maps, multiplied term by term.  Used as an
// independent oracle against the closed-form matrices in the library.
#pragma once

#include <array>
#include <map>

#include "bianchi/polyspace.hpp"

namespace oracle {

using bianchi::QuadElem;
using Expo = std::array<int, 4>;  // (degX, degY, degXbar, degYbar)
using Poly4 = std::map<Expo, QuadElem>;

inline Poly4 poly_const(const QuadElem& c) {
  Poly4 p;
  if (!c.is_zero()) p.emplace(Expo{0, 0, 0, 0}, c);
  return p;
}

// r*X + s*Y  (or the conjugate pair when bar is set)
inline Poly4 poly_line(const QuadElem& r, const QuadElem& s, bool bar) {
  Poly4 p;
  if (!r.is_zero()) p.emplace(bar ? Expo{0, 0, 1, 0} : Expo{1, 0, 0, 0}, r);
  if (!s.is_zero()) p.emplace(bar ? Expo{0, 0, 0, 1} : Expo{0, 1, 0, 0}, s);
  return p;
}

inline Poly4 poly_mul(const Poly4& a, const Poly4& b, int d_code) {
  Poly4 out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Expo e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
      auto it = out.find(e);
      if (it == out.end())
        out.emplace(e, ca * cb);
      else
        it->second += ca * cb;
    }
  (void)d_code;
  return out;
}

inline Poly4 poly_pow(const Poly4& a, int e, int d_code) {
  Poly4 acc = poly_const(QuadElem::one(d_code));
  for (int i = 0; i < e; ++i) acc = poly_mul(acc, a, d_code);
  return acc;
}

inline QuadElem coeff_of(const Poly4& p, const Expo& e, int d_code) {
  auto it = p.find(e);
  return it == p.end() ? QuadElem::zero(d_code) : it->second;
}

// Substitution image of the basis monomial X^(k-p) Y^p Xbar^(k-q) Ybar^q
// under (X,Y) -> (aX+bY, cX+dY) and conjugates, fully expanded.
inline Poly4 slash_monomial(const bianchi::Mat2& g, int k, int p, int q) {
  const int dc = g.d_code();
  QuadElem a(g.a), b(g.b), c(g.c), d(g.d);
  Poly4 out = poly_pow(poly_line(a, b, false), k - p, dc);
  out = poly_mul(out, poly_pow(poly_line(c, d, false), p, dc), dc);
  out = poly_mul(out, poly_pow(poly_line(a.conj(), b.conj(), true), k - q, dc),
                 dc);
  out = poly_mul(out, poly_pow(poly_line(c.conj(), d.conj(), true), q, dc),
                 dc);
  return out;
}

}  // namespace oracle
