#include "bianchi/periods.hpp"

namespace bianchi {

namespace {

QuadInt qpow(const QuadInt& v, long e) {
  if (e == 0) return QuadInt::one(v.d_code());  // 0^0 = 1
  return v.pow(static_cast<unsigned long>(e));
}

QuadElem epow(const QuadElem& v, long e) {
  if (e == 0) return QuadElem::one(v.d_code());
  return v.pow(e);
}

// F[p][i] = (-1)^(p-i) sum_u C(p,u) C(k-p,i-u) a^u b^(p-u) c^(i-u) d^(k-p-i+u)
std::vector<std::vector<QuadInt>> transport_factor(const QuadInt& a,
                                                   const QuadInt& b,
                                                   const QuadInt& c,
                                                   const QuadInt& d, int k) {
  const int dc = a.d_code();
  std::vector<QuadInt> pa, pb, pc, pd;
  for (long e = 0; e <= k; ++e) {
    pa.push_back(qpow(a, e));
    pb.push_back(qpow(b, e));
    pc.push_back(qpow(c, e));
    pd.push_back(qpow(d, e));
  }
  std::vector<std::vector<QuadInt>> F(
      k + 1, std::vector<QuadInt>(k + 1, QuadInt::zero(dc)));
  for (int p = 0; p <= k; ++p)
    for (int i = 0; i <= k; ++i) {
      QuadInt acc = QuadInt::zero(dc);
      const int ulo = std::max(0, p + i - k);
      const int uhi = std::min(p, i);
      for (int u = ulo; u <= uhi; ++u) {
        Int coef = binom(p, u) * binom(k - p, i - u);
        if (coef == 0) continue;
        acc = acc + (pa[u] * pb[p - u] * pc[i - u] * pd[k - p - i + u]) * coef;
      }
      if ((p + i) % 2 != 0) acc = -acc;
      F[p][i] = acc;
    }
  return F;
}

}  // namespace

KMatrix transport_matrix(const Mat2& gamma, int k) {
  if (!gamma.det().is_unit())
    throw std::domain_error("transport_matrix: non-unit determinant");
  const int dc = gamma.d_code();
  auto F = transport_factor(gamma.a, gamma.b, gamma.c, gamma.d, k);
  auto G = transport_factor(gamma.a.conj(), gamma.b.conj(), gamma.c.conj(),
                            gamma.d.conj(), k);
  const size_t n = static_cast<size_t>(k) + 1;
  KMatrix out(dc, n * n, n * n);
  for (int p = 0; p <= k; ++p)
    for (int q = 0; q <= k; ++q)
      for (int i = 0; i <= k; ++i) {
        if (F[p][i].is_zero()) continue;
        for (int j = 0; j <= k; ++j) {
          if (G[q][j].is_zero()) continue;
          out.at(p * n + q, i * n + j) = QuadElem(F[p][i] * G[q][j]);
        }
      }
  return out;
}

KMatrix cusp_matrix(const QuadElem& kappa, int k) {
  CFExpansion cf = expand(kappa);
  KMatrix acc(kappa.d_code(), vkk_dim(k), vkk_dim(k));
  for (const Mat2& g : cf.matrices) acc += transport_matrix(g, k);
  return acc;
}

namespace {

KMatrix triangular_change(const QuadElem& kappa, int k, bool negate) {
  const int dc = kappa.d_code();
  const QuadElem kap = negate ? -kappa : kappa;
  const QuadElem kbar = kap.conj();
  std::vector<QuadElem> pk, pkb;
  for (long e = 0; e <= k; ++e) {
    pk.push_back(epow(kap, e));
    pkb.push_back(epow(kbar, e));
  }
  const size_t n = static_cast<size_t>(k) + 1;
  KMatrix out(dc, n * n, n * n);
  for (int p = 0; p <= k; ++p)
    for (int q = 0; q <= k; ++q)
      for (int i = 0; i <= p; ++i)
        for (int j = 0; j <= q; ++j) {
          Int coef = binom(k - i, p - i) * binom(k - j, q - j);
          if (coef == 0) continue;
          out.at(p * n + q, i * n + j) =
              pk[p - i] * pkb[q - j] * Rat(coef);
        }
  return out;
}

}  // namespace

KMatrix r_to_c(const QuadElem& kappa, int k) {
  return triangular_change(kappa, k, false);
}

KMatrix c_to_r(const QuadElem& kappa, int k) {
  return triangular_change(kappa, k, true);
}

PolyKK period_to_monomial(const PeriodVector& v) {
  PolyKK out = PolyKK::zero(v.d_code, v.k);
  for (int p = 0; p <= v.k; ++p)
    for (int q = 0; q <= v.k; ++q)
      out.at(p, q) = v.at(p, q) * Rat(binom(v.k, p) * binom(v.k, q));
  return out;
}

PeriodVector monomial_to_period(const PolyKK& poly) {
  PeriodVector out = PeriodVector::zero(poly.d_code, poly.k);
  for (int p = 0; p <= poly.k; ++p)
    for (int q = 0; q <= poly.k; ++q) {
      Rat s(binom(poly.k, p) * binom(poly.k, q));
      out.at(p, q) = poly.at(p, q) * Rat(1 / s);
    }
  return out;
}

}  // namespace bianchi
