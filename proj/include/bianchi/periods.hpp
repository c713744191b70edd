#pragma once

#include "bianchi/hurwitz.hpp"
#include "bianchi/polyspace.hpp"

namespace bianchi {

/// Coordinates in the formal basis {r_{p,q}(0,F)}, indexed by
/// idx(p, q) = p*(k+1) + q.  The base periods themselves are never
/// evaluated; everything downstream is exact linear algebra over them.
struct PeriodVector {
  int d_code;
  int k;
  std::vector<QuadElem> entries;

  static PeriodVector zero(int d_code, int k) {
    return {d_code, k,
            std::vector<QuadElem>(vkk_dim(k), QuadElem::zero(d_code))};
  }
  QuadElem& at(int p, int q) {
    return entries[static_cast<size_t>(p) * (k + 1) + q];
  }
  const QuadElem& at(int p, int q) const {
    return entries[static_cast<size_t>(p) * (k + 1) + q];
  }
};

/// The matrix T(gamma) expressing the periods along (gamma(0), gamma(inf))
/// in base periods: row (p,q), column (i,j) holds
/// (-1)^(p+q-i-j) e^{p,q}_{i,j}(gamma); entries lie in O_K.
KMatrix transport_matrix(const Mat2& gamma, int k);

/// M(kappa) = sum of transport_matrix(g_n) over the Hurwitz continued
/// fraction of kappa, so r_{p,q}(kappa,F) = [M(kappa) r]_{(p,q)}.
KMatrix cusp_matrix(const QuadElem& kappa, int k);

/// c_{p,q}(kappa) = sum_{i<=p, j<=q} C(k-i,p-i) C(k-j,q-j)
///                  kappa^(p-i) conj(kappa)^(q-j) r_{i,j}(kappa).
KMatrix r_to_c(const QuadElem& kappa, int k);

/// Inverse direction, carrying the (-kappa)^(p-i) (-conj kappa)^(q-j) signs.
KMatrix c_to_r(const QuadElem& kappa, int k);

/// coeffs[p][q] = C(k,p) C(k,q) v[(p,q)] -- diagonal binomial scaling taking
/// period coordinates to the period polynomial's monomial coefficients.
PolyKK period_to_monomial(const PeriodVector& v);
PeriodVector monomial_to_period(const PolyKK& poly);

}  // namespace bianchi
