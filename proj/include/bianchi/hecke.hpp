#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bianchi/periods.hpp"
#include "bianchi/relations.hpp"

namespace bianchi {

/// Bracket factor of the Hecke formula:
/// sum over e1*e2 = m (e1 a canonical divisor, e2 = m/e1 exact) of
/// e1^p conj(e1)^q e2^(k-p) conj(e2)^(k-q).
QuadInt epsilon_factor(const QuadInt& m, int p, int q, int k);

/// The matrix sending base periods to (t_{p,q}(d)): binomial/power weights
/// composed with cusp_matrix(b/d) summed over coprime residues b mod d.
KMatrix t_block(const QuadInt& d, int k);

/// Divisor generators and residue sets a Hecke matrix was assembled from;
/// entry choices matter for D in {1, 3} where units act nontrivially on
/// the epsilon factors.
struct RepresentativeLog {
  QuadInt input_n;
  QuadInt canonical_n;
  std::vector<QuadInt> divisor_gens;
  std::vector<std::vector<QuadInt>> residue_sets;  // coprime residues per divisor
};

struct HeckeMatrix {
  int d_code;
  int k;
  QuadInt n;  // canonical generator of the ideal
  KMatrix matrix;
  RepresentativeLog log;
};

/// Cache of t_block results keyed by divisor and k; fill ahead of time to
/// share work across hecke_matrix calls (entries for distinct divisors are
/// independent and may be computed in parallel).
using TBlockCache = std::map<std::string, KMatrix>;

std::string t_block_key(const QuadInt& d, int k);

/// A(n) on period coordinates per the closed-form divisor sum; the input
/// generator is replaced by its canonical associate so that A depends only
/// on the ideal (n); A(unit) = identity.
HeckeMatrix hecke_matrix(const QuadInt& n, int k,
                         const TBlockCache* cache = nullptr);

/// Monic characteristic polynomial coefficients, leading first, via the
/// trace recursion (exact over K, divisions by 1..size only).
std::vector<QuadElem> charpoly(const KMatrix& mat);

/// Evaluate a polynomial (leading coefficient first) at a square matrix.
KMatrix poly_eval(const std::vector<QuadElem>& coeffs, const KMatrix& mat);

/// Intersection of eigenspaces with W_{k,k}, in period coordinates: vectors
/// v with (A(n_i) - lambda_i I) v = 0 for all i and period_to_monomial(v)
/// in W_{k,k}.  w_tilde_image holds quotient coordinates of the image in
/// W~_{k,k} over the representative basis of wkk_basis.
struct EigenSpace {
  SubspaceBasis in_w;
  std::vector<std::vector<QuadElem>> w_tilde_image;
};

EigenSpace eigenspace_in_w(
    const std::vector<std::pair<QuadInt, QuadElem>>& pairs, int d_code, int k,
    const TBlockCache* cache = nullptr);

inline EigenSpace eigenspace_in_w(const QuadInt& n, const QuadElem& lambda,
                                  int k) {
  return eigenspace_in_w({{n, lambda}}, n.d_code(), k);
}

/// Whether the conjugated action of A on monomial coordinates maps W_{k,k}
/// into itself (reported, not asserted); `transpose` uses A^T instead.
struct StabilityReport {
  bool direct = false;
  bool transpose = false;
};
StabilityReport wkk_stability_check(const QuadInt& n, int k);

/// Matrix of the action induced on the quotient W~_{k,k} by a period-space
/// matrix, over the wkk_basis representatives; nullopt when the action does
/// not stabilize W.
std::optional<KMatrix> induced_on_w_tilde(const KMatrix& a_period, int d_code,
                                          int k);

/// Compares A(n1*n2) with A(n1)*A(n2) as actions on W~; nullopt when either
/// side fails to stabilize W.
std::optional<bool> multiplicativity_check(const QuadInt& n1,
                                           const QuadInt& n2, int k);

}  // namespace bianchi
