#pragma once

#include <vector>

#include "bianchi/polyspace.hpp"

namespace bianchi {

/// The per-field relation words cutting W_{k,k} out of V_{k,k}, and the
/// stacked coefficient map whose kernel is W_{k,k}.
struct RelationSystem {
  int d_code;
  int k;
  std::vector<GroupWord> words;
  KMatrix stacked;
};

RelationSystem build_relations(int d_code, int k);

/// Basis of a subspace of K^n in reduced echelon form (rows).
struct SubspaceBasis {
  size_t ambient_dim = 0;
  std::vector<std::vector<QuadElem>> basis;
  bool contains_coboundary = false;

  size_t dim() const { return basis.size(); }
};

/// Row echelon data: rows reduced, pivot columns ascending.
struct Echelon {
  std::vector<std::vector<QuadElem>> rows;
  std::vector<size_t> pivots;

  size_t rank() const { return rows.size(); }
};

/// Reduced row echelon form of a list of vectors (zero rows dropped).
Echelon rref(std::vector<std::vector<QuadElem>> rows, int d_code);

/// Residual of v after reduction against an echelon basis; zero iff v
/// lies in the row space.
std::vector<QuadElem> reduce_against(std::vector<QuadElem> v,
                                     const Echelon& ech);

bool in_rowspace(const std::vector<QuadElem>& v, const Echelon& ech);

/// Reduced-echelon basis of the right kernel; rank + nullity = cols.
SubspaceBasis kernel(const KMatrix& mat);

/// Coordinate vector of X^k Xbar^k - Y^k Ybar^k: 1 at (0,0), -1 at (k,k).
/// Identically zero for k = 0.
std::vector<QuadElem> coboundary_vector(int d_code, int k);

/// W_{k,k} with the coboundary membership flag, plus representatives of a
/// basis of the quotient W~_{k,k} (the coboundary extended to a basis of W
/// and dropped).
struct WkkBasis {
  SubspaceBasis w;
  std::vector<std::vector<QuadElem>> w_tilde;
};

WkkBasis wkk_basis(int d_code, int k);

}  // namespace bianchi
