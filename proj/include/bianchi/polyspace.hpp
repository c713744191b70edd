#pragma once

#include <vector>

#include "bianchi/hurwitz.hpp"
#include "bianchi/quadfield.hpp"

namespace bianchi {

/// Dense matrix over K.
class KMatrix {
 public:
  KMatrix(int d_code, size_t rows, size_t cols)
      : d_(d_code), rows_(rows), cols_(cols),
        e_(rows * cols, QuadElem::zero(d_code)) {}

  static KMatrix identity(int d_code, size_t n);

  int d_code() const { return d_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  QuadElem& at(size_t r, size_t c) { return e_[r * cols_ + c]; }
  const QuadElem& at(size_t r, size_t c) const { return e_[r * cols_ + c]; }

  KMatrix operator+(const KMatrix& o) const;
  KMatrix operator-(const KMatrix& o) const;
  KMatrix operator*(const KMatrix& o) const;
  KMatrix operator*(const QuadElem& s) const;
  KMatrix& operator+=(const KMatrix& o);
  bool operator==(const KMatrix& o) const;
  bool operator!=(const KMatrix& o) const { return !(*this == o); }

  KMatrix transpose() const;
  std::vector<QuadElem> apply(const std::vector<QuadElem>& v) const;
  bool is_zero() const;
  /// All entries in O_K (denominator 1 after reduction).
  bool is_integral() const;
  QuadElem trace() const;

  void scale_row(size_t r, const QuadElem& s);

 private:
  int d_;
  size_t rows_, cols_;
  std::vector<QuadElem> e_;
};

/// Element of V_{k,k}: coeffs[p][q] multiplies X^(k-p) Y^p Xbar^(k-q) Ybar^q,
/// flattened as idx(p, q) = p*(k+1) + q.
struct PolyKK {
  int d_code;
  int k;
  std::vector<QuadElem> coeffs;  // (k+1)^2 entries

  static PolyKK zero(int d_code, int k) {
    return {d_code, k,
            std::vector<QuadElem>(static_cast<size_t>(k + 1) * (k + 1),
                                  QuadElem::zero(d_code))};
  }

  size_t idx(int p, int q) const {
    return static_cast<size_t>(p) * (k + 1) + static_cast<size_t>(q);
  }
  QuadElem& at(int p, int q) { return coeffs[idx(p, q)]; }
  const QuadElem& at(int p, int q) const { return coeffs[idx(p, q)]; }

  bool is_zero() const;
  bool operator==(const PolyKK& o) const;
};

inline size_t vkk_dim(int k) {
  return static_cast<size_t>(k + 1) * (k + 1);
}

/// Binomial coefficient, zero when j < 0 or j > n.
Int binom(long n, long j);

/// The (k+1)^2 x (k+1)^2 matrix M of the right slash action on V_{k,k}:
/// coeffs(P|_gamma) = M * coeffs(P).  Composition satisfies
/// M(g1*g2) = M(g2)*M(g1), realizing (P|_g1)|_g2 = P|_{g1 g2}.
KMatrix slash_matrix(const Mat2& gamma, int k);

/// One term of a formal integer combination of generator products;
/// an empty factor list denotes the identity matrix.
struct GenPower {
  Generator gen;
  long exp;
};
struct WordTerm {
  Int coeff;
  std::vector<GenPower> factors;
};
struct GroupWord {
  std::vector<WordTerm> terms;
};

Mat2 term_matrix(int d_code, const std::vector<GenPower>& factors);

/// Sum of coeff * slash_matrix(product) over the word's terms.
KMatrix word_slash_matrix(int d_code, const GroupWord& w, int k);

PolyKK apply_group_word(const PolyKK& poly, const GroupWord& w);

}  // namespace bianchi
