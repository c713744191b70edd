#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bianchi/quadfield.hpp"

namespace bianchi {

/// 2x2 matrix ((a, b), (c, d)) over O_K.
struct Mat2 {
  QuadInt a, b, c, d;

  static Mat2 identity(int d_code) {
    return {QuadInt::one(d_code), QuadInt::zero(d_code),
            QuadInt::zero(d_code), QuadInt::one(d_code)};
  }

  int d_code() const { return a.d_code(); }
  QuadInt det() const { return a * d - b * c; }

  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
  }

  bool operator==(const Mat2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
  bool operator!=(const Mat2& o) const { return !(*this == o); }

  /// Inverse for unit determinant: u^-1 = conj(u) since N(u) = 1.
  Mat2 inverse() const;
  Mat2 pow(long e) const;
};

std::ostream& operator<<(std::ostream& os, const Mat2& g);

/// Point of P^1(K) as (num : den); infinity is (1 : 0).
struct ProjPoint {
  QuadElem num, den;

  static ProjPoint infinity(int d_code) {
    return {QuadElem::one(d_code), QuadElem::zero(d_code)};
  }
  static ProjPoint of(const QuadElem& v) {
    return {v, QuadElem::one(v.d_code())};
  }
  bool is_infinity() const { return den.is_zero(); }
};

ProjPoint mobius(const Mat2& g, const ProjPoint& p);
bool proj_equal(const ProjPoint& p, const ProjPoint& q);

/// Hurwitz continued fraction of kappa with convergents and matrices.
/// convergents[i] = (mu_{i-2}, nu_{i-2}) covers indices n = -2..m;
/// matrices[n] = g_n for n = 0..m.
struct CFExpansion {
  QuadElem kappa;
  std::vector<QuadInt> betas;
  std::vector<std::pair<QuadInt, QuadInt>> convergents;
  std::vector<Mat2> matrices;

  const std::pair<QuadInt, QuadInt>& convergent(long n) const {
    return convergents.at(static_cast<size_t>(n + 2));
  }
};

/// Nearest-integer continued fraction expansion; terminates for every
/// kappa in K with the final remainder exactly zero.
CFExpansion expand(const QuadElem& kappa);

enum class Generator { S, T, Tw, U, L, E };

std::string generator_name(Generator g);

/// The matrix of a generator for the given field; L exists only for
/// D in {1, 3} and E only for D = 11.
Mat2 generator_matrix(int d_code, Generator g);

/// All generators available for the field, by name.
std::map<std::string, Mat2> generators(int d_code);

}  // namespace bianchi
