#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bianchi {

using Int = mpz_class;
using Rat = mpq_class;

class QuadInt;
class QuadElem;
struct FieldParams;

bool valid_d_code(int d_code);
const FieldParams& field_params(int d_code);

namespace detail {
// omega table: omega = i, i*sqrt(2), (-1+i*sqrt(3))/2, (1+i*sqrt(7))/2, (1+i*sqrt(11))/2
// for D = 1, 2, 3, 7, 11.  t = omega + conj(omega), m = omega * conj(omega).
int omega_trace_of(int d_code);
int omega_norm_of(int d_code);
void check_same_field(int lhs, int rhs);
}  // namespace detail

/// Element a + b*omega of O_K, with omega^2 = t*omega - m.
class QuadInt {
 public:
  QuadInt(int d_code, Int a, Int b);

  static QuadInt zero(int d_code) { return QuadInt(d_code, 0, 0); }
  static QuadInt one(int d_code) { return QuadInt(d_code, 1, 0); }
  static QuadInt omega(int d_code) { return QuadInt(d_code, 0, 1); }

  int d_code() const { return d_; }
  const Int& a() const { return a_; }
  const Int& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_one() const { return a_ == 1 && b_ == 0; }
  bool is_unit() const { return norm() == 1; }

  QuadInt operator-() const { return QuadInt(d_, -a_, -b_); }
  QuadInt operator+(const QuadInt& o) const;
  QuadInt operator-(const QuadInt& o) const;
  QuadInt operator*(const QuadInt& o) const;
  QuadInt operator*(const Int& s) const { return QuadInt(d_, a_ * s, b_ * s); }
  bool operator==(const QuadInt& o) const;
  bool operator!=(const QuadInt& o) const { return !(*this == o); }

  QuadInt conj() const;
  Int norm() const;
  QuadInt pow(unsigned long e) const;

  // 2*Re(a + b*omega) = 2a + t*b; exact, used for ordering and sector tests.
  Int re_times2() const;

  std::string str() const;

 private:
  int d_;
  Int a_, b_;
};

/// Element x + y*omega of K = Q(sqrt(-D)), rational coordinates in lowest terms.
class QuadElem {
 public:
  QuadElem(int d_code, Rat x, Rat y);
  QuadElem(const QuadInt& v);  // lossless embedding O_K -> K

  static QuadElem zero(int d_code) { return QuadElem(d_code, 0, 0); }
  static QuadElem one(int d_code) { return QuadElem(d_code, 1, 0); }
  static QuadElem omega(int d_code) { return QuadElem(d_code, 0, 1); }

  int d_code() const { return d_; }
  const Rat& x() const { return x_; }
  const Rat& y() const { return y_; }

  bool is_zero() const { return x_ == 0 && y_ == 0; }
  bool is_one() const { return x_ == 1 && y_ == 0; }
  bool is_integral() const;
  std::optional<QuadInt> to_int() const;

  QuadElem operator-() const { return QuadElem(d_, -x_, -y_); }
  QuadElem operator+(const QuadElem& o) const;
  QuadElem operator-(const QuadElem& o) const;
  QuadElem operator*(const QuadElem& o) const;
  QuadElem operator*(const Rat& s) const { return QuadElem(d_, x_ * s, y_ * s); }
  QuadElem operator/(const QuadElem& o) const;
  QuadElem& operator+=(const QuadElem& o);
  bool operator==(const QuadElem& o) const;
  bool operator!=(const QuadElem& o) const { return !(*this == o); }

  QuadElem conj() const;
  Rat norm() const;
  QuadElem inverse() const;
  QuadElem pow(long e) const;  // negative exponents via inverse

  Rat re_times2() const;

  std::string str() const;

 private:
  int d_;
  Rat x_, y_;
};

struct FieldParams {
  int d_code;
  int omega_trace;             // t
  int omega_norm;              // m
  QuadInt delta;               // sqrt(-D) as an element of O_K
  std::vector<QuadInt> units;  // ordered counterclockwise from 1
};

std::ostream& operator<<(std::ostream& os, const QuadInt& v);
std::ostream& operator<<(std::ostream& os, const QuadElem& v);

/// Nearest integer rounding of a rational, ties toward minus infinity.
Int round_half_down(const Rat& x);

/// The element of O_K nearest to kappa; ties resolved by smallest real
/// part, then smallest omega-coordinate.
QuadInt nearest_int(const QuadElem& kappa);

/// True when z lies in the argument sector [0, 2*pi/#units) of its field.
bool in_canonical_sector(const QuadInt& z);

/// The associate u*a, u a unit, lying in the canonical argument sector.
QuadInt canonical_associate(const QuadInt& a);

/// Euclidean gcd via nearest-integer division, canonicalized.
QuadInt euclid_gcd(const QuadInt& a, const QuadInt& b);

/// Quotient n/d in O_K when d | n exactly, nullopt otherwise.
std::optional<QuadInt> exact_div(const QuadInt& n, const QuadInt& d);

/// Canonical prime-power factorization of n (unit part dropped).
std::vector<std::pair<QuadInt, unsigned>> factor(const QuadInt& n);

/// One canonical generator per ideal divisor of (n), sorted by
/// (norm, real part, omega-coordinate).
std::vector<QuadInt> divisors(const QuadInt& n);

/// Complete set of representatives of O_K/(d) from a Hermite-normal-form
/// basis of the lattice d*O_K; optionally restricted to units of the quotient.
std::vector<QuadInt> residues(const QuadInt& d, bool coprime_only);

/// |(O_K/(n))^x| by counting coprime residues.
Int phi_tilde(const QuadInt& n);

/// Same totient via the multiplicative formula prod N(pi^e) - N(pi^(e-1)).
Int phi_tilde_formula(const QuadInt& n);

/// sigma-tilde_k(n) = sum over ideal divisors d of |d|^k, k even.
Int sigma_tilde(unsigned long exponent, const QuadInt& n);

/// Nonzero canonical elements with norm <= bound, sorted by
/// (norm, real part, omega-coordinate); units excluded unless requested.
std::vector<QuadInt> canonical_elements_up_to(int d_code, const Int& bound,
                                              bool include_units);

}  // namespace bianchi
