#include "bianchi/quadfield.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

namespace bianchi {

bool valid_d_code(int d_code) {
  return d_code == 1 || d_code == 2 || d_code == 3 || d_code == 7 ||
         d_code == 11;
}

namespace detail {

int omega_trace_of(int d_code) {
  switch (d_code) {
    case 1:
    case 2:
      return 0;
    case 3:
      return -1;
    case 7:
    case 11:
      return 1;
  }
  throw std::domain_error("unsupported field D=" + std::to_string(d_code));
}

int omega_norm_of(int d_code) {
  switch (d_code) {
    case 1:
      return 1;
    case 2:
      return 2;
    case 3:
      return 1;
    case 7:
      return 2;
    case 11:
      return 3;
  }
  throw std::domain_error("unsupported field D=" + std::to_string(d_code));
}

void check_same_field(int lhs, int rhs) {
  if (lhs != rhs)
    throw std::invalid_argument("mixed fields D=" + std::to_string(lhs) +
                                " and D=" + std::to_string(rhs));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// QuadInt

QuadInt::QuadInt(int d_code, Int a, Int b)
    : d_(d_code), a_(std::move(a)), b_(std::move(b)) {
  if (!valid_d_code(d_))
    throw std::domain_error("unsupported field D=" + std::to_string(d_));
}

QuadInt QuadInt::operator+(const QuadInt& o) const {
  detail::check_same_field(d_, o.d_);
  return QuadInt(d_, a_ + o.a_, b_ + o.b_);
}

QuadInt QuadInt::operator-(const QuadInt& o) const {
  detail::check_same_field(d_, o.d_);
  return QuadInt(d_, a_ - o.a_, b_ - o.b_);
}

QuadInt QuadInt::operator*(const QuadInt& o) const {
  detail::check_same_field(d_, o.d_);
  const int t = detail::omega_trace_of(d_);
  const int m = detail::omega_norm_of(d_);
  // (a1 + b1 w)(a2 + b2 w), w^2 = t w - m
  Int bb = b_ * o.b_;
  Int a = a_ * o.a_ - m * bb;
  Int b = a_ * o.b_ + b_ * o.a_ + t * bb;
  return QuadInt(d_, std::move(a), std::move(b));
}

bool QuadInt::operator==(const QuadInt& o) const {
  detail::check_same_field(d_, o.d_);
  return a_ == o.a_ && b_ == o.b_;
}

QuadInt QuadInt::conj() const {
  const int t = detail::omega_trace_of(d_);
  return QuadInt(d_, a_ + t * b_, -b_);
}

Int QuadInt::norm() const {
  const int t = detail::omega_trace_of(d_);
  const int m = detail::omega_norm_of(d_);
  return a_ * a_ + t * a_ * b_ + m * b_ * b_;
}

QuadInt QuadInt::pow(unsigned long e) const {
  QuadInt acc = QuadInt::one(d_);
  QuadInt base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Int QuadInt::re_times2() const {
  const int t = detail::omega_trace_of(d_);
  return 2 * a_ + t * b_;
}

// ---------------------------------------------------------------------------
// QuadElem

QuadElem::QuadElem(int d_code, Rat x, Rat y)
    : d_(d_code), x_(std::move(x)), y_(std::move(y)) {
  if (!valid_d_code(d_))
    throw std::domain_error("unsupported field D=" + std::to_string(d_));
  x_.canonicalize();
  y_.canonicalize();
}

QuadElem::QuadElem(const QuadInt& v)
    : d_(v.d_code()), x_(v.a()), y_(v.b()) {}

bool QuadElem::is_integral() const {
  return x_.get_den() == 1 && y_.get_den() == 1;
}

std::optional<QuadInt> QuadElem::to_int() const {
  if (!is_integral()) return std::nullopt;
  return QuadInt(d_, x_.get_num(), y_.get_num());
}

QuadElem QuadElem::operator+(const QuadElem& o) const {
  detail::check_same_field(d_, o.d_);
  return QuadElem(d_, x_ + o.x_, y_ + o.y_);
}

QuadElem QuadElem::operator-(const QuadElem& o) const {
  detail::check_same_field(d_, o.d_);
  return QuadElem(d_, x_ - o.x_, y_ - o.y_);
}

QuadElem QuadElem::operator*(const QuadElem& o) const {
  detail::check_same_field(d_, o.d_);
  const int t = detail::omega_trace_of(d_);
  const int m = detail::omega_norm_of(d_);
  Rat yy = y_ * o.y_;
  Rat x = x_ * o.x_ - m * yy;
  Rat y = x_ * o.y_ + y_ * o.x_ + t * yy;
  return QuadElem(d_, std::move(x), std::move(y));
}

QuadElem QuadElem::operator/(const QuadElem& o) const {
  detail::check_same_field(d_, o.d_);
  if (o.is_zero()) throw std::domain_error("division by zero in K");
  return *this * o.inverse();
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
  detail::check_same_field(d_, o.d_);
  x_ += o.x_;
  y_ += o.y_;
  return *this;
}

bool QuadElem::operator==(const QuadElem& o) const {
  detail::check_same_field(d_, o.d_);
  return x_ == o.x_ && y_ == o.y_;
}

QuadElem QuadElem::conj() const {
  const int t = detail::omega_trace_of(d_);
  return QuadElem(d_, x_ + t * y_, -y_);
}

Rat QuadElem::norm() const {
  const int t = detail::omega_trace_of(d_);
  const int m = detail::omega_norm_of(d_);
  return x_ * x_ + t * x_ * y_ + m * y_ * y_;
}

QuadElem QuadElem::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in K");
  Rat n = norm();
  QuadElem c = conj();
  return QuadElem(d_, c.x() / n, c.y() / n);
}

QuadElem QuadElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  QuadElem acc = QuadElem::one(d_);
  QuadElem base = *this;
  unsigned long u = static_cast<unsigned long>(e);
  while (u > 0) {
    if (u & 1) acc = acc * base;
    base = base * base;
    u >>= 1;
  }
  return acc;
}

Rat QuadElem::re_times2() const {
  const int t = detail::omega_trace_of(d_);
  return 2 * x_ + t * y_;
}

// ---------------------------------------------------------------------------
// Formatting (canonical element grammar: <rat>, <rat>*w, <rat>+/-<rat>*w)

namespace {

std::string rat_str(const Rat& r) { return r.get_str(); }

std::string elem_str(const Rat& x, const Rat& y) {
  if (y == 0) return rat_str(x);
  Rat ay = y < 0 ? Rat(-y) : y;
  std::string w = rat_str(ay) + "*w";
  if (x == 0) return (y < 0 ? "-" : "") + w;
  return rat_str(x) + (y < 0 ? "-" : "+") + w;
}

}  // namespace

std::string QuadInt::str() const { return elem_str(Rat(a_), Rat(b_)); }
std::string QuadElem::str() const { return elem_str(x_, y_); }

std::ostream& operator<<(std::ostream& os, const QuadInt& v) {
  return os << v.str();
}
std::ostream& operator<<(std::ostream& os, const QuadElem& v) {
  return os << v.str();
}

// ---------------------------------------------------------------------------
// Field parameters

namespace {

FieldParams make_params(int d) {
  FieldParams p{d, detail::omega_trace_of(d), detail::omega_norm_of(d),
                QuadInt::zero(d), {}};
  switch (d) {
    case 1:
    case 2:
      p.delta = QuadInt(d, 0, 1);  // omega itself is i resp. i*sqrt(2)
      break;
    case 3:
      p.delta = QuadInt(d, 1, 2);  // 1 + 2*omega = i*sqrt(3)
      break;
    case 7:
    case 11:
      p.delta = QuadInt(d, -1, 2);  // 2*omega - 1 = i*sqrt(D)
      break;
  }
  if (d == 1) {
    p.units = {QuadInt(d, 1, 0), QuadInt(d, 0, 1), QuadInt(d, -1, 0),
               QuadInt(d, 0, -1)};
  } else if (d == 3) {
    p.units = {QuadInt(d, 1, 0),  QuadInt(d, 1, 1),   QuadInt(d, 0, 1),
               QuadInt(d, -1, 0), QuadInt(d, -1, -1), QuadInt(d, 0, -1)};
  } else {
    p.units = {QuadInt(d, 1, 0), QuadInt(d, -1, 0)};
  }
  return p;
}

}  // namespace

const FieldParams& field_params(int d_code) {
  static const std::map<int, FieldParams> table = [] {
    std::map<int, FieldParams> t;
    for (int d : {1, 2, 3, 7, 11}) t.emplace(d, make_params(d));
    return t;
  }();
  auto it = table.find(d_code);
  if (it == table.end())
    throw std::domain_error("unsupported field D=" + std::to_string(d_code));
  return it->second;
}

// ---------------------------------------------------------------------------
// Rounding and nearest lattice point

Int round_half_down(const Rat& x) {
  // ceil(x - 1/2): round to nearest, ties toward minus infinity
  Int num = 2 * x.get_num() - x.get_den();
  Int den = 2 * x.get_den();
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

QuadInt nearest_int(const QuadElem& kappa) {
  const int d = kappa.d_code();
  const Int cx = round_half_down(kappa.x());
  const Int cy = round_half_down(kappa.y());
  std::optional<QuadInt> best;
  Rat best_dist;
  // 3x3 neighborhood of the coordinate-wise rounding; the basis cell is
  // small enough that the true minimizer always lies in this window.
  for (int e2 = -1; e2 <= 1; ++e2) {
    for (int e1 = -1; e1 <= 1; ++e1) {
      QuadInt cand(d, cx + e1, cy + e2);
      Rat dist = (kappa - QuadElem(cand)).norm();
      if (!best) {
        best = cand;
        best_dist = dist;
        continue;
      }
      if (dist > best_dist) continue;
      if (dist < best_dist) {
        best = cand;
        best_dist = dist;
        continue;
      }
      // tie: smaller real part, then smaller omega-coordinate
      Int cr = cand.re_times2(), br = best->re_times2();
      if (cr < br || (cr == br && cand.b() < best->b())) best = cand;
    }
  }
  return *best;
}

// ---------------------------------------------------------------------------
// Canonical associates

bool in_canonical_sector(const QuadInt& z) {
  // Im(z) has the sign of b; Re(z) has the sign of 2a + t*b.
  const size_t n_units = field_params(z.d_code()).units.size();
  const Int& a = z.a();
  const Int& b = z.b();
  switch (n_units) {
    case 2:  // [0, pi)
      return b > 0 || (b == 0 && a > 0);
    case 4:  // [0, pi/2); D=1, Re = a, Im = b
      return a > 0 && b >= 0;
    case 6:  // [0, pi/3); D=3, boundary ray direction 1+omega
      return b >= 0 && a > b;
  }
  return false;
}

QuadInt canonical_associate(const QuadInt& a) {
  if (a.is_zero())
    throw std::domain_error("canonical_associate of zero");
  const FieldParams& F = field_params(a.d_code());
  for (const QuadInt& u : F.units) {
    QuadInt z = u * a;
    if (in_canonical_sector(z)) return z;
  }
  // unreachable: the sectors tile the punctured plane
  throw std::logic_error("no canonical associate found");
}

// ---------------------------------------------------------------------------
// Euclidean gcd

QuadInt euclid_gcd(const QuadInt& a, const QuadInt& b) {
  if (a.is_zero() && b.is_zero())
    throw std::domain_error("gcd(0, 0) undefined");
  QuadInt x = a, y = b;
  while (!y.is_zero()) {
    QuadInt q = nearest_int(QuadElem(x) / QuadElem(y));
    QuadInt r = x - y * q;
    x = y;
    y = r;
  }
  return canonical_associate(x);
}

std::optional<QuadInt> exact_div(const QuadInt& n, const QuadInt& d) {
  if (d.is_zero()) throw std::domain_error("division by zero in O_K");
  QuadInt p = n * d.conj();
  Int nd = d.norm();
  if (p.a() % nd != 0 || p.b() % nd != 0) return std::nullopt;
  return QuadInt(n.d_code(), p.a() / nd, p.b() / nd);
}

// ---------------------------------------------------------------------------
// Factorization and divisors

namespace {

// Prime elements of O_K above the rational prime p, canonicalized.
// Exhaustive: N(a+bw) = p means (2a+tb)^2 = 4p - (4m-t^2) b^2.
std::vector<QuadInt> primes_above(int d_code, const Int& p) {
  const int t = detail::omega_trace_of(d_code);
  const int m = detail::omega_norm_of(d_code);
  const Int disc4 = 4 * m - t * t;
  std::vector<QuadInt> out;
  Int bmax;
  {
    Int lim = 4 * p / disc4;
    mpz_sqrt(bmax.get_mpz_t(), lim.get_mpz_t());
  }
  for (Int b = -bmax; b <= bmax; ++b) {
    Int rhs = 4 * p - disc4 * b * b;
    if (rhs < 0) continue;
    if (mpz_perfect_square_p(rhs.get_mpz_t()) == 0) continue;
    Int s;
    mpz_sqrt(s.get_mpz_t(), rhs.get_mpz_t());
    for (int sign : {1, -1}) {
      Int a2 = sign * s - t * b;
      if (a2 % 2 != 0) continue;
      QuadInt cand(d_code, a2 / 2, b);
      if (cand.norm() != p) continue;
      QuadInt c = canonical_associate(cand);
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
      if (s == 0) break;
    }
  }
  if (out.empty()) out.push_back(QuadInt(d_code, p, 0));  // inert
  return out;
}

std::vector<std::pair<Int, unsigned>> factor_int(Int n) {
  std::vector<std::pair<Int, unsigned>> out;
  for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool canonical_less(const QuadInt& lhs, const QuadInt& rhs) {
  Int ln = lhs.norm(), rn = rhs.norm();
  if (ln != rn) return ln < rn;
  Int lr = lhs.re_times2(), rr = rhs.re_times2();
  if (lr != rr) return lr < rr;
  return lhs.b() < rhs.b();
}

}  // namespace

std::vector<std::pair<QuadInt, unsigned>> factor(const QuadInt& n) {
  if (n.is_zero()) throw std::domain_error("factor(0) undefined");
  std::vector<std::pair<QuadInt, unsigned>> out;
  QuadInt rest = n;
  for (const auto& [p, pe] : factor_int(n.norm())) {
    (void)pe;
    for (const QuadInt& pi : primes_above(n.d_code(), p)) {
      unsigned e = 0;
      while (true) {
        auto q = exact_div(rest, pi);
        if (!q) break;
        rest = *q;
        ++e;
      }
      if (e > 0) out.emplace_back(pi, e);
    }
  }
  assert(rest.is_unit());
  return out;
}

std::vector<QuadInt> divisors(const QuadInt& n) {
  if (n.is_zero()) throw std::domain_error("divisors(0) undefined");
  auto fac = factor(n);
  std::vector<QuadInt> out{QuadInt::one(n.d_code())};
  for (const auto& [pi, e] : fac) {
    std::vector<QuadInt> next;
    next.reserve(out.size() * (e + 1));
    for (const QuadInt& d : out) {
      QuadInt acc = d;
      next.push_back(canonical_associate(acc));
      for (unsigned i = 1; i <= e; ++i) {
        acc = acc * pi;
        next.push_back(canonical_associate(acc));
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

// ---------------------------------------------------------------------------
// Residues mod d

std::vector<QuadInt> residues(const QuadInt& d, bool coprime_only) {
  if (d.is_zero()) throw std::domain_error("residues mod 0 undefined");
  const int dc = d.d_code();
  const int t = detail::omega_trace_of(dc);
  const int m = detail::omega_norm_of(dc);
  // The lattice d*O_K is spanned by d = (a0, b0) and
  // d*omega = (-m*b0, a0 + t*b0) in coordinates over {1, omega}.
  const Int& a0 = d.a();
  const Int& b0 = d.b();
  Int s2 = a0 + t * b0;
  Int g, xg, yg;
  mpz_gcdext(g.get_mpz_t(), xg.get_mpz_t(), yg.get_mpz_t(), b0.get_mpz_t(),
             s2.get_mpz_t());
  // Triangular basis (A, 0), (B, C) with C = g and A*C = N(d).
  Int C = g;
  Int A = d.norm() / g;
  std::vector<QuadInt> out;
  out.reserve(mpz_get_ui(d.norm().get_mpz_t()));
  for (Int y = 0; y < C; ++y) {
    for (Int x = 0; x < A; ++x) {
      QuadInt r(dc, x, y);
      if (coprime_only && euclid_gcd(r, d).norm() != 1) continue;
      out.push_back(r);
    }
  }
  return out;
}

Int phi_tilde(const QuadInt& n) {
  if (n.is_zero()) throw std::domain_error("phi_tilde(0) undefined");
  return Int(residues(n, true).size());
}

Int phi_tilde_formula(const QuadInt& n) {
  if (n.is_zero()) throw std::domain_error("phi_tilde(0) undefined");
  Int acc = 1;
  for (const auto& [pi, e] : factor(n)) {
    Int np = pi.norm();
    Int pe_1;  // N(pi)^(e-1)
    mpz_pow_ui(pe_1.get_mpz_t(), np.get_mpz_t(), e - 1);
    acc *= pe_1 * (np - 1);
  }
  return acc;
}

Int sigma_tilde(unsigned long exponent, const QuadInt& n) {
  if (exponent % 2 != 0)
    throw std::domain_error("sigma_tilde requires an even exponent");
  if (n.is_zero()) throw std::domain_error("sigma_tilde(0) undefined");
  Int acc = 0;
  for (const QuadInt& d : divisors(n)) {
    Int nd = d.norm();
    Int term;
    mpz_pow_ui(term.get_mpz_t(), nd.get_mpz_t(), exponent / 2);
    acc += term;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<QuadInt> canonical_elements_up_to(int d_code, const Int& bound,
                                              bool include_units) {
  const int t = detail::omega_trace_of(d_code);
  const int m = detail::omega_norm_of(d_code);
  const Int disc4 = 4 * m - t * t;
  std::vector<QuadInt> out;
  Int bmax;
  {
    Int lim = 4 * bound / disc4;
    mpz_sqrt(bmax.get_mpz_t(), lim.get_mpz_t());
  }
  for (Int b = 0; b <= bmax; ++b) {  // canonical sector has b >= 0
    Int rhs = 4 * bound - disc4 * b * b;
    if (rhs < 0) continue;
    Int s;
    mpz_sqrt(s.get_mpz_t(), rhs.get_mpz_t());
    Int alo = (-s - t * b - 1) / 2 - 1, ahi = (s - t * b) / 2 + 1;
    for (Int a = alo; a <= ahi; ++a) {
      QuadInt z(d_code, a, b);
      if (z.is_zero() || z.norm() > bound) continue;
      if (!include_units && z.is_unit()) continue;
      if (in_canonical_sector(z)) out.push_back(z);
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace bianchi
