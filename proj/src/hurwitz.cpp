#include "bianchi/hurwitz.hpp"

#include <ostream>

namespace bianchi {

Mat2 Mat2::inverse() const {
  QuadInt u = det();
  if (!u.is_unit()) throw std::domain_error("Mat2::inverse: non-unit determinant");
  QuadInt ui = u.conj();  // u^-1
  return {d * ui, (-b) * ui, (-c) * ui, a * ui};
}

Mat2 Mat2::pow(long e) const {
  Mat2 base = e < 0 ? inverse() : *this;
  unsigned long u = static_cast<unsigned long>(e < 0 ? -e : e);
  Mat2 acc = Mat2::identity(d_code());
  while (u > 0) {
    if (u & 1) acc = acc * base;
    base = base * base;
    u >>= 1;
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Mat2& g) {
  return os << "[[" << g.a << ", " << g.b << "], [" << g.c << ", " << g.d
            << "]]";
}

ProjPoint mobius(const Mat2& g, const ProjPoint& p) {
  QuadElem a(g.a), b(g.b), c(g.c), d(g.d);
  return {a * p.num + b * p.den, c * p.num + d * p.den};
}

bool proj_equal(const ProjPoint& p, const ProjPoint& q) {
  if ((p.num.is_zero() && p.den.is_zero()) ||
      (q.num.is_zero() && q.den.is_zero()))
    throw std::domain_error("(0 : 0) is not a projective point");
  return p.num * q.den == q.num * p.den;
}

CFExpansion expand(const QuadElem& kappa) {
  const int dc = kappa.d_code();
  CFExpansion cf{kappa, {}, {}, {}};
  cf.convergents.emplace_back(QuadInt::zero(dc), QuadInt::one(dc));  // n = -2
  cf.convergents.emplace_back(QuadInt::one(dc), QuadInt::zero(dc));  // n = -1

  QuadElem cur = kappa;
  long n = 0;
  while (true) {
    QuadInt beta = nearest_int(cur);
    cf.betas.push_back(beta);
    const auto& [mu1, nu1] = cf.convergent(n - 1);
    const auto& [mu2, nu2] = cf.convergent(n - 2);
    cf.convergents.emplace_back(beta * mu1 + mu2, beta * nu1 + nu2);

    if (n == 0) {
      cf.matrices.push_back(
          {QuadInt::one(dc), beta, QuadInt::zero(dc), QuadInt::one(dc)});
    } else {
      const bool even = (n % 2 == 0);
      Mat2 step{QuadInt::zero(dc), QuadInt(dc, even ? -1 : 1, 0),
                QuadInt(dc, even ? 1 : -1, 0), beta};
      cf.matrices.push_back(cf.matrices.back() * step);
    }

    QuadElem rem = cur - QuadElem(beta);
    if (rem.is_zero()) break;
    cur = rem.inverse();  // norm of the remainder is < 1, so norms of the
                          // reduced denominators strictly decrease
    ++n;
  }
  return cf;
}

std::string generator_name(Generator g) {
  switch (g) {
    case Generator::S:  return "S";
    case Generator::T:  return "T";
    case Generator::Tw: return "Tw";
    case Generator::U:  return "U";
    case Generator::L:  return "L";
    case Generator::E:  return "E";
  }
  return "?";
}

Mat2 generator_matrix(int d_code, Generator g) {
  const QuadInt zero = QuadInt::zero(d_code);
  const QuadInt one = QuadInt::one(d_code);
  const QuadInt w = QuadInt::omega(d_code);
  switch (g) {
    case Generator::S:
      return {zero, -one, one, zero};
    case Generator::T:
      return {one, one, zero, one};
    case Generator::Tw:
      return {one, w, zero, one};
    case Generator::U:
      return generator_matrix(d_code, Generator::T) *
             generator_matrix(d_code, Generator::S);
    case Generator::L:
      if (d_code == 1) return {w, zero, zero, -w};
      if (d_code == 3) return {w * w, zero, zero, w};
      throw std::domain_error("generator L unavailable for D=" +
                              std::to_string(d_code));
    case Generator::E: {
      if (d_code != 11)
        throw std::domain_error("generator E unavailable for D=" +
                                std::to_string(d_code));
      Mat2 S = generator_matrix(d_code, Generator::S);
      Mat2 T = generator_matrix(d_code, Generator::T);
      Mat2 Tw = generator_matrix(d_code, Generator::Tw);
      return Tw.inverse() * S * Tw * S * T;
    }
  }
  throw std::domain_error("unknown generator");
}

std::map<std::string, Mat2> generators(int d_code) {
  std::map<std::string, Mat2> out;
  for (Generator g : {Generator::S, Generator::T, Generator::Tw, Generator::U})
    out.emplace(generator_name(g), generator_matrix(d_code, g));
  if (d_code == 1 || d_code == 3)
    out.emplace("L", generator_matrix(d_code, Generator::L));
  if (d_code == 11) out.emplace("E", generator_matrix(d_code, Generator::E));
  return out;
}

}  // namespace bianchi
