#include "bianchi/polyspace.hpp"

#include <stdexcept>

namespace bianchi {

KMatrix KMatrix::identity(int d_code, size_t n) {
  KMatrix m(d_code, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = QuadElem::one(d_code);
  return m;
}

KMatrix KMatrix::operator+(const KMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("KMatrix shape mismatch in +");
  KMatrix out(d_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + o.e_[i];
  return out;
}

KMatrix KMatrix::operator-(const KMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("KMatrix shape mismatch in -");
  KMatrix out(d_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - o.e_[i];
  return out;
}

KMatrix& KMatrix::operator+=(const KMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("KMatrix shape mismatch in +=");
  for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

KMatrix KMatrix::operator*(const KMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("KMatrix shape mismatch in *");
  KMatrix out(d_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t l = 0; l < cols_; ++l) {
      const QuadElem& x = at(i, l);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        const QuadElem& y = o.at(l, j);
        if (y.is_zero()) continue;
        out.at(i, j) += x * y;
      }
    }
  }
  return out;
}

KMatrix KMatrix::operator*(const QuadElem& s) const {
  KMatrix out(d_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] * s;
  return out;
}

bool KMatrix::operator==(const KMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

KMatrix KMatrix::transpose() const {
  KMatrix out(d_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

std::vector<QuadElem> KMatrix::apply(const std::vector<QuadElem>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("KMatrix::apply size mismatch");
  std::vector<QuadElem> out(rows_, QuadElem::zero(d_));
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero() || v[j].is_zero()) continue;
      out[i] += at(i, j) * v[j];
    }
  return out;
}

bool KMatrix::is_zero() const {
  for (const QuadElem& v : e_)
    if (!v.is_zero()) return false;
  return true;
}

bool KMatrix::is_integral() const {
  for (const QuadElem& v : e_)
    if (!v.is_integral()) return false;
  return true;
}

QuadElem KMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
  QuadElem t = QuadElem::zero(d_);
  for (size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

void KMatrix::scale_row(size_t r, const QuadElem& s) {
  for (size_t j = 0; j < cols_; ++j) at(r, j) = at(r, j) * s;
}

bool PolyKK::is_zero() const {
  for (const QuadElem& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

bool PolyKK::operator==(const PolyKK& o) const {
  return d_code == o.d_code && k == o.k && coeffs == o.coeffs;
}

Int binom(long n, long j) {
  if (j < 0 || j > n || n < 0) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(j));
  return out;
}

namespace {

// power with the convention 0^0 = 1
QuadInt qpow(const QuadInt& v, long e) {
  if (e == 0) return QuadInt::one(v.d_code());
  return v.pow(static_cast<unsigned long>(e));
}

// Coefficients of (r X + s Y)^(k-p) (u X + v Y)^p by Y-degree.
// out[P] = sum over w1+w2 = P of C(k-p,w1) C(p,w2) r^(k-p-w1) s^w1 u^(p-w2) v^w2.
std::vector<QuadInt> line_power_coeffs(const QuadInt& r, const QuadInt& s,
                                       const QuadInt& u, const QuadInt& v,
                                       int k, int p) {
  const int dc = r.d_code();
  std::vector<QuadInt> pr(static_cast<size_t>(k) + 1, QuadInt::zero(dc));
  std::vector<QuadInt> out(static_cast<size_t>(k) + 1, QuadInt::zero(dc));
  for (int w1 = 0; w1 <= k - p; ++w1)
    pr[w1] = qpow(r, k - p - w1) * qpow(s, w1) * binom(k - p, w1);
  for (int w2 = 0; w2 <= p; ++w2) {
    QuadInt f = qpow(u, p - w2) * qpow(v, w2) * binom(p, w2);
    if (f.is_zero()) continue;
    for (int w1 = 0; w1 <= k - p; ++w1) {
      if (pr[w1].is_zero()) continue;
      out[w1 + w2] = out[w1 + w2] + pr[w1] * f;
    }
  }
  return out;
}

}  // namespace

KMatrix slash_matrix(const Mat2& gamma, int k) {
  const int dc = gamma.d_code();
  const size_t dim = vkk_dim(k);
  // X^(k-p) Y^p maps to (aX+bY)^(k-p) (cX+dY)^p; the conjugate block uses
  // the conjugated entries.  Output coefficient factorizes over the two blocks.
  std::vector<std::vector<QuadInt>> plain, bar;
  plain.reserve(k + 1);
  bar.reserve(k + 1);
  for (int p = 0; p <= k; ++p) {
    plain.push_back(line_power_coeffs(gamma.a, gamma.b, gamma.c, gamma.d, k, p));
    bar.push_back(line_power_coeffs(gamma.a.conj(), gamma.b.conj(),
                                    gamma.c.conj(), gamma.d.conj(), k, p));
  }
  KMatrix m(dc, dim, dim);
  for (int p = 0; p <= k; ++p)
    for (int q = 0; q <= k; ++q) {
      const size_t col = static_cast<size_t>(p) * (k + 1) + q;
      for (int P = 0; P <= k; ++P) {
        if (plain[p][P].is_zero()) continue;
        for (int Q = 0; Q <= k; ++Q) {
          if (bar[q][Q].is_zero()) continue;
          m.at(static_cast<size_t>(P) * (k + 1) + Q, col) =
              QuadElem(plain[p][P] * bar[q][Q]);
        }
      }
    }
  return m;
}

Mat2 term_matrix(int d_code, const std::vector<GenPower>& factors) {
  Mat2 acc = Mat2::identity(d_code);
  for (const GenPower& f : factors)
    acc = acc * generator_matrix(d_code, f.gen).pow(f.exp);
  return acc;
}

KMatrix word_slash_matrix(int d_code, const GroupWord& w, int k) {
  KMatrix acc(d_code, vkk_dim(k), vkk_dim(k));
  for (const WordTerm& term : w.terms) {
    KMatrix m = slash_matrix(term_matrix(d_code, term.factors), k);
    acc += m * QuadElem(d_code, Rat(term.coeff), 0);
  }
  return acc;
}

PolyKK apply_group_word(const PolyKK& poly, const GroupWord& w) {
  KMatrix m = word_slash_matrix(poly.d_code, w, poly.k);
  PolyKK out = PolyKK::zero(poly.d_code, poly.k);
  out.coeffs = m.apply(poly.coeffs);
  return out;
}

}  // namespace bianchi
