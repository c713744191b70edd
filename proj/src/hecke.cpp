#include "bianchi/hecke.hpp"

#include <cassert>

namespace bianchi {

namespace {

QuadInt qpow(const QuadInt& v, long e) {
  if (e == 0) return QuadInt::one(v.d_code());
  return v.pow(static_cast<unsigned long>(e));
}

}  // namespace

QuadInt epsilon_factor(const QuadInt& m, int p, int q, int k) {
  if (m.is_zero()) throw std::domain_error("epsilon_factor: zero argument");
  if (p < 0 || p > k || q < 0 || q > k)
    throw std::domain_error("epsilon_factor: indices out of range");
  const int dc = m.d_code();
  QuadInt acc = QuadInt::zero(dc);
  for (const QuadInt& e1 : divisors(m)) {
    QuadInt e2 = *exact_div(m, e1);
    acc = acc + qpow(e1, p) * qpow(e1.conj(), q) * qpow(e2, k - p) *
                    qpow(e2.conj(), k - q);
  }
  return acc;
}

KMatrix t_block(const QuadInt& d, int k) {
  if (d.is_zero()) throw std::domain_error("t_block: zero modulus");
  const int dc = d.d_code();
  const size_t n = static_cast<size_t>(k) + 1;
  const QuadInt dbar = d.conj();
  KMatrix acc(dc, n * n, n * n);
  for (const QuadInt& b : residues(d, /*coprime_only=*/true)) {
    KMatrix cusp = cusp_matrix(QuadElem(b) / QuadElem(d), k);
    // weight W[(p,q)][(i,j)] = C(k-i,p-i) b^(p-i) d^i C(k-j,q-j) bbar^(q-j) dbar^j
    const QuadInt bbar = b.conj();
    std::vector<std::vector<QuadInt>> wp(n, std::vector<QuadInt>(n, QuadInt::zero(dc)));
    std::vector<std::vector<QuadInt>> wq(n, std::vector<QuadInt>(n, QuadInt::zero(dc)));
    for (int p = 0; p <= k; ++p)
      for (int i = 0; i <= p; ++i) {
        wp[p][i] = qpow(b, p - i) * qpow(d, i) * binom(k - i, p - i);
        wq[p][i] = qpow(bbar, p - i) * qpow(dbar, i) * binom(k - i, p - i);
      }
    KMatrix weight(dc, n * n, n * n);
    for (int p = 0; p <= k; ++p)
      for (int q = 0; q <= k; ++q)
        for (int i = 0; i <= p; ++i) {
          if (wp[p][i].is_zero()) continue;
          for (int j = 0; j <= q; ++j) {
            if (wq[q][j].is_zero()) continue;
            weight.at(p * n + q, i * n + j) = QuadElem(wp[p][i] * wq[q][j]);
          }
        }
    acc += weight * cusp;
  }
  return acc;
}

std::string t_block_key(const QuadInt& d, int k) {
  return std::to_string(d.d_code()) + "|" + std::to_string(k) + "|" + d.str();
}

HeckeMatrix hecke_matrix(const QuadInt& n, int k, const TBlockCache* cache) {
  if (n.is_zero()) throw std::domain_error("hecke_matrix(0) undefined");
  const int dc = n.d_code();
  const QuadInt nc = canonical_associate(n);
  const size_t dim = vkk_dim(k);

  HeckeMatrix out{dc, k, nc, KMatrix(dc, dim, dim), {n, nc, {}, {}}};
  for (const QuadInt& d : divisors(nc)) {
    QuadInt m = *exact_div(nc, d);
    KMatrix block = [&] {
      if (cache) {
        auto it = cache->find(t_block_key(d, k));
        if (it != cache->end()) return it->second;
      }
      return t_block(d, k);
    }();
    for (int p = 0; p <= k; ++p)
      for (int q = 0; q <= k; ++q)
        block.scale_row(static_cast<size_t>(p) * (k + 1) + q,
                        QuadElem(epsilon_factor(m, p, q, k)));
    out.matrix += block;
    out.log.divisor_gens.push_back(d);
    out.log.residue_counts.push_back(
        static_cast<long>(residues(d, true).size()));
  }
  return out;
}

std::vector<QuadElem> charpoly(const KMatrix& mat) {
  if (mat.rows() != mat.cols())
    throw std::domain_error("charpoly of non-square matrix");
  const int dc = mat.d_code();
  const size_t s = mat.rows();
  std::vector<QuadElem> coeffs{QuadElem::one(dc)};
  if (s == 0) return coeffs;
  KMatrix mk = mat;
  for (size_t j = 1; j <= s; ++j) {
    QuadElem cj = mk.trace() * Rat(-1, static_cast<long>(j));
    coeffs.push_back(cj);
    if (j < s) {
      KMatrix shifted = mk;
      for (size_t i = 0; i < s; ++i) shifted.at(i, i) += cj;
      mk = mat * shifted;
    }
  }
  return coeffs;
}

KMatrix poly_eval(const std::vector<QuadElem>& coeffs, const KMatrix& mat) {
  if (mat.rows() != mat.cols())
    throw std::domain_error("poly_eval on non-square matrix");
  const int dc = mat.d_code();
  const size_t s = mat.rows();
  KMatrix acc(dc, s, s);
  for (size_t i = 0; i < s; ++i) acc.at(i, i) = coeffs.at(0);
  for (size_t j = 1; j < coeffs.size(); ++j) {
    acc = acc * mat;
    for (size_t i = 0; i < s; ++i) acc.at(i, i) += coeffs[j];
  }
  return acc;
}

namespace {

// Diagonal binomial change of basis: period coords -> monomial coords.
KMatrix binomial_diag(int d_code, int k, bool inverse) {
  const size_t n = static_cast<size_t>(k) + 1;
  KMatrix out(d_code, n * n, n * n);
  for (int p = 0; p <= k; ++p)
    for (int q = 0; q <= k; ++q) {
      Rat s(binom(k, p) * binom(k, q));
      out.at(p * n + q, p * n + q) =
          QuadElem(d_code, inverse ? Rat(1) / s : s, 0);
    }
  return out;
}

}  // namespace

EigenSpace eigenspace_in_w(
    const std::vector<std::pair<QuadInt, QuadElem>>& pairs, int d_code,
    int k, const TBlockCache* cache) {
  const size_t dim = vkk_dim(k);
  RelationSystem rs = build_relations(d_code, k);
  KMatrix b = binomial_diag(d_code, k, false);
  KMatrix w_constraint = rs.stacked * b;  // rows vanish iff B*v lies in W

  const size_t nblocks = pairs.size();
  KMatrix stacked(d_code, nblocks * dim + w_constraint.rows(), dim);
  for (size_t bi = 0; bi < nblocks; ++bi) {
    const auto& [n, lambda] = pairs[bi];
    if (n.is_zero()) throw std::domain_error("eigenspace_in_w: zero n");
    if (n.d_code() != d_code || lambda.d_code() != d_code)
      throw std::invalid_argument("eigenspace_in_w: mixed fields");
    KMatrix a = hecke_matrix(n, k, cache).matrix;
    for (size_t i = 0; i < dim; ++i) a.at(i, i) = a.at(i, i) - lambda;
    for (size_t r = 0; r < dim; ++r)
      for (size_t c = 0; c < dim; ++c) stacked.at(bi * dim + r, c) = a.at(r, c);
  }
  for (size_t r = 0; r < w_constraint.rows(); ++r)
    for (size_t c = 0; c < dim; ++c)
      stacked.at(nblocks * dim + r, c) = w_constraint.at(r, c);

  EigenSpace out{kernel(stacked), {}};

  // image in the quotient: coordinates of B*v over [coboundary, w~ reps],
  // coboundary coordinate dropped
  WkkBasis wb = wkk_basis(d_code, k);
  if (k == 0 || !wb.w.contains_coboundary) {
    out.w_tilde_image = out.in_w.basis;
    return out;
  }
  std::vector<std::vector<QuadElem>> wbasis{coboundary_vector(d_code, k)};
  for (const auto& v : wb.w_tilde) wbasis.push_back(v);
  const size_t r = wbasis.size();

  // augmented elimination solving coords of arbitrary vectors over wbasis
  std::vector<std::vector<QuadElem>> aug;
  for (size_t i = 0; i < r; ++i) {
    std::vector<QuadElem> row = wbasis[i];
    for (size_t j = 0; j < r; ++j)
      row.push_back(i == j ? QuadElem::one(d_code) : QuadElem::zero(d_code));
    aug.push_back(std::move(row));
  }
  const Echelon ech = rref(std::move(aug), d_code);

  std::vector<std::vector<QuadElem>> images;
  for (const auto& v : out.in_w.basis) {
    std::vector<QuadElem> residual = b.apply(v);
    std::vector<QuadElem> coords(r, QuadElem::zero(d_code));
    for (size_t row_i = 0; row_i < ech.rows.size(); ++row_i) {
      size_t p = ech.pivots[row_i];
      if (p >= dim) continue;  // row now only touches the coordinate tail
      if (residual[p].is_zero()) continue;
      QuadElem f = residual[p];
      for (size_t j = 0; j < dim; ++j)
        residual[j] = residual[j] - f * ech.rows[row_i][j];
      for (size_t j = 0; j < r; ++j)
        coords[j] = coords[j] - f * ech.rows[row_i][dim + j];
    }
    for (const QuadElem& c : residual)
      if (!c.is_zero())
        throw std::logic_error("eigenspace vector escapes W_{k,k}");
    coords.erase(coords.begin());  // drop the coboundary coordinate
    for (auto& c : coords) c = -c;  // solved for -x above
    images.push_back(std::move(coords));
  }
  out.w_tilde_image = rref(std::move(images), d_code).rows;
  return out;
}

std::optional<KMatrix> induced_on_w_tilde(const KMatrix& a_period, int d_code,
                                          int k) {
  WkkBasis wb = wkk_basis(d_code, k);
  if (k == 0 || !wb.w.contains_coboundary) return std::nullopt;
  KMatrix b = binomial_diag(d_code, k, false);
  KMatrix binv = binomial_diag(d_code, k, true);

  std::vector<std::vector<QuadElem>> wbasis{coboundary_vector(d_code, k)};
  for (const auto& v : wb.w_tilde) wbasis.push_back(v);
  const size_t r = wbasis.size();
  const size_t dim = vkk_dim(k);

  // augmented elimination solving coords of arbitrary vectors over wbasis
  std::vector<std::vector<QuadElem>> aug;
  for (size_t i = 0; i < r; ++i) {
    std::vector<QuadElem> row = wbasis[i];
    for (size_t j = 0; j < r; ++j)
      row.push_back(i == j ? QuadElem::one(d_code) : QuadElem::zero(d_code));
    aug.push_back(std::move(row));
  }
  Echelon ech = rref(std::move(aug), d_code);

  KMatrix out(d_code, r - 1, r - 1);
  for (size_t col = 0; col + 1 < r; ++col) {
    std::vector<QuadElem> v = binv.apply(wbasis[col + 1]);
    std::vector<QuadElem> image = b.apply(a_period.apply(v));
    std::vector<QuadElem> coords(r, QuadElem::zero(d_code));
    for (size_t row_i = 0; row_i < ech.rows.size(); ++row_i) {
      size_t p = ech.pivots[row_i];
      if (p >= dim) continue;
      if (image[p].is_zero()) continue;
      QuadElem f = image[p];
      for (size_t j = 0; j < dim; ++j)
        image[j] = image[j] - f * ech.rows[row_i][j];
      for (size_t j = 0; j < r; ++j)
        coords[j] = coords[j] - f * ech.rows[row_i][dim + j];
    }
    for (const QuadElem& c : image)
      if (!c.is_zero()) return std::nullopt;  // image escapes W
    for (size_t row_o = 0; row_o + 1 < r; ++row_o)
      out.at(row_o, col) = -coords[row_o + 1];
  }
  return out;
}

StabilityReport wkk_stability_check(const QuadInt& n, int k) {
  const int dc = n.d_code();
  KMatrix a = hecke_matrix(n, k).matrix;
  StabilityReport rep;
  rep.direct = induced_on_w_tilde(a, dc, k).has_value();
  rep.transpose = induced_on_w_tilde(a.transpose(), dc, k).has_value();
  return rep;
}

std::optional<bool> multiplicativity_check(const QuadInt& n1,
                                           const QuadInt& n2, int k) {
  const int dc = n1.d_code();
  KMatrix a12 = hecke_matrix(n1 * n2, k).matrix;
  KMatrix prod = hecke_matrix(n1, k).matrix * hecke_matrix(n2, k).matrix;
  auto lhs = induced_on_w_tilde(a12, dc, k);
  auto rhs = induced_on_w_tilde(prod, dc, k);
  if (!lhs || !rhs) return std::nullopt;
  return *lhs == *rhs;
}

}  // namespace bianchi
