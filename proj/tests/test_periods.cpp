#include <doctest.h>

#include <random>

#include "bianchi/periods.hpp"
#include "poly_oracle.hpp"

using namespace bianchi;

namespace {

const int ALL_D[] = {1, 2, 3, 7, 11};

Mat2 random_sl2(int d, std::mt19937& rng, size_t len) {
  std::vector<Generator> gens{Generator::S, Generator::T, Generator::Tw,
                              Generator::U};
  if (d == 1 || d == 3) gens.push_back(Generator::L);
  if (d == 11) gens.push_back(Generator::E);
  Mat2 g = Mat2::identity(d);
  for (size_t i = 0; i < len; ++i) {
    Mat2 f = generator_matrix(d, gens[rng() % gens.size()]);
    if (rng() % 2) f = f.inverse();
    g = g * f;
  }
  return g;
}

// Independent route to the transport matrix, following the expansion of the
// translated period integral: the image polynomial
//   sum_{i,j} C(k,i) C(k,j) r_{i,j} (-cX+aY)^i (dX-bY)^(k-i)
//             (-cbar Xbar + abar Ybar)^j (dbar Xbar - bbar Ybar)^(k-j)
// has Y^p X^(k-p) Ybar^q Xbar^(k-q) coefficient C(k,p) C(k,q) s_{p,q}.
KMatrix transport_oracle(const Mat2& g, int k) {
  const int dc = g.d_code();
  QuadElem a(g.a), b(g.b), c(g.c), d(g.d);
  const size_t n = static_cast<size_t>(k) + 1;
  KMatrix out(dc, n * n, n * n);
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= k; ++j) {
      oracle::Poly4 p = oracle::poly_pow(oracle::poly_line(-c, a, false), i, dc);
      p = oracle::poly_mul(
          p, oracle::poly_pow(oracle::poly_line(d, -b, false), k - i, dc), dc);
      p = oracle::poly_mul(
          p,
          oracle::poly_pow(oracle::poly_line(-c.conj(), a.conj(), true), j, dc),
          dc);
      p = oracle::poly_mul(
          p,
          oracle::poly_pow(oracle::poly_line(d.conj(), -b.conj(), true), k - j,
                           dc),
          dc);
      Rat scale_ij(binom(k, i) * binom(k, j));
      for (int pp = 0; pp <= k; ++pp)
        for (int qq = 0; qq <= k; ++qq) {
          QuadElem coeff =
              oracle::coeff_of(p, {k - pp, pp, k - qq, qq}, dc);
          Rat inv_pq(1);
          inv_pq /= Rat(binom(k, pp) * binom(k, qq));
          out.at(pp * n + qq, i * n + j) = coeff * scale_ij * inv_pq;
        }
    }
  return out;
}

}  // namespace

TEST_CASE("transport of the identity and the k=0 degenerate case") {
  std::mt19937 rng(53);
  for (int d : ALL_D) {
    for (int k = 0; k <= 4; ++k)
      CHECK(transport_matrix(Mat2::identity(d), k) ==
            KMatrix::identity(d, vkk_dim(k)));
    for (int trial = 0; trial < 5; ++trial) {
      KMatrix t = transport_matrix(random_sl2(d, rng, 1 + rng() % 4), 0);
      REQUIRE(t.rows() == 1);
      CHECK(t.at(0, 0).is_one());
    }
  }
  Mat2 bad{QuadInt(1, 2, 0), QuadInt::zero(1), QuadInt::zero(1),
           QuadInt::one(1)};
  CHECK_THROWS_AS(transport_matrix(bad, 1), std::domain_error);
}

TEST_CASE("transport of a translation matches the specialized formula") {
  for (int d : ALL_D) {
    const int k = 3;
    QuadInt beta(d, 2, -1);
    Mat2 tr{QuadInt::one(d), beta, QuadInt::zero(d), QuadInt::one(d)};
    KMatrix t = transport_matrix(tr, k);
    QuadElem be(beta), bc(beta.conj());
    for (int p = 0; p <= k; ++p)
      for (int q = 0; q <= k; ++q)
        for (int i = 0; i <= k; ++i)
          for (int j = 0; j <= k; ++j) {
            QuadElem expect = QuadElem(d, Rat(binom(p, i) * binom(q, j)), 0) *
                              be.pow(p - i < 0 ? 0 : p - i) *
                              bc.pow(q - j < 0 ? 0 : q - j);
            if (i > p || j > q) expect = QuadElem::zero(d);
            if ((p + q - i - j) % 2 != 0) expect = -expect;
            CHECK(t.at(p * (k + 1) + q, i * (k + 1) + j) == expect);
          }
  }
}

TEST_CASE("transport against the period-integral expansion oracle") {
  std::mt19937 rng(59);
  for (int d : ALL_D)
    for (int k = 1; k <= 3; ++k)
      for (int trial = 0; trial < 6; ++trial) {
        Mat2 g = random_sl2(d, rng, 1 + rng() % 4);
        KMatrix t = transport_matrix(g, k);
        CHECK(t.is_integral());
        CHECK(t == transport_oracle(g, k));
      }
}

TEST_CASE("cusp matrix basics") {
  for (int d : ALL_D)
    for (int k = 0; k <= 3; ++k)
      CHECK(cusp_matrix(QuadElem::zero(d), k) ==
            KMatrix::identity(d, vkk_dim(k)));

  // integral kappa reduces to a single translation transport
  for (int d : ALL_D) {
    QuadInt beta(d, -2, 3);
    Mat2 tr{QuadInt::one(d), beta, QuadInt::zero(d), QuadInt::one(d)};
    CHECK(cusp_matrix(QuadElem(beta), 2) == transport_matrix(tr, 2));
  }
}

TEST_CASE("cusp matrix of (1+w)/2 over D=1 is the two-step transport sum") {
  const int k = 2;
  QuadElem kappa(1, Rat(1, 2), Rat(1, 2));
  Mat2 g0 = Mat2::identity(1);
  Mat2 g1{QuadInt::zero(1), QuadInt::one(1), QuadInt(1, -1, 0),
          QuadInt(1, 1, -1)};
  KMatrix expect = transport_matrix(g0, k) + transport_matrix(g1, k);
  KMatrix got = cusp_matrix(kappa, k);
  CHECK(got == expect);
  CHECK(got.is_integral());
}

TEST_CASE("r_to_c and c_to_r are mutually inverse, identity at zero") {
  std::mt19937 rng(61);
  for (int d : ALL_D)
    for (int k = 0; k <= 4; ++k) {
      KMatrix id = KMatrix::identity(d, vkk_dim(k));
      CHECK(r_to_c(QuadElem::zero(d), k) == id);
      CHECK(c_to_r(QuadElem::zero(d), k) == id);
      for (int trial = 0; trial < 6; ++trial) {
        QuadElem kappa(d, Rat(static_cast<long>(rng() % 9) - 4, 1 + rng() % 4),
                       Rat(static_cast<long>(rng() % 9) - 4, 1 + rng() % 4));
        KMatrix fwd = r_to_c(kappa, k);
        KMatrix bwd = c_to_r(kappa, k);
        CHECK(fwd * bwd == id);
        CHECK(bwd * fwd == id);
        // triangular in the (p,q) partial order
        for (int p = 0; p <= k; ++p)
          for (int q = 0; q <= k; ++q)
            for (int i = 0; i <= k; ++i)
              for (int j = 0; j <= k; ++j)
                if (i > p || j > q)
                  CHECK(fwd.at(p * (k + 1) + q, i * (k + 1) + j).is_zero());
      }
    }
}

TEST_CASE("r_to_c pinned entry at k=1, kappa=1, D=1") {
  KMatrix fwd = r_to_c(QuadElem::one(1), 1);
  // row (1,0), column (0,0): C(1,1) * kappa = 1
  CHECK(fwd.at(1 * 2 + 0, 0) == QuadElem::one(1));
}

TEST_CASE("period/monomial diagonal scaling") {
  PeriodVector v = PeriodVector::zero(1, 1);
  v.at(0, 0) = QuadElem::one(1);
  PolyKK p = period_to_monomial(v);
  CHECK(p.at(0, 0).is_one());
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b)
      if (a != 0 || b != 0) CHECK(p.at(a, b).is_zero());

  PeriodVector v2 = PeriodVector::zero(3, 2);
  v2.at(1, 1) = QuadElem::one(3);
  CHECK(period_to_monomial(v2).at(1, 1) == QuadElem(3, 4, 0));

  std::mt19937 rng(67);
  for (int d : ALL_D)
    for (int k = 0; k <= 3; ++k) {
      PeriodVector r = PeriodVector::zero(d, k);
      for (auto& e : r.entries)
        e = QuadElem(d, Rat(static_cast<long>(rng() % 11) - 5, 1 + rng() % 3),
                     Rat(static_cast<long>(rng() % 11) - 5, 1 + rng() % 3));
      PeriodVector back = monomial_to_period(period_to_monomial(r));
      CHECK(back.entries == r.entries);
    }
}
