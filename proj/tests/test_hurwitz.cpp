#include <doctest.h>

#include <random>

#include "bianchi/hurwitz.hpp"

using namespace bianchi;

namespace {

const int ALL_D[] = {1, 2, 3, 7, 11};

void check_expansion_invariants(const CFExpansion& cf) {
  const int d = cf.kappa.d_code();
  const QuadInt one = QuadInt::one(d);
  const size_t m = cf.betas.size();
  REQUIRE(cf.matrices.size() == m);
  REQUIRE(cf.convergents.size() == m + 2);
  CHECK(cf.convergent(-2) == std::pair(QuadInt::zero(d), one));
  CHECK(cf.convergent(-1) == std::pair(one, QuadInt::zero(d)));
  for (size_t n = 0; n < m; ++n) {
    const auto& [mu, nu] = cf.convergent(static_cast<long>(n));
    const auto& [mu1, nu1] = cf.convergent(static_cast<long>(n) - 1);
    const auto& [mu2, nu2] = cf.convergent(static_cast<long>(n) - 2);
    CHECK(mu == cf.betas[n] * mu1 + mu2);
    CHECK(nu == cf.betas[n] * nu1 + nu2);
    CHECK(cf.matrices[n].det() == one);
    // g_n(0) = mu_n/nu_n and g_n(inf) = mu_{n-1}/nu_{n-1}
    ProjPoint at0 = mobius(cf.matrices[n], ProjPoint::of(QuadElem::zero(d)));
    ProjPoint atinf = mobius(cf.matrices[n], ProjPoint::infinity(d));
    CHECK(proj_equal(at0, ProjPoint{QuadElem(mu), QuadElem(nu)}));
    CHECK(proj_equal(atinf, ProjPoint{QuadElem(mu1), QuadElem(nu1)}));
    // consecutive cusp-path endpoints chain, giving the telescoping sum
    if (n > 0) {
      ProjPoint prev0 =
          mobius(cf.matrices[n - 1], ProjPoint::of(QuadElem::zero(d)));
      CHECK(proj_equal(atinf, prev0));
    }
  }
  const auto& [muf, nuf] = cf.convergents.back();
  REQUIRE(!nuf.is_zero());
  CHECK(QuadElem(muf) / QuadElem(nuf) == cf.kappa);
  CHECK(euclid_gcd(muf, nuf).is_one());
}

}  // namespace

TEST_CASE("expand at integral points") {
  for (int d : ALL_D) {
    CFExpansion z = expand(QuadElem::zero(d));
    REQUIRE(z.betas.size() == 1);
    CHECK(z.betas[0].is_zero());
    CHECK(z.matrices[0] == Mat2::identity(d));

    QuadInt beta(d, 3, -2);
    CFExpansion b = expand(QuadElem(beta));
    REQUIRE(b.betas.size() == 1);
    CHECK(b.betas[0] == beta);
    CHECK(b.matrices[0] ==
          Mat2{QuadInt::one(d), beta, QuadInt::zero(d), QuadInt::one(d)});
    check_expansion_invariants(b);
  }
}

TEST_CASE("expand (1+w)/2 over D=1, hand-traced") {
  CFExpansion cf = expand(QuadElem(1, Rat(1, 2), Rat(1, 2)));
  REQUIRE(cf.betas.size() == 2);
  CHECK(cf.betas[0] == QuadInt::zero(1));
  CHECK(cf.betas[1] == QuadInt(1, 1, -1));
  CHECK(cf.convergent(1) == std::pair(QuadInt::one(1), QuadInt(1, 1, -1)));
  check_expansion_invariants(cf);
}

TEST_CASE("round trip over small denominators, all fields") {
  for (int d : ALL_D) {
    for (const QuadInt& nu : canonical_elements_up_to(d, 25, true)) {
      for (const QuadInt& mu : residues(nu, true)) {
        QuadElem kappa = QuadElem(mu) / QuadElem(nu);
        CFExpansion cf = expand(kappa);
        check_expansion_invariants(cf);
        // Euclidean descent bounds the length by N(nu)
        CHECK(Int(cf.betas.size()) <= nu.norm());
      }
    }
  }
}

TEST_CASE("generator matrices") {
  for (int d : ALL_D) {
    auto gens = generators(d);
    CHECK(gens.count("S") == 1);
    CHECK(gens.count("T") == 1);
    CHECK(gens.count("Tw") == 1);
    CHECK(gens.count("U") == 1);
    for (const auto& [name, g] : gens) {
      INFO("generator ", name, " for D=", d);
      CHECK(g.det().is_one());
    }
    // U = T*S = ((1,-1),(1,0))
    CHECK(gens.at("U") == Mat2{QuadInt::one(d), QuadInt(d, -1, 0),
                               QuadInt::one(d), QuadInt::zero(d)});
    CHECK(gens.count("L") == (d == 1 || d == 3 ? 1 : 0));
    CHECK(gens.count("E") == (d == 11 ? 1 : 0));
  }

  // pinned forms of L
  Mat2 l1 = generator_matrix(1, Generator::L);
  CHECK(l1 == Mat2{QuadInt::omega(1), QuadInt::zero(1), QuadInt::zero(1),
                   QuadInt(1, 0, -1)});
  Mat2 l3 = generator_matrix(3, Generator::L);
  CHECK(l3 == Mat2{QuadInt(3, -1, -1), QuadInt::zero(3), QuadInt::zero(3),
                   QuadInt::omega(3)});

  for (int d : {2, 7, 11})
    CHECK_THROWS_AS(generator_matrix(d, Generator::L), std::domain_error);
  for (int d : {1, 2, 3, 7})
    CHECK_THROWS_AS(generator_matrix(d, Generator::E), std::domain_error);
  CHECK(generator_matrix(11, Generator::E).det().is_one());
}

TEST_CASE("Mat2 inverse and powers") {
  std::mt19937 rng(23);
  for (int d : ALL_D) {
    auto gens = generators(d);
    std::vector<Mat2> pool;
    for (const auto& [name, g] : gens) pool.push_back(g);
    for (int i = 0; i < 20; ++i) {
      Mat2 g = pool[rng() % pool.size()] * pool[rng() % pool.size()];
      CHECK(g * g.inverse() == Mat2::identity(d));
      CHECK(g.pow(3) == g * g * g);
      CHECK(g.pow(-2) == g.inverse() * g.inverse());
    }
  }
  // non-unit determinant has no inverse here
  Mat2 bad{QuadInt(1, 2, 0), QuadInt::zero(1), QuadInt::zero(1),
           QuadInt::one(1)};
  CHECK_THROWS_AS(bad.inverse(), std::domain_error);
}
