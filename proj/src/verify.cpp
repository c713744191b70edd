#include "bianchi/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "bianchi/hecke.hpp"

namespace bianchi {

int default_workers() {
  if (const char* env = std::getenv("BIANCHI_WORKERS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

void parallel_for(size_t n, int workers, const std::function<void(size_t)>& fn) {
  if (workers <= 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  const size_t w = std::min<size_t>(workers, n);
  for (size_t t = 0; t < w; ++t)
    pool.emplace_back([&, t] {
      for (size_t i = t; i < n; i += w) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

std::vector<QuadElem> cf_test_points(int d_code, long nu_norm_bound) {
  std::vector<QuadElem> out;
  for (const QuadInt& nu :
       canonical_elements_up_to(d_code, nu_norm_bound, true)) {
    QuadElem den(nu);
    for (const QuadInt& mu : residues(nu, /*coprime_only=*/true)) {
      out.push_back(QuadElem(mu) / den);
      out.push_back(QuadElem(mu + nu) / den);  // exercise beta_0 as well
    }
  }
  return out;
}

CheckRecord check_cf_round_trip(int d_code, long nu_norm_bound) {
  CheckRecord rec("cf_round_trip");
  const QuadInt one = QuadInt::one(d_code);
  for (const QuadElem& kappa : cf_test_points(d_code, nu_norm_bound)) {
    CFExpansion cf = expand(kappa);
    bool ok = true;
    const size_t m = cf.betas.size();
    ok = ok && cf.matrices.size() == m && cf.convergents.size() == m + 2;
    for (size_t n = 0; ok && n < m; ++n) {
      const auto& [mu, nu] = cf.convergent(static_cast<long>(n));
      const auto& [mu1, nu1] = cf.convergent(static_cast<long>(n) - 1);
      const auto& [mu2, nu2] = cf.convergent(static_cast<long>(n) - 2);
      ok = ok && mu == cf.betas[n] * mu1 + mu2 && nu == cf.betas[n] * nu1 + nu2;
      ok = ok && cf.matrices[n].det() == one;
      // g_n = (((-1)^n mu_{n-1}, mu_n), ((-1)^n nu_{n-1}, nu_n))
      QuadInt sgn = (n % 2 == 0) ? one : -one;
      ok = ok && cf.matrices[n].a == sgn * mu1 && cf.matrices[n].b == mu &&
           cf.matrices[n].c == sgn * nu1 && cf.matrices[n].d == nu;
    }
    const auto& [muf, nuf] = cf.convergents.back();
    ok = ok && !nuf.is_zero() && QuadElem(muf) / QuadElem(nuf) == kappa;
    ok = ok && euclid_gcd(muf, nuf).is_one();
    rec.record(ok, [&] { return "kappa=" + kappa.str(); });
  }
  return rec;
}

CheckRecord check_cusp_integrality(int d_code, long nu_norm_bound, int k) {
  CheckRecord rec{"cusp_integrality_k" + std::to_string(k)};
  for (const QuadElem& kappa : cf_test_points(d_code, nu_norm_bound)) {
    CFExpansion cf = expand(kappa);
    bool ok = true;
    KMatrix acc(d_code, vkk_dim(k), vkk_dim(k));
    for (const Mat2& g : cf.matrices) {
      KMatrix t = transport_matrix(g, k);
      ok = ok && t.is_integral();
      acc += t;
    }
    ok = ok && acc.is_integral() && acc == cusp_matrix(kappa, k);
    rec.record(ok, [&] { return "kappa=" + kappa.str(); });
  }
  return rec;
}

CheckRecord check_hecke_first_row(int d_code, int k_lo, int k_hi,
                                  long n_norm_bound, int workers) {
  CheckRecord rec("hecke_first_row");
  std::vector<QuadInt> ns =
      canonical_elements_up_to(d_code, n_norm_bound, false);
  for (int k = k_lo; k <= k_hi; ++k) {
    // distinct canonical divisors across all n; t_blocks are independent
    std::vector<QuadInt> divs;
    std::set<std::string> seen;
    for (const QuadInt& n : ns)
      for (const QuadInt& d : divisors(n))
        if (seen.insert(t_block_key(d, k)).second) divs.push_back(d);

    std::vector<KMatrix> blocks(divs.size(), KMatrix(d_code, 0, 0));
    parallel_for(divs.size(), workers,
                 [&](size_t i) { blocks[i] = t_block(divs[i], k); });
    TBlockCache cache;
    for (size_t i = 0; i < divs.size(); ++i)
      cache.emplace(t_block_key(divs[i], k), blocks[i]);

    const size_t corner = vkk_dim(k) - 1;
    std::vector<char> oks(ns.size(), 0);
    parallel_for(ns.size(), workers, [&](size_t i) {
      HeckeMatrix h = hecke_matrix(ns[i], k, &cache);
      QuadElem diff = h.matrix.at(0, 0) - h.matrix.at(0, corner);
      bool ok = h.matrix.is_integral() &&
                diff == QuadElem(d_code, Rat(sigma_tilde(2 * k + 2, ns[i])), 0);
      oks[i] = ok ? 1 : 0;
    });
    for (size_t i = 0; i < ns.size(); ++i)
      rec.record(oks[i] != 0, [&] {
        return "k=" + std::to_string(k) + " n=" + ns[i].str();
      });
  }
  return rec;
}

CheckRecord check_phi_identity(int d_code, long norm_bound) {
  CheckRecord rec("phi_identity");
  for (const QuadInt& n : canonical_elements_up_to(d_code, norm_bound, true)) {
    Int count = phi_tilde(n);
    bool ok = count == phi_tilde_formula(n);
    Int total = 0;
    for (const QuadInt& d : divisors(n)) total += phi_tilde(d);
    ok = ok && total == n.norm();
    rec.record(ok, [&] { return "n=" + n.str(); });
  }
  return rec;
}

CheckRecord check_slash_laws(int d_code, int k_comp, int k_inv, int n_words,
                             unsigned seed) {
  CheckRecord rec("slash_laws");
  std::vector<Generator> gens{Generator::S, Generator::T, Generator::Tw,
                              Generator::U};
  if (d_code == 1 || d_code == 3) gens.push_back(Generator::L);
  if (d_code == 11) gens.push_back(Generator::E);

  std::mt19937 rng(seed);
  for (int w = 0; w < n_words; ++w) {
    const size_t len = 1 + rng() % 4;
    std::vector<Mat2> word;
    for (size_t i = 0; i < len; ++i) {
      Mat2 g = generator_matrix(d_code, gens[rng() % gens.size()]);
      if (rng() % 2) g = g.inverse();
      word.push_back(g);
    }
    const size_t cut = 1 + (len > 1 ? rng() % (len - 1) : 0);
    Mat2 g1 = Mat2::identity(d_code), g2 = Mat2::identity(d_code);
    for (size_t i = 0; i < cut; ++i) g1 = g1 * word[i];
    for (size_t i = cut; i < len; ++i) g2 = g2 * word[i];
    const int k = 1 + static_cast<int>(rng() % k_comp);
    bool ok =
        slash_matrix(g1 * g2, k) == slash_matrix(g2, k) * slash_matrix(g1, k);
    rec.record(ok, [&] {
      std::ostringstream os;
      os << "word " << w << " k=" << k << " g1=" << g1 << " g2=" << g2;
      return os.str();
    });
  }

  const Mat2 s = generator_matrix(d_code, Generator::S);
  const QuadInt mone(d_code, -1, 0);
  const Mat2 neg_id{mone, QuadInt::zero(d_code), QuadInt::zero(d_code), mone};
  for (int k = 0; k <= k_inv; ++k) {
    KMatrix id = KMatrix::identity(d_code, vkk_dim(k));
    KMatrix ms = slash_matrix(s, k);
    rec.record(ms * ms == id,
               [&] { return "S^2 at k=" + std::to_string(k); });
    rec.record(slash_matrix(neg_id, k) == id,
               [&] { return "-I at k=" + std::to_string(k); });
  }
  return rec;
}

CheckRecord check_rc_inversion(int d_code, int k_max, size_t n_points) {
  CheckRecord rec("rc_inversion");
  std::vector<QuadElem> pts;
  pts.push_back(QuadElem::zero(d_code));
  for (int q : {1, 2, 3})
    for (int s : {1, 2, 3})
      for (int p = -2; p <= 2 && pts.size() < n_points; ++p)
        for (int r = -2; r <= 2 && pts.size() < n_points; ++r) {
          QuadElem v(d_code, Rat(p, q), Rat(r, s));
          bool dup = false;
          for (const auto& u : pts) dup = dup || u == v;
          if (!dup) pts.push_back(v);
        }
  for (int k = 0; k <= k_max; ++k) {
    KMatrix id = KMatrix::identity(d_code, vkk_dim(k));
    for (const QuadElem& kappa : pts) {
      KMatrix fwd = r_to_c(kappa, k);
      KMatrix bwd = c_to_r(kappa, k);
      bool ok = fwd * bwd == id && bwd * fwd == id;
      if (kappa.is_zero()) ok = ok && fwd == id && bwd == id;
      rec.record(ok, [&] {
        return "k=" + std::to_string(k) + " kappa=" + kappa.str();
      });
    }
  }
  return rec;
}

CheckRecord check_wkk_structure(int d_code, int k_lo, int k_hi) {
  CheckRecord rec("wkk_structure");
  for (int k = k_lo; k <= k_hi; ++k) {
    RelationSystem rs = build_relations(d_code, k);
    WkkBasis wb = wkk_basis(d_code, k);
    for (const auto& v : wb.w.basis) {
      PolyKK p{d_code, k, v};
      bool ok = true;
      for (const GroupWord& w : rs.words)
        ok = ok && apply_group_word(p, w).is_zero();
      rec.record(ok, [&] { return "basis vector, k=" + std::to_string(k); });
    }
    bool cb_ok = wb.w.contains_coboundary;
    if (k >= 1) {
      PolyKK cb{d_code, k, coboundary_vector(d_code, k)};
      for (const GroupWord& w : rs.words)
        cb_ok = cb_ok && apply_group_word(cb, w).is_zero();
      cb_ok = cb_ok && wb.w_tilde.size() == wb.w.basis.size() - 1;
    }
    rec.record(cb_ok, [&] { return "coboundary, k=" + std::to_string(k); });
  }
  return rec;
}

CheckRecord check_translation_crosspath(int d_code, long beta_norm_bound,
                                        int k_max) {
  CheckRecord rec("translation_crosspath");
  std::vector<QuadInt> betas{QuadInt::zero(d_code)};
  for (const QuadInt& c :
       canonical_elements_up_to(d_code, beta_norm_bound, true))
    for (const QuadInt& u : field_params(d_code).units)
      betas.push_back(u * c);
  for (int k = 0; k <= k_max; ++k)
    for (const QuadInt& beta : betas) {
      Mat2 tr{QuadInt::one(d_code), beta, QuadInt::zero(d_code),
              QuadInt::one(d_code)};
      bool ok = cusp_matrix(QuadElem(beta), k) == transport_matrix(tr, k);
      rec.record(ok, [&] {
        return "k=" + std::to_string(k) + " beta=" + beta.str();
      });
    }
  return rec;
}

CheckRecord check_eigen_sanity(int d_code, int k_lo, int k_hi) {
  CheckRecord rec("eigen_sanity");
  for (int k = k_lo; k <= k_hi; ++k) {
    const QuadInt one = QuadInt::one(d_code);
    EigenSpace full = eigenspace_in_w({{one, QuadElem::one(d_code)}}, d_code, k);
    WkkBasis wb = wkk_basis(d_code, k);
    std::vector<std::vector<QuadElem>> w_period;
    for (const auto& v : wb.w.basis)
      w_period.push_back(monomial_to_period({d_code, k, v}).entries);
    Echelon expect = rref(std::move(w_period), d_code);
    bool ok = full.in_w.basis == expect.rows &&
              full.w_tilde_image.size() == wb.w_tilde.size();
    rec.record(ok, [&] { return "full W, k=" + std::to_string(k); });

    EigenSpace zero = eigenspace_in_w({{one, QuadElem::zero(d_code)}}, d_code, k);
    rec.record(zero.in_w.dim() == 0,
               [&] { return "lambda=0, k=" + std::to_string(k); });

    QuadInt n = canonical_elements_up_to(d_code, 10, false).front();
    KMatrix a = hecke_matrix(n, k).matrix;
    KMatrix ch = poly_eval(charpoly(a), a);
    rec.record(ch.is_zero(), [&] {
      return "Cayley-Hamilton n=" + n.str() + " k=" + std::to_string(k);
    });
  }
  return rec;
}

VerifyReport run_verify(int d_code, int k_max, long norm_bound, int workers) {
  VerifyReport rep{d_code, k_max, norm_bound, workers, {}, {}};
  rep.checks.push_back(
      check_hecke_first_row(d_code, 1, std::max(1, k_max), norm_bound, workers));
  rep.checks.push_back(check_phi_identity(d_code, norm_bound));
  rep.checks.push_back(check_cf_round_trip(d_code, norm_bound));
  rep.checks.push_back(check_slash_laws(d_code, std::max(1, std::min(k_max, 3)),
                                        std::max(0, k_max), 200, 20240501u));
  rep.checks.push_back(check_rc_inversion(d_code, std::max(0, k_max), 50));

  // measured observations, never gating: whether A(n) stabilizes W modulo the
  // coboundary line, and whether A is multiplicative on the quotient
  std::vector<QuadInt> small =
      canonical_elements_up_to(d_code, std::min(norm_bound, 10L), false);
  for (int k = 1; k <= std::min(k_max, 3); ++k)
    for (size_t i = 0; i < std::min<size_t>(small.size(), 2); ++i) {
      StabilityReport st = wkk_stability_check(small[i], k);
      rep.diagnostics.push_back(
          {"wkk_stability k=" + std::to_string(k) + " n=" + small[i].str(),
           std::string("direct=") + (st.direct ? "true" : "false") +
               " transpose=" + (st.transpose ? "true" : "false")});
    }
  if (small.size() >= 2 && k_max >= 1) {
    size_t j = 1;
    while (j < small.size() && !euclid_gcd(small[0], small[j]).is_one()) ++j;
    if (j < small.size()) {
      auto mult = multiplicativity_check(small[0], small[j], 1);
      rep.diagnostics.push_back(
          {"multiplicativity_on_w_tilde n1=" + small[0].str() +
               " n2=" + small[j].str() + " k=1",
           !mult.has_value() ? "undefined (W not stabilized)"
                             : (*mult ? "true" : "false")});
    }
  }
  return rep;
}

}  // namespace bianchi
