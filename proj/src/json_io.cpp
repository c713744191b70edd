#include "bianchi/json_io.hpp"

namespace bianchi {

Json to_json(const KMatrix& m) {
  Json rows = Json::array();
  for (size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Json to_json(const Mat2& g) {
  return Json::array({Json::array({g.a.str(), g.b.str()}),
                      Json::array({g.c.str(), g.d.str()})});
}

Json cf_json(const CFExpansion& cf) {
  Json betas = Json::array();
  for (const QuadInt& b : cf.betas) betas.push_back(b.str());
  Json convergents = Json::array();
  for (size_t i = 0; i < cf.convergents.size(); ++i) {
    convergents.push_back(Json{{"n", static_cast<long long>(i) - 2},
                               {"mu", cf.convergents[i].first.str()},
                               {"nu", cf.convergents[i].second.str()}});
  }
  Json matrices = Json::array();
  for (const Mat2& g : cf.matrices) matrices.push_back(to_json(g));
  return Json{{"d", cf.kappa.d_code()},
              {"kappa", cf.kappa.str()},
              {"betas", betas},
              {"convergents", convergents},
              {"matrices", matrices}};
}

Json poly_json(const PolyKK& p) {
  Json grid = Json::array();
  for (int i = 0; i <= p.k; ++i) {
    Json row = Json::array();
    for (int j = 0; j <= p.k; ++j) row.push_back(p.at(i, j).str());
    grid.push_back(std::move(row));
  }
  return Json{{"d", p.d_code}, {"k", p.k}, {"coeffs", grid}};
}

Json wkk_json(int d_code, int k, const WkkBasis& wb) {
  Json basis = Json::array();
  for (const auto& v : wb.w.basis) basis.push_back(poly_json({d_code, k, v}));
  Json tilde = Json::array();
  for (const auto& v : wb.w_tilde) tilde.push_back(poly_json({d_code, k, v}));
  return Json{{"d", d_code},
              {"k", k},
              {"dim_w", wb.w.dim()},
              {"dim_w_tilde", wb.w_tilde.size()},
              {"coboundary_in_w", wb.w.contains_coboundary},
              {"basis", basis},
              {"w_tilde_basis", tilde}};
}

Json hecke_json(const HeckeMatrix& h) {
  Json divisors = Json::array();
  for (const QuadInt& d : h.log.divisor_gens) divisors.push_back(d.str());
  Json counts = Json::array();
  for (long c : h.log.residue_counts) counts.push_back(c);
  return Json{{"d", h.d_code},
              {"k", h.k},
              {"n", h.n.str()},
              {"matrix", to_json(h.matrix)},
              {"representative_log",
               Json{{"input_n", h.log.input_n.str()},
                    {"canonical_n", h.log.canonical_n.str()},
                    {"divisors", divisors},
                    {"residue_counts", counts}}}};
}

Json eigen_json(int d_code, int k,
                const std::vector<std::pair<QuadInt, QuadElem>>& pairs,
                const EigenSpace& es) {
  Json jp = Json::array();
  for (const auto& [n, lambda] : pairs)
    jp.push_back(Json{{"n", n.str()}, {"lambda", lambda.str()}});
  auto vecs = [](const std::vector<std::vector<QuadElem>>& vs) {
    Json out = Json::array();
    for (const auto& v : vs) {
      Json row = Json::array();
      for (const QuadElem& e : v) row.push_back(e.str());
      out.push_back(std::move(row));
    }
    return out;
  };
  return Json{{"d", d_code},
              {"k", k},
              {"pairs", jp},
              {"dim", es.in_w.dim()},
              {"basis_period_coords", vecs(es.in_w.basis)},
              {"w_tilde_image", vecs(es.w_tilde_image)}};
}

Json verify_json(const VerifyReport& report) {
  Json checks = Json::array();
  for (const CheckRecord& c : report.checks) {
    Json jc{{"name", c.name},
            {"cases_run", c.cases_run},
            {"cases_passed", c.cases_passed}};
    if (c.first_failure.empty())
      jc["first_failure"] = nullptr;
    else
      jc["first_failure"] = c.first_failure;
    checks.push_back(std::move(jc));
  }
  Json diags = Json::array();
  for (const DiagnosticRecord& d : report.diagnostics)
    diags.push_back(Json{{"name", d.name}, {"observed", d.observed}});
  return Json{{"d", report.d_code},
              {"k_max", report.k_max},
              {"norm_bound", report.norm_bound},
              {"workers", report.workers},
              {"checks", checks},
              {"diagnostics", diags},
              {"all_passed", report.all_passed()}};
}

}  // namespace bianchi
