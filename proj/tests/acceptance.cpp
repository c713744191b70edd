// Acceptance suite: every identity the library promises, run at full size
// with exact (zero-tolerance) comparisons, one verdict line per criterion.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "bianchi/verify.hpp"

using namespace bianchi;

namespace {

const int ALL_D[] = {1, 2, 3, 7, 11};

struct Criterion {
  int number;
  std::string label;
  long long cases_run = 0;
  long long cases_passed = 0;
  std::string first_failure;
  long ms = 0;

  bool passed() const { return cases_run == cases_passed && cases_run > 0; }
};

void fold(Criterion& crit, const CheckRecord& rec) {
  crit.cases_run += rec.cases_run;
  crit.cases_passed += rec.cases_passed;
  if (crit.first_failure.empty() && !rec.first_failure.empty())
    crit.first_failure = rec.first_failure;
}

template <typename Fn>
Criterion run_criterion(int number, const std::string& label, Fn&& body) {
  Criterion crit{number, label};
  auto t0 = std::chrono::steady_clock::now();
  body(crit);
  auto t1 = std::chrono::steady_clock::now();
  crit.ms = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
  std::printf("criterion %d [%s] %s: %lld/%lld cases (%.1fs)%s%s\n",
              crit.number, crit.passed() ? "PASS" : "FAIL",
              crit.label.c_str(), crit.cases_passed, crit.cases_run,
              crit.ms / 1000.0,
              crit.first_failure.empty() ? "" : "  first failure: ",
              crit.first_failure.c_str());
  std::fflush(stdout);
  return crit;
}

}  // namespace

int main() {
  const int workers = default_workers();
  std::vector<Criterion> results;

  results.push_back(run_criterion(
      1, "Hurwitz CF round-trip, N(nu) <= 100, all fields", [&](Criterion& c) {
        for (int d : ALL_D) fold(c, check_cf_round_trip(d, 100));
      }));

  results.push_back(run_criterion(
      2,
      "Hecke first-row identity = sigma~_{2k+2}(n), k in 1..4, N(n) <= 50",
      [&](Criterion& c) {
        for (int d : ALL_D)
          fold(c, check_hecke_first_row(d, 1, 4, 50, workers));
      }));

  results.push_back(run_criterion(
      3, "totient identity sum phi~(d) = N(n), N(n) <= 200", [&](Criterion& c) {
        for (int d : ALL_D) fold(c, check_phi_identity(d, 200));
      }));

  results.push_back(run_criterion(
      4, "slash action laws, 200 random words, S^2 = -I-slash = id, k <= 6",
      [&](Criterion& c) {
        for (int d : ALL_D) fold(c, check_slash_laws(d, 3, 6, 200, 911u + d));
      }));

  results.push_back(run_criterion(
      5, "W_{k,k} structure: relations annihilate, coboundary in W, k <= 6",
      [&](Criterion& c) {
        for (int d : ALL_D) fold(c, check_wkk_structure(d, 1, 6));
      }));

  results.push_back(run_criterion(
      6, "integrality of transport/cusp (criterion-1 set, k=2) and A(n)",
      [&](Criterion& c) {
        for (int d : ALL_D) fold(c, check_cusp_integrality(d, 100, 2));
        // A(n) integrality is asserted inside criterion 2 as well; re-check a
        // sample here so this criterion stands on its own
        for (int d : ALL_D) fold(c, check_hecke_first_row(d, 2, 2, 20, workers));
      }));

  results.push_back(run_criterion(
      7, "r_to_c * c_to_r = identity on 50 points per field, k <= 4",
      [&](Criterion& c) {
        for (int d : ALL_D) fold(c, check_rc_inversion(d, 4, 50));
      }));

  results.push_back(run_criterion(
      8, "cusp_matrix(beta) = transport(translation), N(beta) <= 50, k <= 3",
      [&](Criterion& c) {
        for (int d : ALL_D) fold(c, check_translation_crosspath(d, 50, 3));
      }));

  results.push_back(run_criterion(
      9, "eigen sanity: full W at (1,1), zero at (1,0), Cayley-Hamilton",
      [&](Criterion& c) {
        for (int d : ALL_D) fold(c, check_eigen_sanity(d, 1, 3));
      }));

  bool all = true;
  for (const Criterion& c : results) all = all && c.passed();
  std::printf("%s\n", all ? "ALL CRITERIA PASSED" : "CRITERIA FAILED");
  return all ? 0 : 1;
}
