// Command-line front end: exact Bianchi period-polynomial computations over
// the five Euclidean imaginary quadratic fields, JSON on stdout.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "bianchi/elem_io.hpp"
#include "bianchi/json_io.hpp"

namespace {

using bianchi::Json;

void emit(const Json& payload, const std::string& output_path) {
  std::string text = payload.dump(2) + "\n";
  if (output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output_path);
    if (!out) throw std::runtime_error("cannot open " + output_path);
    out << text;
  }
}

std::vector<std::pair<bianchi::QuadInt, bianchi::QuadElem>> parse_pairs(
    const std::string& text, int d) {
  std::vector<std::pair<bianchi::QuadInt, bianchi::QuadElem>> out;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(start, end - start);
    size_t colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("expected n:lambda in \"" + item + "\"");
    bianchi::QuadElem n = bianchi::parse_elem(item.substr(0, colon), d);
    auto ni = n.to_int();
    if (!ni) throw std::invalid_argument("n must lie in O_K: " + item);
    out.emplace_back(*ni, bianchi::parse_elem(item.substr(colon + 1), d));
    start = end + 1;
  }
  if (out.empty()) throw std::invalid_argument("no n:lambda pairs given");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bianchi period polynomials over Euclidean imaginary "
               "quadratic fields (exact arithmetic)"};
  app.require_subcommand(1);

  int d = 1;
  int k = 0;
  long norm_bound = 20;
  std::string kappa_text, n_text, pairs_text, output_path;

  auto add_common = [&](CLI::App* sub, bool with_k) {
    sub->add_option("--d", d, "field code D in {1,2,3,7,11}")->required();
    if (with_k) sub->add_option("--k", k, "weight parameter k >= 0")->required();
    sub->add_option("--output", output_path, "write JSON to a file");
  };

  CLI::App* cf = app.add_subcommand("cf", "Hurwitz continued fraction of kappa");
  add_common(cf, false);
  cf->add_option("--kappa", kappa_text, "element of K, or (elem)/(elem)")
      ->required();

  CLI::App* wkk = app.add_subcommand("wkk", "basis of W_{k,k} and its quotient");
  add_common(wkk, true);

  CLI::App* transport =
      app.add_subcommand("transport", "cusp matrix M(kappa) on base periods");
  add_common(transport, true);
  transport->add_option("--kappa", kappa_text, "element of K, or (elem)/(elem)")
      ->required();

  CLI::App* hecke = app.add_subcommand("hecke", "Hecke matrix A(n)");
  add_common(hecke, true);
  hecke->add_option("--n", n_text, "nonzero element of O_K")->required();

  CLI::App* eigen = app.add_subcommand(
      "eigen", "intersected eigenspaces of A(n_i) inside W_{k,k}");
  add_common(eigen, true);
  eigen->add_option("--pairs", pairs_text, "n1:lambda1,n2:lambda2,...")
      ->required();

  CLI::App* verify = app.add_subcommand(
      "verify", "batch identity checks; nonzero exit on any failure");
  add_common(verify, true);
  verify->add_option("--norm-bound", norm_bound, "norm bound for n and nu");

  std::string command;
  try {
    app.parse(argc, argv);
    command = app.get_subcommands().front()->get_name();

    if (!bianchi::valid_d_code(d))
      throw std::domain_error("unsupported field D=" + std::to_string(d));
    if (k < 0) throw std::domain_error("k must be nonnegative");

    if (command == "cf") {
      bianchi::QuadElem kappa = bianchi::parse_elem_or_quotient(kappa_text, d);
      emit(bianchi::cf_json(bianchi::expand(kappa)), output_path);
    } else if (command == "wkk") {
      emit(bianchi::wkk_json(d, k, bianchi::wkk_basis(d, k)), output_path);
    } else if (command == "transport") {
      bianchi::QuadElem kappa = bianchi::parse_elem_or_quotient(kappa_text, d);
      Json payload{{"d", d}, {"k", k}, {"kappa", kappa.str()}};
      payload["matrix"] = bianchi::to_json(bianchi::cusp_matrix(kappa, k));
      emit(payload, output_path);
    } else if (command == "hecke") {
      bianchi::QuadElem n = bianchi::parse_elem(n_text, d);
      auto ni = n.to_int();
      if (!ni || ni->is_zero())
        throw std::domain_error("n must be a nonzero element of O_K");
      emit(bianchi::hecke_json(bianchi::hecke_matrix(*ni, k)), output_path);
    } else if (command == "eigen") {
      auto pairs = parse_pairs(pairs_text, d);
      bianchi::EigenSpace es = bianchi::eigenspace_in_w(pairs, d, k);
      emit(bianchi::eigen_json(d, k, pairs, es), output_path);
    } else if (command == "verify") {
      bianchi::VerifyReport rep =
          bianchi::run_verify(d, k, norm_bound, bianchi::default_workers());
      emit(bianchi::verify_json(rep), output_path);
      return rep.all_passed() ? 0 : 1;
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    Json err{{"error", e.what()}};
    if (!command.empty()) err["command"] = command;
    std::cerr << err.dump(2) << "\n";
    return 2;
  }
}
