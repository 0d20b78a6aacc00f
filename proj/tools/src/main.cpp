#include <algorithm>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cli/config.hpp"
#include "cli/render.hpp"
#include "cli/report.hpp"
#include "cli/suites.hpp"
#include "cli/tables.hpp"
#include "pavstat/statpoly.hpp"

namespace {

constexpr const char* kFooter = R"(Polynomial rendering:
  Terms c*q^a*t^b are listed by ascending total degree a+b, then ascending
  q-degree a. A coefficient or exponent equal to 1 is omitted, negative
  terms are joined with " - ", and the zero polynomial prints as 0.
  One-variable polynomials (ank in q, signed in t) list ascending degree.
  Example: `pavstat poly inv 2` prints "t^2 + q*t".

Cap on n: --max-n, else the PAVSTAT_MAX_N environment variable, else 12
(15 with --extended).

Exit status: 0 on success, 1 if any verification check fails, 2 for a
refused or invalid request.)";

constexpr int kExitFailed = 1;
constexpr int kExitRefused = 2;

}  // namespace

int main(int argc, char** argv) {
  using namespace pavstat::cli;

  CLI::App app{"Statistics of 321-avoiding permutations: polynomials, checks and tables."};
  app.footer(kFooter);
  app.require_subcommand(1);

  int max_n_flag = 0;
  bool extended = false;
  CLI::Option* max_n_opt = app.add_option("--max-n", max_n_flag, "cap on n");
  app.add_flag("--extended", extended, "raise the default cap to 15");

  auto* poly = app.add_subcommand("poly", "print M_n (maj), I_n (inv), I_n(-1,t) (signed) or A_{n,k} (ank)");
  poly->fallthrough();
  std::string kind;
  int n = 0;
  std::optional<int> k;
  bool poly_json_out = false;
  poly->add_option("kind", kind, "maj | inv | signed | ank")
      ->required()
      ->check(CLI::IsMember({"maj", "inv", "signed", "ank"}));
  poly->add_option("n", n, "length")->required();
  poly->add_option("k", k, "number of descents (ank only)");
  poly->add_flag("--json", poly_json_out, "print JSON with the term list");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->fallthrough();
  std::string suite;
  bool verify_json = false;
  bool verbose = false;
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("suite", suite, "symmetry | unimodality | parity | signed | cf | gf | dyck | all")
      ->required()
      ->check(CLI::IsMember(suites));
  verify->add_flag("--json", verify_json, "print the report as JSON");
  verify->add_flag("-v,--verbose", verbose, "show details of passing checks");

  auto* exporter = app.add_subcommand("export", "write a coefficient table");
  exporter->fallthrough();
  std::string table;
  std::string format;
  std::string out_path;
  exporter->add_option("table", table, "catalan | narayana | s_nk | symmetric_dyck | a_nk_at_1 | signed")
      ->required()
      ->check(CLI::IsMember(table_names()));
  exporter->add_option("--format", format, "json | csv")
      ->required()
      ->check(CLI::IsMember({"json", "csv"}));
  exporter->add_option("--out", out_path, "output file (default: standard output)");

  CLI11_PARSE(app, argc, argv);

  int cap = 0;
  try {
    cap = resolve_max_n(max_n_opt->count() ? std::optional<int>(max_n_flag) : std::nullopt,
                        extended);
  } catch (const std::exception& e) {
    std::cerr << "pavstat: " << e.what() << '\n';
    return kExitRefused;
  }
  pavstat::set_memo_limit(std::max(pavstat::memo_limit(), cap));

  try {
    if (*poly) {
      PolyRequest request{parse_poly_kind(kind), n, k};
      if (poly_json_out) {
        std::cout << poly_json(request, cap).dump(2) << '\n';
      } else {
        std::cout << render_poly(request, cap) << '\n';
      }
      return 0;
    }
    if (*verify) {
      Report report;
      run_suite(suite, SuiteOptions{cap}, report);
      report.sort();
      if (verify_json) {
        std::cout << report.to_json().dump(2) << '\n';
      } else {
        std::cout << "cap n <= " << cap << '\n';
        report.print(std::cout, verbose);
      }
      return report.ok() ? 0 : kExitFailed;
    }
    if (*exporter) {
      const Table t = build_table(table, cap);
      if (out_path.empty()) {
        write_table(t, parse_format(format), std::cout);
      } else {
        write_table_file(t, parse_format(format), out_path);
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "pavstat: " << e.what() << '\n';
    return kExitRefused;
  }
  return 0;
}
