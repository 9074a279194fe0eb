// scatter: field info, scatteredness checks, family scans and verification suites.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scatter/cli.hpp"

int main(int argc, char** argv) {
  namespace cli = scatter::cli;
  CLI::App app{"Scattered linearized polynomials over finite fields"};
  app.require_subcommand(1);

  cli::RunOptions ro;
  ro.cap = cli::default_cap();
  app.add_option("--cap", ro.cap, "Largest field size to tabulate (env SCATTER_FIELD_CAP)");
  app.add_option("--jobs", ro.jobs, "Worker threads for the oracle")->check(CLI::PositiveNumber);

  std::uint32_t p = 0, m = 1, n = 0;
  auto field_opts = [&](CLI::App* sub) {
    sub->add_option("--p", p, "Characteristic")->required();
    sub->add_option("--m", m, "q = p^m")->capture_default_str();
    sub->add_option("--n", n, "Extension degree over F_q")->required();
  };

  std::string output = "text";
  auto* info = app.add_subcommand("field-info", "Print modulus, gamma and q^n-1 factorization");
  field_opts(info);
  info->add_option("--output", output, "text | json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  scatter::CheckRequest req;
  auto* check = app.add_subcommand("check", "Decide scatteredness of one polynomial at one index");
  field_opts(check);
  check->add_option("--poly", req.poly, "Terms r:g^k or r:[c0,c1,...], comma separated")->required();
  check->add_option("--index", req.index, "Index t")->required();
  check->add_option("--mode", req.mode, "oracle | criteria | both")->capture_default_str();
  check->add_option("--output", req.output, "json | csv | text")->capture_default_str();

  cli::ScanRequest scan;
  auto* scan_cmd = app.add_subcommand("scan", "Tabulate criteria and oracle over a family");
  field_opts(scan_cmd);
  scan_cmd->add_option("--family", scan.family, "pseudoregulus | binomial | custom")->capture_default_str();
  scan_cmd->add_option("--poly", scan.polys, "Polynomial (custom family, repeatable)");
  scan_cmd->add_option("--index", scan.indices, "Indices to test (repeatable)");
  scan_cmd->add_option("--coeff-logs", scan.coeff_logs, "Binomial coefficient gamma-logs")->capture_default_str();
  scan_cmd->add_flag("!--no-order-filter", scan.order_filter, "Keep binomials with |a_2| not dividing q^{r_1}-1");
  scan_cmd->add_option("--mode", scan.mode, "oracle | criteria | both")->capture_default_str();
  scan_cmd->add_option("--output", scan.output, "csv | json")->capture_default_str();

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "lemmas | pseudoregulus | binomials | reductions | pp-criterion | lp | csajbok | "
                                     "exceptional | all")
      ->required();

  std::vector<std::uint32_t> m_list;
  std::uint32_t desk_index = 0;
  auto* desk = app.add_subcommand("exceptional", "Oracle over F_{q^{nm}} for each m in --m-list");
  field_opts(desk);
  std::string desk_poly;
  desk->add_option("--poly", desk_poly, "Polynomial with g^k coefficients in F_{q^n}")->required();
  desk->add_option("--index", desk_index, "Index t")->required();
  desk->add_option("--m-list", m_list, "Extension multipliers")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : cli::kExitUsage;
  }

  if (*info) return cli::cmd_field_info(p, m, n, output, ro, std::cout, std::cerr);
  if (*check) {
    req.p = p;
    req.m = m;
    req.n = n;
    return cli::cmd_check(req, ro, std::cout, std::cerr);
  }
  if (*scan_cmd) {
    scan.p = p;
    scan.m = m;
    scan.n = n;
    return cli::cmd_scan(scan, ro, std::cout, std::cerr);
  }
  if (*verify) return cli::cmd_verify(suite, ro, std::cout, std::cerr);
  return cli::cmd_exceptional(p, m, n, desk_poly, desk_index, m_list, ro, std::cout, std::cerr);
}
