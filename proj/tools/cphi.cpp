#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cphi/errors.hpp"
#include "cphi/runner/commands.hpp"

using namespace cphi;
using namespace cphi::runner;

int main(int argc, char** argv) {
  CLI::App app{"Exact 2-adic tools for the 3x+1 conjugacy map Phi: evaluation, parity vectors, farPoint search"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "text";
  std::string cache;

  app.add_option("--precision", config.precision, "Window precision in binary digits")
      ->envname("CPHI_PRECISION")
      ->capture_default_str();
  app.add_option("--rmax", config.r_max, "Search depth bound beyond the prefix")
      ->envname("CPHI_RMAX")
      ->capture_default_str();
  app.add_option("--node-cap", config.node_cap, "Abort a search after this many live nodes")
      ->envname("CPHI_NODE_CAP")
      ->capture_default_str();
  app.add_option("--workers", config.workers, "Parallel table rows")->envname("CPHI_WORKERS")->capture_default_str();
  app.add_option("--cache", cache, "JSON-lines results cache for table")->envname("CPHI_CACHE");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->envname("CPHI_FORMAT")
      ->capture_default_str();
  app.add_option("--seed", config.seed, "Random seed for verify and cache spot checks")
      ->envname("CPHI_SEED")
      ->capture_default_str();
  app.add_option("--trials", config.trials, "Random trials per verify suite")
      ->envname("CPHI_TRIALS")
      ->capture_default_str();

  std::string phi_input;
  auto* phi = app.add_subcommand("phi", "Phi of a rational (\"7/3\", \"1(10)\") or a window (\"1101...\")");
  phi->add_option("input", phi_input)->required();

  std::string parity_input;
  auto* parity = app.add_subcommand("parity", "Parity vector (Phi^-1) of a rational, to --precision digits");
  parity->add_option("input", parity_input)->required();

  std::string fp_x;
  std::size_t fp_k = 0;
  auto* fp = app.add_subcommand("farpoint", "fP(x, k) by fixed-point extension search");
  fp->add_option("x", fp_x, "Prefix as a decimal natural < 2^k")->required();
  fp->add_option("k", fp_k, "Prefix length in digits")->required();

  std::string family;
  std::size_t n_from = 1;
  std::size_t n_to = 1;
  auto* table = app.add_subcommand("table", "farPoints of a prefix family, with predicted pseudoperiods");
  table->add_option("family", family)->required()->check(CLI::IsMember({"minus-one", "third-a", "third-b"}));
  table->add_option("n_from", n_from)->required();
  table->add_option("n_to", n_to)->required();

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a property suite");
  {
    std::vector<std::string> names = verify_suite_names();
    names.push_back("all");
    verify->add_option("suite", suite)->required()->check(CLI::IsMember(names));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  config.format = *parse_format(format);
  if (!cache.empty()) config.cache_path = cache;

  try {
    CommandResult res;
    if (*phi) {
      res = cmd_phi(phi_input, config);
    } else if (*parity) {
      res = cmd_parity(parity_input, config);
    } else if (*fp) {
      res = cmd_farpoint(fp_x, fp_k, config);
    } else if (*table) {
      res = cmd_table(*parse_family(family), n_from, n_to, config);
    } else {
      res = cmd_verify(suite, config);
    }
    std::cout << res.out;
    std::cerr << res.err;
    return res.exit_code;
  } catch (const parse_error& e) {
    std::cerr << "error: cannot parse input: " << e.what() << '\n';
  } catch (const config_error& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const cphi::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const precision_error& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}
