#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "reflectlab/config.hpp"
#include "reflectlab/suites.hpp"
#include "reflectlab/version.hpp"

namespace {

reflectlab::Cplx parse_complex_flag(const std::string& s, const char* what) {
  const auto comma = s.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument(std::string(what) + ": expected RE,IM");
  std::size_t done = 0;
  const double re = std::stod(s.substr(0, comma), &done);
  const double im = std::stod(s.substr(comma + 1), &done);
  return {re, im};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "reflectlab: residual verification of R/K-matrix identities, commuting "
      "transfer matrices and difference-equation transport matrices"};
  app.set_version_flag("--version", reflectlab::kVersion);
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "run verification suites");
  std::string suite;
  std::optional<int> n_flag, N_flag, trials_flag;
  std::optional<std::uint64_t> seed_flag;
  std::optional<double> tol_flag;
  std::string q_flag, sqrtp_flag, config_path, report_path;
  bool print_default = false;
  check->add_option("--suite", suite, "suite name or 'all'");
  check->add_option("--n", n_flag, "local dimension (>= 2)");
  check->add_option("--N", N_flag, "chain length");
  check->add_option("--q", q_flag, "deformation parameter as RE,IM");
  check->add_option("--sqrt-p", sqrtp_flag, "square root of the shift parameter as RE,IM");
  check->add_option("--seed", seed_flag, "RNG seed (splitmix64)");
  check->add_option("--trials", trials_flag, "random points per sampled check");
  check->add_option("--tol", tol_flag, "override every pass threshold");
  check->add_option("--config", config_path, "JSON config file");
  check->add_option("--report", report_path, "write the JSON report here");
  check->add_flag("--print-default-config", print_default,
                  "print the effective default config (with field docs) and exit");

  CLI11_PARSE(app, argc, argv);

  try {
    nlohmann::json j = reflectlab::config_to_json(reflectlab::default_run_config());
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) throw std::invalid_argument("cannot read config file " + config_path);
      nlohmann::json file_json;
      f >> file_json;
      j.update(file_json);
    }
    if (n_flag) j["n"] = *n_flag;
    if (N_flag) j["N"] = *N_flag;
    if (seed_flag) j["seed"] = *seed_flag;
    if (trials_flag) j["trials"] = *trials_flag;
    if (tol_flag) j["tol"] = *tol_flag;
    if (!suite.empty()) j["suite"] = suite;
    if (!q_flag.empty()) {
      const auto q = parse_complex_flag(q_flag, "--q");
      j["q"] = nlohmann::json::array({q.real(), q.imag()});
    }
    if (!sqrtp_flag.empty()) {
      const auto sp = parse_complex_flag(sqrtp_flag, "--sqrt-p");
      j["sqrt_p"] = nlohmann::json::array({sp.real(), sp.imag()});
    }

    const reflectlab::RunConfig cfg = reflectlab::config_from_json(j);
    if (print_default) {
      std::cout << reflectlab::config_to_json(cfg, /*with_doc=*/true).dump(2)
                << "\n";
      return 0;
    }
    const auto outcome = reflectlab::suites::run_harness(cfg, report_path, std::cout);
    return outcome.exit_code;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
}
