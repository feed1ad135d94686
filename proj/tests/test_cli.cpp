#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "reflectlab/chain.hpp"
#include "reflectlab/config.hpp"
#include "reflectlab/report.hpp"
#include "reflectlab/suites.hpp"

using namespace reflectlab;

namespace {

RunConfig small_config() {
  RunConfig cfg = default_run_config(2, 2);
  cfg.trials = 5;
  cfg.chain.seed = 42;
  return cfg;
}

std::string dump_without_timestamp(const Report& r) {
  return r.to_json(/*include_timestamp=*/false).dump();
}

int run_cli(const std::string& args) {
  const char* bin = std::getenv("REFLECTLAB_BIN");
  if (bin == nullptr) return -1;
  const std::string cmd = std::string(bin) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST(Config, DefaultsRoundTripThroughJson) {
  const RunConfig cfg = default_run_config(3, 2);
  const RunConfig back = config_from_json(config_to_json(cfg));
  EXPECT_EQ(config_to_json(back).dump(), config_to_json(cfg).dump());
  EXPECT_EQ(back.chain.n, 3);
  EXPECT_EQ(back.kplus.xi.size(), 1u);
}

TEST(Config, OverridesAndValidation) {
  nlohmann::json j = config_to_json(default_run_config());
  j["n"] = 3;
  j["trials"] = 7;
  j["tol"] = 1e-7;
  const RunConfig cfg = config_from_json(j);
  EXPECT_EQ(cfg.chain.n, 3);
  EXPECT_EQ(cfg.trials, 7);
  ASSERT_TRUE(cfg.tol_override.has_value());
  EXPECT_EQ(*cfg.tol_override, 1e-7);
  // xi defaults track n when not explicitly given
  EXPECT_EQ(config_from_json(j).kplus.xi, default_xi_plus(3));

  j["q"] = "not a complex";
  EXPECT_THROW(config_from_json(j), std::invalid_argument);
  j["q"] = nlohmann::json::array({1.1, 0.4});
  j["trials"] = 0;
  EXPECT_THROW(config_from_json(j), std::invalid_argument);
}

TEST(Config, HashTracksContent) {
  const RunConfig a = default_run_config();
  RunConfig b = a;
  EXPECT_EQ(config_hash_hex(a), config_hash_hex(b));
  b.chain.seed = 43;
  EXPECT_NE(config_hash_hex(a), config_hash_hex(b));
}

TEST(Config, RepeatedInhomogeneityDiagnosticNamesConstraint) {
  ChainConfig cfg;
  cfg.n = 2;
  cfg.N = 2;
  cfg.z = {Cplx(1.2, 0.3), Cplx(1.2, 0.3)};
  try {
    make_chain(cfg);
    FAIL() << "expected validation failure";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("pairwise distinct"), std::string::npos);
  }
}

TEST(Suites, RegistryAndExpansion) {
  const auto all = suites::expand_suites("all");
  EXPECT_EQ(all.size(), suites::registry().size() - 1);
  for (const auto& name : all) EXPECT_NE(name, "negative_control");
  EXPECT_EQ(suites::expand_suites("ybe"), std::vector<std::string>{"ybe"});
  EXPECT_THROW(suites::expand_suites("nonsense"), std::invalid_argument);
}

TEST(Suites, SummaryCountsConsistent) {
  RunConfig cfg = small_config();
  const Report rep = suites::run_suites(cfg, {"ybe", "unitarity"});
  const ReportSummary s = rep.summary();
  EXPECT_EQ(s.total, static_cast<int>(rep.records.size()));
  int pass = 0, fail = 0, degen = 0;
  for (const auto& r : rep.records) {
    if (r.degenerate)
      ++degen;
    else if (r.pass)
      ++pass;
    else
      ++fail;
  }
  EXPECT_EQ(s.passed, pass);
  EXPECT_EQ(s.failed, fail);
  EXPECT_EQ(s.degenerate, degen);
  EXPECT_EQ(fail, 0);
}

TEST(Suites, RecordsSortedAndAnchored) {
  RunConfig cfg = small_config();
  const Report rep = suites::run_suites(cfg, {"unitarity", "ybe"});
  for (std::size_t i = 1; i < rep.records.size(); ++i) {
    const auto& a = rep.records[i - 1];
    const auto& b = rep.records[i];
    EXPECT_TRUE(a.suite < b.suite || (a.suite == b.suite && a.check_id <= b.check_id));
  }
  for (const auto& r : rep.records) EXPECT_FALSE(r.identity.empty());
}

TEST(Suites, DeterministicReports) {
  RunConfig cfg = small_config();
  const Report a = suites::run_suites(cfg, {"ybe", "crossing", "sectors"});
  const Report b = suites::run_suites(cfg, {"ybe", "crossing", "sectors"});
  EXPECT_EQ(dump_without_timestamp(a), dump_without_timestamp(b));
}

TEST(Suites, ThreadCountDoesNotChangeReport) {
  RunConfig cfg = small_config();
  const Report a = suites::run_suites(cfg, {"ybe", "unitarity", "crossing"});
  setenv("REFLECTLAB_THREADS", "3", 1);
  const Report b = suites::run_suites(cfg, {"ybe", "unitarity", "crossing"});
  unsetenv("REFLECTLAB_THREADS");
  EXPECT_EQ(dump_without_timestamp(a), dump_without_timestamp(b));
}

TEST(Suites, DegenerateResultsDoNotFailTheRun) {
  RunConfig cfg = small_config();
  // theta + 1 - kappa = 0 forces the zero multiple at x = +1
  cfg.kplus.theta = Cplx(1.0);
  cfg.kplus.kappa = Cplx(2.0);
  const Report rep = suites::run_suites(cfg, {"unitarity"});
  const ReportSummary s = rep.summary();
  EXPECT_GT(s.degenerate, 0);
  EXPECT_EQ(s.failed, 0);
  EXPECT_TRUE(rep.all_passed());
}

TEST(Suites, NegativeControlFailsByConstruction) {
  RunConfig cfg = default_run_config(2, 3);
  cfg.trials = 10;
  const Report rep = suites::run_suites(cfg, {"negative_control"});
  EXPECT_FALSE(rep.all_passed());
  double worst = 0.0;
  for (const auto& r : rep.records) {
    EXPECT_FALSE(r.pass);
    worst = std::max(worst, r.residual.relative);
  }
  EXPECT_GT(worst, 1e-4);
}

TEST(Harness, WritesReportAndSummary) {
  RunConfig cfg = small_config();
  cfg.suite = "ybe";
  std::ostringstream human;
  const auto outcome =
      suites::run_harness(cfg, "/tmp/reflectlab_test_report.json", human);
  EXPECT_EQ(outcome.exit_code, 0);
  EXPECT_NE(human.str().find("SUITE ybe:"), std::string::npos);
  std::ifstream f("/tmp/reflectlab_test_report.json");
  ASSERT_TRUE(f.good());
  nlohmann::json j;
  f >> j;
  EXPECT_EQ(j.at("schema").get<int>(), 1);
  EXPECT_EQ(j.at("provenance").at("rng").get<std::string>(), "splitmix64");
  EXPECT_EQ(j.at("provenance").at("seed").get<std::uint64_t>(), 42u);
  EXPECT_TRUE(j.at("provenance").contains("timestamp"));
  EXPECT_EQ(j.at("summary").at("failed").get<int>(), 0);
}

TEST(Cli, ExitCodes) {
  if (std::getenv("REFLECTLAB_BIN") == nullptr)
    GTEST_SKIP() << "REFLECTLAB_BIN not set";
  EXPECT_EQ(run_cli("check --suite ybe --trials 3 --seed 42"), 0);
  EXPECT_EQ(run_cli("check --suite negative_control --N 2 --trials 3"), 1);
  EXPECT_EQ(run_cli("check --suite nonsense"), 2);
  // malformed config: repeated inhomogeneities
  {
    std::ofstream f("/tmp/reflectlab_bad_config.json");
    f << R"({"N": 2, "z": [[1.2, 0.3], [1.2, 0.3]]})";
  }
  EXPECT_EQ(run_cli("check --config /tmp/reflectlab_bad_config.json"), 2);
  EXPECT_EQ(run_cli("check --config /does/not/exist.json"), 2);
  EXPECT_EQ(run_cli("check --print-default-config"), 0);
}

TEST(Cli, DefaultConfigPrintsParsableJson) {
  const char* bin = std::getenv("REFLECTLAB_BIN");
  if (bin == nullptr) GTEST_SKIP() << "REFLECTLAB_BIN not set";
  const std::string cmd = std::string(bin) +
                          " check --print-default-config --n 3 > "
                          "/tmp/reflectlab_default.json 2>/dev/null";
  ASSERT_EQ(WEXITSTATUS(std::system(cmd.c_str())), 0);
  std::ifstream f("/tmp/reflectlab_default.json");
  nlohmann::json j;
  f >> j;
  EXPECT_EQ(j.at("n").get<int>(), 3);
  EXPECT_TRUE(j.contains("doc"));
  const RunConfig cfg = config_from_json(j);
  EXPECT_EQ(cfg.kplus.xi.size(), 1u);
}
