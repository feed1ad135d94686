#pragma once

#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "reflectlab/chain.hpp"
#include "reflectlab/k_matrix.hpp"
#include "reflectlab/rng.hpp"

namespace reflectlab {

/// Boundary-family parameter sets used by the harness. The xi defaults depend
/// on n and are re-derived when not given explicitly.
struct RunConfig {
  ChainConfig chain;
  KFamilyParams kplus;
  KFamilyParams kminus;
  int trials = 20;
  std::optional<double> tol_override;  // overrides every check threshold
  std::string suite = "all";
};

inline std::vector<Cplx> default_xi_plus(int n) {
  std::vector<Cplx> xi;
  for (int a = 1; a <= n / 2; ++a)
    xi.push_back(1.2 * std::polar(1.0, M_PI * (2.0 * a - 1.0) / 7.0));
  return xi;
}

inline std::vector<Cplx> default_xi_minus(int n) {
  std::vector<Cplx> xi;
  for (int a = 1; a <= n / 2; ++a)
    xi.push_back(0.8 * std::polar(1.0, M_PI * (3.0 * a - 2.0) / 11.0));
  return xi;
}

inline RunConfig default_run_config(int n = 2, int N = 3) {
  RunConfig cfg;
  cfg.chain.n = n;
  cfg.chain.N = N;
  cfg.kplus.theta = {1.1, 0.2};
  cfg.kplus.kappa = {0.45, -0.15};
  cfg.kplus.xi = default_xi_plus(n);
  cfg.kminus.theta = {0.7, -0.3};
  cfg.kminus.kappa = {1.3, 0.25};
  cfg.kminus.xi = default_xi_minus(n);
  return cfg;
}

namespace detail {

inline nlohmann::json cplx_json(Cplx c) {
  return nlohmann::json::array({c.real(), c.imag()});
}

inline Cplx cplx_from(const nlohmann::json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::invalid_argument(std::string("config: ") + what +
                                " must be a two-element [re, im] array");
  return {j[0].get<double>(), j[1].get<double>()};
}

inline std::vector<Cplx> cplx_list_from(const nlohmann::json& j, const char* what) {
  if (!j.is_array())
    throw std::invalid_argument(std::string("config: ") + what +
                                " must be an array of [re, im] pairs");
  std::vector<Cplx> out;
  for (const auto& e : j) out.push_back(cplx_from(e, what));
  return out;
}

}  // namespace detail

/// Serialized form; complex numbers appear as [re, im] arrays.
inline nlohmann::json config_to_json(const RunConfig& cfg, bool with_doc = false) {
  using nlohmann::json;
  json j;
  j["n"] = cfg.chain.n;
  j["N"] = cfg.chain.N;
  j["q"] = detail::cplx_json(cfg.chain.q);
  j["sqrt_p"] = detail::cplx_json(cfg.chain.sqrt_p);
  if (cfg.chain.z.empty()) {
    j["z"] = nullptr;
  } else {
    json z = json::array();
    for (const Cplx& v : cfg.chain.z) z.push_back(detail::cplx_json(v));
    j["z"] = z;
  }
  if (cfg.chain.twist.empty()) {
    j["twist"] = nullptr;
  } else {
    json t = json::array();
    for (const Cplx& v : cfg.chain.twist) t.push_back(detail::cplx_json(v));
    j["twist"] = t;
  }
  j["seed"] = cfg.chain.seed;
  j["entry_cap"] = cfg.chain.entry_cap;
  j["trials"] = cfg.trials;
  j["tol"] = cfg.tol_override ? json(*cfg.tol_override) : json(nullptr);
  j["suite"] = cfg.suite;
  auto kjson = [](const KFamilyParams& k) {
    json out;
    out["theta"] = detail::cplx_json(k.theta);
    out["kappa"] = detail::cplx_json(k.kappa);
    json xi = json::array();
    for (const Cplx& v : k.xi) xi.push_back(detail::cplx_json(v));
    out["xi"] = xi;
    return out;
  };
  j["k_plus"] = kjson(cfg.kplus);
  j["k_minus"] = kjson(cfg.kminus);
  if (with_doc) {
    j["doc"] = json{
        {"n", "local dimension of each leg (>= 2)"},
        {"N", "chain length; capped per n by the dense budget"},
        {"q", "deformation parameter [re, im]; q^(2k) != 1 up to k = 2n"},
        {"sqrt_p", "square root of the shift parameter p (fixes the branch)"},
        {"z", "inhomogeneities, N [re, im] pairs; null = sample from seed"},
        {"twist", "diagonal twist entries, n pairs; null = identity"},
        {"seed", "splitmix64 seed; identical seeds reproduce reports"},
        {"entry_cap", "cap on dense complex entries per operator"},
        {"trials", "random spectral points per sampled check"},
        {"tol", "override every pass threshold; null = per-check defaults"},
        {"suite", "suite name or 'all' (all excludes negative_control)"},
        {"k_plus", "left boundary family: theta, kappa, xi (floor(n/2) entries)"},
        {"k_minus", "right boundary family, conjugated onto the other end"}};
  }
  return j;
}

inline RunConfig config_from_json(const nlohmann::json& j) {
  int n = j.value("n", 2);
  int N = j.value("N", 3);
  RunConfig cfg = default_run_config(n, N);
  if (j.contains("q")) cfg.chain.q = detail::cplx_from(j.at("q"), "q");
  if (j.contains("sqrt_p"))
    cfg.chain.sqrt_p = detail::cplx_from(j.at("sqrt_p"), "sqrt_p");
  if (j.contains("z") && !j.at("z").is_null())
    cfg.chain.z = detail::cplx_list_from(j.at("z"), "z");
  if (j.contains("twist") && !j.at("twist").is_null())
    cfg.chain.twist = detail::cplx_list_from(j.at("twist"), "twist");
  if (j.contains("seed")) cfg.chain.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("entry_cap"))
    cfg.chain.entry_cap = j.at("entry_cap").get<std::size_t>();
  if (j.contains("trials")) cfg.trials = j.at("trials").get<int>();
  if (j.contains("tol") && !j.at("tol").is_null())
    cfg.tol_override = j.at("tol").get<double>();
  if (j.contains("suite")) cfg.suite = j.at("suite").get<std::string>();
  auto kfrom = [](const nlohmann::json& src, KFamilyParams& dst) {
    if (src.contains("theta")) dst.theta = detail::cplx_from(src.at("theta"), "theta");
    if (src.contains("kappa")) dst.kappa = detail::cplx_from(src.at("kappa"), "kappa");
    if (src.contains("xi")) dst.xi = detail::cplx_list_from(src.at("xi"), "xi");
  };
  if (j.contains("k_plus")) kfrom(j.at("k_plus"), cfg.kplus);
  if (j.contains("k_minus")) kfrom(j.at("k_minus"), cfg.kminus);
  if (cfg.trials < 1) throw std::invalid_argument("config: trials must be >= 1");
  return cfg;
}

/// FNV-1a of the canonical dump (doc excluded, timestamp-free), hex-encoded.
inline std::string config_hash_hex(const RunConfig& cfg) {
  const std::string dump = config_to_json(cfg, /*with_doc=*/false).dump();
  std::ostringstream os;
  os << std::hex << fnv1a64(dump);
  return os.str();
}

}  // namespace reflectlab
