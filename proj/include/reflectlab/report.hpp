#pragma once

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "reflectlab/residual.hpp"
#include "reflectlab/rng.hpp"
#include "reflectlab/version.hpp"

namespace reflectlab {

using Json = nlohmann::json;

inline Json to_json(Cplx c) { return Json::array({c.real(), c.imag()}); }

/// One verified identity instance. `identity` names the checked relation in
/// standard notation; params echo the spectral points and shape.
struct CheckRecord {
  std::string suite;
  std::string check_id;
  std::string identity;
  Json params = Json::object();
  Residual residual;
  double threshold = 0.0;
  bool pass = false;
  bool degenerate = false;
};

inline CheckRecord make_record(std::string suite, std::string check_id,
                               std::string identity, Json params,
                               const Residual& r, double threshold) {
  CheckRecord rec;
  rec.suite = std::move(suite);
  rec.check_id = std::move(check_id);
  rec.identity = std::move(identity);
  rec.params = std::move(params);
  rec.residual = r;
  rec.threshold = threshold;
  rec.pass = r.relative <= threshold;
  return rec;
}

struct ReportSummary {
  int total = 0;
  int passed = 0;
  int failed = 0;
  int degenerate = 0;
};

/// Full machine-readable outcome. Identical config and seed reproduce the
/// JSON byte for byte; only the timestamp field is outside that contract.
struct Report {
  std::vector<CheckRecord> records;
  std::uint64_t seed = 0;
  std::string config_hash;
  std::string timestamp;

  void sort_records() {
    std::stable_sort(records.begin(), records.end(),
                     [](const CheckRecord& a, const CheckRecord& b) {
                       if (a.suite != b.suite) return a.suite < b.suite;
                       return a.check_id < b.check_id;
                     });
  }

  ReportSummary summary() const {
    ReportSummary s;
    s.total = static_cast<int>(records.size());
    for (const CheckRecord& r : records) {
      if (r.degenerate) {
        ++s.degenerate;
      } else if (r.pass) {
        ++s.passed;
      } else {
        ++s.failed;
      }
    }
    return s;
  }

  bool all_passed() const { return summary().failed == 0; }

  Json to_json(bool include_timestamp = true) const {
    Json j;
    j["schema"] = kReportSchema;
    Json prov;
    prov["version"] = kVersion;
    prov["rng"] = kRngAlgorithm;
    prov["seed"] = seed;
    prov["config_hash"] = config_hash;
    if (include_timestamp) prov["timestamp"] = timestamp;
    j["provenance"] = prov;
    const ReportSummary s = summary();
    j["summary"] = Json{{"total", s.total},
                        {"passed", s.passed},
                        {"failed", s.failed},
                        {"degenerate", s.degenerate}};
    Json recs = Json::array();
    for (const CheckRecord& r : records) {
      Json jr;
      jr["suite"] = r.suite;
      jr["check_id"] = r.check_id;
      jr["identity"] = r.identity;
      jr["params"] = r.params;
      jr["residual"] = Json{{"abs", r.residual.absolute},
                            {"rel", r.residual.relative},
                            {"scalar", reflectlab::to_json(r.residual.scalar)}};
      jr["threshold"] = r.threshold;
      jr["pass"] = r.pass;
      jr["degenerate"] = r.degenerate;
      recs.push_back(std::move(jr));
    }
    j["records"] = std::move(recs);
    return j;
  }

  /// One line per suite: SUITE name: passed/total (max rel residual ...).
  std::string human_summary() const {
    struct Agg {
      int total = 0, passed = 0, degenerate = 0;
      double worst = 0.0;
    };
    std::map<std::string, Agg> by_suite;
    for (const CheckRecord& r : records) {
      Agg& a = by_suite[r.suite];
      ++a.total;
      if (r.degenerate)
        ++a.degenerate;
      else if (r.pass)
        ++a.passed;
      a.worst = std::max(a.worst, r.residual.relative);
    }
    std::ostringstream os;
    for (const auto& [name, a] : by_suite) {
      os << "SUITE " << name << ": " << a.passed << "/" << (a.total - a.degenerate);
      if (a.degenerate > 0) os << " (+" << a.degenerate << " degenerate)";
      os.setf(std::ios::scientific, std::ios::floatfield);
      os.precision(2);
      os << " (max rel residual " << a.worst << ")\n";
      os.unsetf(std::ios::floatfield);
    }
    const ReportSummary s = summary();
    os << "TOTAL: " << s.passed << " passed, " << s.failed << " failed, "
       << s.degenerate << " degenerate\n";
    return os.str();
  }
};

}  // namespace reflectlab
