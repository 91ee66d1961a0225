#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ksbound/apolar.hpp"
#include "ksbound/constants.hpp"
#include "ksbound/extremal.hpp"
#include "ksbound/groebner.hpp"
#include "ksbound/identities.hpp"
#include "ksbound/ksexp.hpp"

namespace ksb {

using json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "1.0.0";

/// One self-describing record per CLI invocation.
struct Report {
  std::string command;
  json inputs = json::object();
  json result = json::object();
  std::optional<json> error;
  json versions = json::object();
  std::uint64_t seed = 0;

  json to_json() const;
  static Report from_json(const json& j);
  bool operator==(const Report&) const = default;
};

/// Library, GMP, Eigen and compiler versions.
json versions();

/// "num/den", always with a slash.
json exact_json(const mpq_class& q);
/// {"re": "a/b", "im": "c/d"}
json exact_json(const GaussianRational& z);
/// {"value": v, "tolerance": tol, "context": ...}; tol < 0 is written as null.
json approx_json(double value, double tolerance, const std::string& context);
json complex_json(std::complex<double> z);

json polys_json(const std::vector<Polynomial>& ps, const std::vector<std::string>& names);
json verdict_json(const VarietyVerdict& v, const std::vector<std::string>& names);
json sphere_json(const SphereMinResult& r);
json c1_json(const C1Result& r, unsigned rho);
json c2_json(const C2Exact& c, unsigned rho);
json necessity_json(const NecessityTable& t);
json real_witness_json(const RealWitness& w, const std::vector<std::string>& names);
json bombieri_json(const BombieriCheck& c);
json ks_json(const KSReport& r, const std::vector<std::string>& names);
json spectral_json(const std::vector<PinascoRow>& rows, double sup);
json suites_json(const std::vector<SuiteResult>& suites);

/// Differences between two reports: strings, integers and booleans must be
/// equal, floats must agree to rel_tol relative (plus 1e-12 absolute).
/// "versions" is ignored.
std::vector<std::string> compare_reports(const json& expected, const json& actual, double rel_tol = 1e-6);

}  // namespace ksb
