#include "ksbound/report.hpp"

#include <cmath>

#include <Eigen/Core>

#include "ksbound/polyparse.hpp"

namespace ksb {

json Report::to_json() const {
  json j;
  j["command"] = command;
  j["inputs"] = inputs;
  if (error)
    j["error"] = *error;
  else
    j["result"] = result;
  j["versions"] = versions;
  j["seed"] = seed;
  return j;
}

Report Report::from_json(const json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  if (j.contains("error"))
    r.error = j.at("error");
  else
    r.result = j.at("result");
  r.versions = j.at("versions");
  r.seed = j.at("seed").get<std::uint64_t>();
  return r;
}

json versions() {
  json v;
  v["ksbound"] = kVersion;
  v["gmp"] = gmp_version;
  v["eigen"] = std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
               std::to_string(EIGEN_MINOR_VERSION);
  v["json"] = std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." + std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
              std::to_string(NLOHMANN_JSON_VERSION_PATCH);
#if defined(__clang__)
  v["compiler"] = "clang " __clang_version__;
#elif defined(__GNUC__)
  v["compiler"] = "gcc " __VERSION__;
#else
  v["compiler"] = "unknown";
#endif
  return v;
}

json exact_json(const mpq_class& q) { return rational_to_fraction(q); }

json exact_json(const GaussianRational& z) {
  json j;
  j["re"] = rational_to_fraction(z.real());
  j["im"] = rational_to_fraction(z.imag());
  return j;
}

json approx_json(double value, double tolerance, const std::string& context) {
  json j;
  j["value"] = value;
  j["tolerance"] = tolerance < 0 ? json(nullptr) : json(tolerance);
  j["context"] = context;
  return j;
}

json complex_json(std::complex<double> z) {
  json j;
  j["re"] = z.real();
  j["im"] = z.imag();
  return j;
}

json polys_json(const std::vector<Polynomial>& ps, const std::vector<std::string>& names) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(format_poly(p, names));
  return a;
}

json verdict_json(const VarietyVerdict& v, const std::vector<std::string>& names) {
  json j;
  j["only_origin"] = v.only_origin;
  j["common_nonzero_zero"] = !v.only_origin;
  json missing = json::array();
  for (std::size_t i : v.missing_pure_power_variables) missing.push_back(names.at(i));
  j["variables_without_pure_power"] = missing;
  return j;
}

json sphere_json(const SphereMinResult& r) {
  json j;
  j["minimum"] = approx_json(r.minimum, 1e-12 * (1 + r.minimum),
                             "best local minimum over the starts; can only overestimate the global minimum");
  json x = json::array();
  for (Eigen::Index i = 0; i < r.argmin.size(); ++i) x.push_back(r.argmin(i));
  j["argmin_real_coordinates"] = x;
  j["starts_used"] = r.starts_used;
  j["converged"] = r.converged;
  j["gradient_norm"] = r.gradient_norm;
  return j;
}

json c1_json(const C1Result& r, unsigned rho) {
  json j;
  j["rho"] = rho;
  j["level_only_origin"] = r.level_only_origin;
  j["value"] = approx_json(r.value, -1, "heuristic: computed from a multi-start local minimum, not certified");
  j["sphere"] = sphere_json(r.sphere);
  if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
  return j;
}

json c2_json(const C2Exact& c, unsigned rho) {
  json j;
  j["rho"] = rho;
  j["squared"] = exact_json(c.squared);
  j["value"] = approx_json(c.value, 1e-15, "sqrt of the exact squared value, relative");
  return j;
}

json necessity_json(const NecessityTable& t) {
  json j;
  j["c2_squared"] = exact_json(t.c2.squared);
  json rows = json::array();
  for (const auto& r : t.rows) {
    json row;
    row["m"] = r.m;
    row["ratio"] = exact_json(r.ratio);
    row["bound"] = exact_json(r.bound);
    row["holds"] = r.holds;
    rows.push_back(row);
  }
  j["rows"] = rows;
  j["violations"] = t.violations;
  return j;
}

json real_witness_json(const RealWitness& w, const std::vector<std::string>& names) {
  json j;
  j["q"] = format_poly(w.q, names);
  j["part"] = w.real_part ? "re" : "im";
  j["q_norm_sq"] = exact_json(w.q_norm_sq);
  j["full_norm_sq"] = exact_json(w.full_norm_sq);
  j["product_norm_sq"] = exact_json(w.product_norm_sq);
  j["bound"] = exact_json(w.bound);
  j["holds"] = w.holds;
  return j;
}

json bombieri_json(const BombieriCheck& c) {
  json j;
  j["product_norm_sq"] = exact_json(c.product_norm_sq);
  j["p_norm_sq"] = exact_json(c.p_norm_sq);
  j["q_norm_sq"] = exact_json(c.q_norm_sq);
  j["ratio"] = exact_json(c.ratio);
  j["holds"] = c.holds;
  j["equality"] = c.equality;
  return j;
}

json ks_json(const KSReport& r, const std::vector<std::string>& names) {
  json j;
  j["degree"] = r.degree;
  j["dimension"] = r.dimension;
  j["exponent"] = r.exponent;
  j["rho_star"] = r.rho_star ? json(*r.rho_star) : json(nullptr);
  j["exponent_basis"] = to_string(r.basis);
  if (r.basis == ExponentBasis::ExternalUpperBound)
    j["note"] = "no derivative level has a common nonzero zero; l = k - 1 relies on the external bound l <= k - 1 for d > 1";
  json levels = json::array();
  for (const auto& [rho, lv] : r.levels) {
    json l;
    l["rho"] = rho;
    l["verdict"] = verdict_json(lv.verdict, names);
    l["groebner_basis"] = polys_json(lv.basis, names);
    levels.push_back(l);
  }
  j["levels"] = levels;

  if (r.witness) {
    json w;
    json pt = json::array();
    for (Eigen::Index i = 0; i < r.witness->point.size(); ++i) pt.push_back(complex_json(r.witness->point(i)));
    w["point"] = pt;
    w["residual"] = approx_json(r.witness->residual, kCommonZeroThreshold, "squared residual, acceptance threshold");
    if (r.witness->exact) {
      json e = json::array();
      for (const auto& c : *r.witness->exact) e.push_back(exact_json(c));
      w["exact"] = e;
    } else {
      w["exact"] = nullptr;
    }
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  if (!r.witness_diagnostic.empty()) j["witness_diagnostic"] = r.witness_diagnostic;

  json constants = json::object();
  if (r.c1 && r.c1_rho) constants["c1"] = c1_json(*r.c1, *r.c1_rho);
  if (r.c2) {
    json c2;
    c2["rho"] = *r.rho_star;
    c2["squared"] = r.c2_squared_exact ? exact_json(*r.c2_squared_exact) : json(nullptr);
    c2["value"] = r.c2_squared_exact
                      ? approx_json(*r.c2, 1e-15, "sqrt of the exact squared value, relative")
                      : approx_json(*r.c2, 1e-8, "evaluated at a floating witness, relative");
    constants["c2"] = c2;
  }
  j["constants"] = constants;
  return j;
}

json spectral_json(const std::vector<PinascoRow>& rows, double sup) {
  json j;
  j["sup_on_sphere"] = approx_json(sup, -1, "heuristic: multi-start local maximum");
  json a = json::array();
  for (const auto& r : rows) {
    json row;
    row["m"] = r.spectral.m;
    row["dim"] = r.spectral.dimension;
    row["I_m"] = approx_json(r.spectral.inf, 1e-12, "Jacobi eigenvalue, relative to the largest eigenvalue");
    row["S_m"] = approx_json(r.spectral.sup, 1e-12, "Jacobi eigenvalue, relative");
    row["pinasco_ratio"] = approx_json(r.ratio, 1e-12, "S_m / sqrt((m+1)...(m+k)), relative");
    row["sweeps"] = r.spectral.sweeps;
    a.push_back(row);
  }
  j["rows"] = a;
  return j;
}

json suites_json(const std::vector<SuiteResult>& suites) {
  json j;
  json a = json::array();
  bool all = true;
  for (const auto& s : suites) {
    json e;
    e["name"] = s.name;
    e["exact"] = s.exact;
    e["tolerance"] = s.exact ? json(nullptr) : json(s.tolerance);
    e["cases"] = s.cases;
    e["failures"] = s.failures;
    e["max_deviation"] = s.max_deviation;
    e["passed"] = s.passed();
    all = all && s.passed();
    a.push_back(e);
  }
  j["suites"] = a;
  j["all_passed"] = all;
  return j;
}

namespace {

void compare(const json& e, const json& a, const std::string& path, double rel, std::vector<std::string>& out) {
  if (e.is_number_float() || a.is_number_float()) {
    if (!e.is_number() || !a.is_number()) {
      out.push_back(path + ": type differs");
      return;
    }
    const double x = e.get<double>(), y = a.get<double>();
    if (std::abs(x - y) > rel * std::max(std::abs(x), std::abs(y)) + 1e-12)
      out.push_back(path + ": expected " + e.dump() + ", got " + a.dump());
    return;
  }
  if (e.is_number_integer() && a.is_number_integer()) {
    // Signedness depends on how the value was produced, not on its meaning.
    const bool same = e.is_number_unsigned() == a.is_number_unsigned()
                          ? e == a
                          : e.get<std::int64_t>() == a.get<std::int64_t>();
    if (!same) out.push_back(path + ": expected " + e.dump() + ", got " + a.dump());
    return;
  }
  if (e.type() != a.type()) {
    out.push_back(path + ": expected " + e.dump() + ", got " + a.dump());
    return;
  }
  if (e.is_object()) {
    for (const auto& [k, v] : e.items()) {
      if (path.empty() && k == "versions") continue;
      if (!a.contains(k))
        out.push_back(path + "/" + k + ": missing");
      else
        compare(v, a.at(k), path + "/" + k, rel, out);
    }
    for (const auto& [k, v] : a.items())
      if (!e.contains(k) && !(path.empty() && k == "versions")) out.push_back(path + "/" + k + ": unexpected");
    return;
  }
  if (e.is_array()) {
    if (e.size() != a.size()) {
      out.push_back(path + ": expected " + std::to_string(e.size()) + " entries, got " + std::to_string(a.size()));
      return;
    }
    for (std::size_t i = 0; i < e.size(); ++i) compare(e[i], a[i], path + "/" + std::to_string(i), rel, out);
    return;
  }
  if (e != a) out.push_back(path + ": expected " + e.dump() + ", got " + a.dump());
}

}  // namespace

std::vector<std::string> compare_reports(const json& expected, const json& actual, double rel_tol) {
  std::vector<std::string> out;
  compare(expected, actual, "", rel_tol, out);
  return out;
}

}  // namespace ksb
