#include "ksbound/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ksbound/polyparse.hpp"
#include "ksbound/report.hpp"

#ifndef KSBOUND_DATA_DIR
#define KSBOUND_DATA_DIR "data"
#endif

namespace ksb {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string vars;
  std::string order = "grevlex";
  int starts = 64;
  std::uint64_t seed = 0;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--vars", c.vars, "comma-separated variable names, e.g. x,y,z");
  app->add_option("--order", c.order, "monomial order: grevlex, lex or grlex");
  app->add_option("--starts", c.starts, "random starts for sphere searches")->check(CLI::PositiveNumber);
  app->add_option("--seed", c.seed, "seed for the sphere searches");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::vector<std::string> variables_for(const Common& c, const std::vector<std::string>& texts) {
  if (!c.vars.empty()) {
    std::vector<std::string> v;
    for (const auto& s : split(c.vars, ',')) v.push_back(trim(s));
    return v;
  }
  std::string all;
  for (const auto& t : texts) all += t + " ";
  return infer_variables(all);
}

MonomialOrder order_for(const Common& c, std::size_t d) {
  try {
    return MonomialOrder::make(parse_order_kind(c.order), d);
  } catch (const std::invalid_argument&) {
    throw UsageError("unknown monomial order '" + c.order + "' (use grevlex, lex or grlex)");
  }
}

SphereMinOptions sphere_for(const Common& c) {
  SphereMinOptions o;
  o.starts = c.starts;
  o.seed = c.seed;
  return o;
}

json inputs_json(const Common& c, const std::vector<std::string>& polys, const std::vector<std::string>& names) {
  json j;
  j["polynomials"] = polys;
  j["variables"] = names;
  j["dimension"] = names.size();
  j["order"] = c.order;
  j["starts"] = c.starts;
  return j;
}

std::vector<GaussianRational> parse_witness(const std::string& s) {
  std::vector<GaussianRational> c;
  for (const auto& part : split(s, ',')) c.push_back(parse_coefficient(trim(part)));
  return c;
}

std::pair<unsigned, unsigned> m_range_for(const std::string& s) {
  try {
    return parse_m_range(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<unsigned> range_list(std::pair<unsigned, unsigned> r) {
  std::vector<unsigned> ms;
  for (unsigned m = r.first; m <= r.second; ++m) ms.push_back(m);
  return ms;
}

json ks_report_json(const std::string& text, const Common& c, bool linear_scan) {
  const std::vector<std::string> names = variables_for(c, {text});
  const Polynomial p = parse_poly(PolyText{text, names});
  KSOptions opt;
  opt.order = order_for(c, names.size());
  opt.linear_scan = linear_scan;
  opt.sphere = sphere_for(c);
  Report r;
  r.command = "ks-exponent";
  r.inputs = inputs_json(c, {text}, names);
  r.inputs["linear_scan"] = linear_scan;
  r.result = ks_json(ks_exponent(p, opt), names);
  r.versions = versions();
  r.seed = c.seed;
  return r.to_json();
}

struct WorkedExample {
  const char* name;
  const char* poly;
  unsigned exponent;
  // level -> printed basis
  std::vector<std::pair<unsigned, std::vector<const char*>>> bases;
};

const std::vector<WorkedExample>& worked_examples() {
  static const std::vector<WorkedExample> ex{
      {"example1", "x^4 + 4 x^2 y^2 + 2 y^4", 3, {{1, {"y^5", "x y^3", "x^2 y + y^3", "x^3 + 2 x y^2"}}}},
      {"example2", "x^4 + 2 x^2 y^2 + y^4", 2, {{1, {"x^2 y + y^3", "x^3 + x y^2"}}, {2, {"y^2", "x y", "x^2"}}}},
  };
  return ex;
}

json reproduce(const Common& c, const std::string& dir, bool write, bool& ok) {
  json result;
  json list = json::array();
  ok = true;
  for (const auto& ex : worked_examples()) {
    const json actual = ks_report_json(ex.poly, c, false);
    json e;
    e["name"] = ex.name;
    e["polynomial"] = ex.poly;
    e["exponent"] = actual["result"]["exponent"];
    e["exponent_expected"] = ex.exponent;
    bool good = actual["result"]["exponent"] == ex.exponent;

    const std::vector<std::string> names{"x", "y"};
    const Polynomial p = parse_poly(PolyText{ex.poly, names});
    const MonomialOrder order = order_for(c, 2);
    json bases = json::array();
    for (const auto& [rho, printed] : ex.bases) {
      std::vector<Polynomial> ref;
      for (const char* s : printed) ref.push_back(parse_poly(PolyText{s, names}));
      const bool eq = ideals_equal(ref, derivative_system(p, rho), order);
      json b;
      b["rho"] = rho;
      b["printed_basis"] = polys_json(ref, names);
      b["ideal_equal"] = eq;
      bases.push_back(b);
      good = good && eq;
    }
    e["printed_bases"] = bases;

    const std::filesystem::path file = std::filesystem::path(dir) / (std::string(ex.name) + ".json");
    e["expected_file"] = file.filename().string();
    if (write) {
      std::ofstream(file) << actual.dump(2) << "\n";
      e["differences"] = json::array();
    } else {
      std::ifstream in(file);
      if (!in) {
        e["differences"] = json::array({"missing expected report " + file.string()});
        good = false;
      } else {
        const auto diffs = compare_reports(json::parse(in), actual);
        e["differences"] = diffs;
        good = good && diffs.empty();
      }
    }
    e["passed"] = good;
    ok = ok && good;
    list.push_back(e);
  }
  result["examples"] = list;
  result["all_passed"] = ok;
  return result;
}

json error_record(const std::string& command, const std::string& kind, const std::string& message,
                  std::optional<std::size_t> position = std::nullopt) {
  Report r;
  r.command = command;
  json e;
  e["kind"] = kind;
  e["message"] = message;
  if (position) e["position"] = *position;
  r.error = e;
  r.versions = versions();
  return r.to_json();
}

std::string csv_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::pair<unsigned, unsigned> parse_m_range(const std::string& s) {
  auto parse_uint = [&](const std::string& t) {
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad --m-range '" + s + "' (expected a..b)");
    return static_cast<unsigned>(std::stoul(t));
  };
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const unsigned a = parse_uint(trim(s));
    return {a, a};
  }
  const unsigned a = parse_uint(trim(s.substr(0, dots))), b = parse_uint(trim(s.substr(dots + 2)));
  if (a > b) throw std::invalid_argument("bad --m-range '" + s + "' (empty range)");
  return {a, b};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Khavinson-Shapiro exponents, apolar norms and the constants of the norm bounds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  Common common;
  std::vector<std::string> polys;
  std::string poly, second, witness, m_range, expected_dir = KSBOUND_DATA_DIR "/expected", format = "csv";
  int rho = -1;
  bool linear_scan = false, write_expected = false;
  IdentityOptions idopt;

  auto* ks = app.add_subcommand("ks-exponent", "decide the exponent l(P) exactly");
  ks->add_option("poly", poly, "homogeneous polynomial")->required();
  ks->add_flag("--linear-scan", linear_scan, "check every derivative level instead of binary search");
  add_common(ks, common);

  auto* gb = app.add_subcommand("groebner", "reduced Groebner basis and variety verdict");
  gb->add_option("polys", polys, "generators (or one polynomial with --rho)")->required();
  gb->add_option("--rho", rho, "use the order-rho partial derivatives of the single polynomial");
  add_common(gb, common);

  auto* an = app.add_subcommand("apolar-norm", "exact apolar and Bombieri norms");
  an->add_option("poly", poly)->required();
  add_common(an, common);

  auto* bc = app.add_subcommand("bombieri-check", "exact check of ||p q|| >= ||p|| ||q||");
  bc->add_option("p", poly)->required();
  bc->add_option("q", second)->required();
  add_common(bc, common);

  auto* cs = app.add_subcommand("constants", "C1 at a level and C2 at a witness");
  cs->add_option("poly", poly)->required();
  cs->add_option("--rho", rho, "derivative level")->required();
  cs->add_option("--witness", witness, "complex-rational common zero, e.g. \"1,i\"");
  cs->add_option("--m-range", m_range, "degrees for the necessity table, e.g. 4..20");
  add_common(cs, common);

  auto* ex = app.add_subcommand("extremal", "extremal ratios I_m, S_m of multiplication by p");
  ex->add_option("poly", poly)->required();
  ex->add_option("--m-range", m_range, "degrees, e.g. 0..20")->required();
  ex->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  add_common(ex, common);

  auto* vi = app.add_subcommand("verify-identities", "exact and quadrature identity suites");
  vi->add_option("--cases", idopt.cases, "random instances per exact suite")->check(CLI::PositiveNumber);
  add_common(vi, common);

  auto* rp = app.add_subcommand("reproduce-paper", "run the two worked examples and diff against expected reports");
  rp->add_option("--expected-dir", expected_dir, "directory with example1.json and example2.json");
  rp->add_flag("--write-expected", write_expected, "overwrite the expected reports instead of comparing");
  add_common(rp, common);

  std::vector<std::string> argv_store{"ksbound"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\nrun with --help for usage\n";
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    Report r;
    r.command = command;
    r.seed = common.seed;
    r.versions = versions();
    int status = 0;

    if (sub == ks) {
      out << ks_report_json(poly, common, linear_scan).dump(2) << "\n";
      return 0;
    }
    if (sub == gb) {
      const std::vector<std::string> names = variables_for(common, polys);
      const MonomialOrder order = order_for(common, names.size());
      std::vector<Polynomial> gens;
      if (rho >= 0) {
        if (polys.size() != 1) throw UsageError("--rho takes exactly one polynomial");
        gens = derivative_system(parse_poly(PolyText{polys[0], names}), static_cast<unsigned>(rho));
      } else {
        for (const auto& t : polys) gens.push_back(parse_poly(PolyText{t, names}));
      }
      r.inputs = inputs_json(common, polys, names);
      r.inputs["rho"] = rho >= 0 ? json(rho) : json(nullptr);
      const GroebnerBasis basis = buchberger(gens, order);
      bool homogeneous = true;
      for (const auto& g : gens) homogeneous = homogeneous && homogeneous_degree(g).homogeneous;
      r.result["generators"] = polys_json(gens, names);
      r.result["order"] = order.name();
      r.result["basis"] = polys_json(basis.generators, names);
      r.result["zero_ideal"] = basis.zero_ideal;
      r.result["verdict"] = homogeneous && !basis.zero_ideal ? verdict_json(variety_verdict(basis), names) : json(nullptr);
      if (!homogeneous) r.result["note"] = "generators are not homogeneous; no projective verdict";
    } else if (sub == an) {
      const std::vector<std::string> names = variables_for(common, {poly});
      const Polynomial p = parse_poly(PolyText{poly, names});
      r.inputs = inputs_json(common, {poly}, names);
      const Homogeneity h = homogeneous_degree(p);
      r.result["norm_sq"] = exact_json(apolar_norm_sq(p));
      r.result["homogeneous"] = h.homogeneous;
      r.result["degree"] = p.total_degree();
      r.result["bombieri_norm_sq"] = h.homogeneous ? exact_json(bombieri_norm_sq(p)) : json(nullptr);
      r.result["norm"] = approx_json(std::sqrt(apolar_norm_sq(p).get_d()), 1e-15, "sqrt of the exact value, relative");
    } else if (sub == bc) {
      const std::vector<std::string> names = variables_for(common, {poly, second});
      const Polynomial p = parse_poly(PolyText{poly, names}), q = parse_poly(PolyText{second, names});
      r.inputs = inputs_json(common, {poly, second}, names);
      r.result = bombieri_json(check_bombieri(p, q));
    } else if (sub == cs) {
      const std::vector<std::string> names = variables_for(common, {poly});
      const Polynomial p = parse_poly(PolyText{poly, names});
      r.inputs = inputs_json(common, {poly}, names);
      r.inputs["rho"] = rho;
      r.inputs["witness"] = witness.empty() ? json(nullptr) : json(witness);
      r.inputs["m_range"] = m_range.empty() ? json(nullptr) : json(m_range);
      require(rho >= 1, "constants: need rho >= 1");
      const auto level = static_cast<unsigned>(rho);
      const C1Result c1 = c1_constant(p, level, sphere_for(common), nullptr);
      r.result["degree"] = require_homogeneous(p, "constants");
      r.result["c1"] = c1_json(c1, level);
      if (!witness.empty()) {
        const std::vector<GaussianRational> c = parse_witness(witness);
        r.result["c2"] = c2_json(c2_constant_exact(p, level, c), level);
        if (!m_range.empty()) {
          const auto [a, b] = m_range_for(m_range);
          const NecessityTable t = necessity_bound_check(p, level, c, a, b);
          r.result["necessity"] = necessity_json(t);
          if (p.has_real_coefficients()) {
            json rows = json::array();
            for (unsigned m = a; m <= b; ++m) {
              json w = real_witness_json(real_witness(p, level, c, m), names);
              w["m"] = m;
              rows.push_back(w);
            }
            r.result["real_witness"] = rows;
          }
        }
      } else if (!m_range.empty()) {
        throw UsageError("--m-range needs --witness");
      }
    } else if (sub == ex) {
      const std::vector<std::string> names = variables_for(common, {poly});
      const Polynomial p = parse_poly(PolyText{poly, names});
      const std::vector<unsigned> ms = range_list(m_range_for(m_range));
      const unsigned k = require_homogeneous(p, "extremal");
      if (format == "csv") {
        out << "m,dim,I_m,S_m,pinasco_ratio\n";
        for (const SpectralRow& row : extremal_table(p, ms))
          out << row.m << "," << row.dimension << "," << csv_number(row.inf) << "," << csv_number(row.sup) << ","
              << csv_number(pinasco_ratio(row.sup, row.m, k)) << "\n";
        return 0;
      }
      r.inputs = inputs_json(common, {poly}, names);
      r.inputs["m_range"] = m_range;
      const PinascoTable t = pinasco_table(p, ms, sphere_for(common));
      r.result = spectral_json(t.rows, t.sup);
    } else if (sub == vi) {
      idopt.seed = common.seed;
      r.inputs["cases"] = idopt.cases;
      r.result = suites_json(verify_identities(idopt));
      if (!r.result["all_passed"].get<bool>()) status = 1;
    } else if (sub == rp) {
      r.inputs["expected_dir"] = expected_dir;
      r.inputs["write_expected"] = write_expected;
      r.inputs["starts"] = common.starts;
      bool ok = true;
      r.result = reproduce(common, expected_dir, write_expected, ok);
      if (!ok) status = 1;
    }
    out << r.to_json().dump(2) << "\n";
    return status;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    out << error_record(command, "parse", e.what(), e.position()).dump(2) << "\n";
  } catch (const DimensionMismatch& e) {
    out << error_record(command, "dimension", e.what()).dump(2) << "\n";
  } catch (const PreconditionError& e) {
    out << error_record(command, "precondition", e.what()).dump(2) << "\n";
  } catch (const std::domain_error& e) {
    out << error_record(command, "precondition", e.what()).dump(2) << "\n";
  } catch (const std::invalid_argument& e) {
    out << error_record(command, "invalid-input", e.what()).dump(2) << "\n";
  }
  return 1;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace ksb
