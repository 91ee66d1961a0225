// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <random>
#include <sstream>
#include <string>

#include "ksbound/apolar.hpp"
#include "ksbound/cli.hpp"
#include "ksbound/constants.hpp"
#include "ksbound/extremal.hpp"
#include "ksbound/groebner.hpp"
#include "ksbound/identities.hpp"
#include "ksbound/ksexp.hpp"
#include "ksbound/polyparse.hpp"
#include "ksbound/report.hpp"
#include "oracles.hpp"

using namespace ksb;

namespace {

Polynomial P(const char* s, std::size_t d = 2) { return parse_poly(s, d); }

std::vector<Polynomial> Ps(std::initializer_list<const char*> ss) {
  std::vector<Polynomial> v;
  for (const char* s : ss) v.push_back(P(s));
  return v;
}

GaussianRational oracle_inner(const Polynomial& f, const Polynomial& g) {
  GaussianRational s;
  for (const auto& [a, c] : f.terms()) {
    const GaussianRational e = g.coefficient(a);
    if (e.is_zero()) continue;
    mpz_class fac = 1;
    for (unsigned v : a.exponents())
      for (unsigned t = 2; t <= v; ++t) fac *= t;
    s += c * e.conj() * GaussianRational(mpq_class(fac));
  }
  return s;
}

// q(D) f, one monomial of q at a time.
Polynomial oracle_apply(const Polynomial& q, const Polynomial& f) {
  Polynomial r(f.dimension());
  for (const auto& [a, c] : q.terms()) r += oracle::diff_repeated(f, a) * c;
  return r;
}

Polynomial oracle_power(const Polynomial& p, unsigned n) {
  Polynomial r = Polynomial::constant(p.dimension(), GaussianRational(1));
  for (unsigned i = 0; i < n; ++i) r = oracle::product(r, p);
  return r;
}

Polynomial oracle_linear(const std::vector<GaussianRational>& c) {
  Polynomial l(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) {
    std::vector<unsigned> e(c.size(), 0);
    e[j] = 1;
    l.add_term(MultiIndex(e), c[j].conj());
  }
  return l;
}

double fac(unsigned n) { return std::tgamma(n + 1.0); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0 && secs >= budget_s) {
    o.pass = false;
    o.detail += " (over the " + std::to_string(static_cast<int>(budget_s)) + " s budget)";
  }
  if (!o.pass) ++failures;
  std::printf("criterion %2d %s  %-44s %.3fs  %s\n", id, o.pass ? "PASS" : "FAIL", title, secs, o.detail.c_str());
  std::fflush(stdout);
}

json cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  if (run(args, out, err) != 0) throw std::runtime_error("cli exit nonzero: " + err.str());
  return json::parse(out.str());
}

}  // namespace

int main() {
  const MonomialOrder grevlex = MonomialOrder::grevlex(2);

  criterion(1, "example x^4+4x^2y^2+2y^4", 1.0, [&] {
    const json j = cli({"ks-exponent", "x^4 + 4 x^2 y^2 + 2 y^4"});
    const LevelVerdict lv = decide_level(P("x^4+4x^2y^2+2y^4"), 1, grevlex);
    const bool eq = ideals_equal(lv.basis, Ps({"y^5", "x y^3", "x^2 y + y^3", "x^3 + 2 x y^2"}), grevlex);
    const int l = j["result"]["exponent"];
    return Outcome{l == 3 && eq && lv.verdict.only_origin, "l=" + std::to_string(l) + " basis_equal=" + (eq ? "yes" : "no")};
  });

  criterion(2, "example x^4+2x^2y^2+y^4", 1.0, [&] {
    const json j = cli({"ks-exponent", "x^4 + 2 x^2 y^2 + y^4"});
    const Polynomial p = P("x^4+2x^2y^2+y^4");
    const LevelVerdict l1 = decide_level(p, 1, grevlex), l2 = decide_level(p, 2, grevlex);
    const bool e1 = ideals_equal(l1.basis, Ps({"x^2 y + y^3", "x^3 + x y^2"}), grevlex);
    const bool e2 = ideals_equal(l2.basis, Ps({"y^2", "x y", "x^2"}), grevlex);
    const int l = j["result"]["exponent"];
    const bool ok = l == 2 && !l1.verdict.only_origin && l2.verdict.only_origin && e1 && e2;
    return Outcome{ok, "l=" + std::to_string(l) + " level1_common_zero=" + (!l1.verdict.only_origin ? "yes" : "no") +
                           " level2_only_origin=" + (l2.verdict.only_origin ? "yes" : "no")};
  });

  criterion(3, "Newman-Shapiro, 200 random pairs", 30.0, [&] {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::size_t> dim(1, 3);
    std::uniform_int_distribution<unsigned> deg(0, 4);
    int bad = 0;
    for (int i = 0; i < 200; ++i) {
      const std::size_t d = dim(rng);
      const Polynomial p = oracle::random_poly(rng, d, deg(rng), true), q = oracle::random_poly(rng, d, deg(rng), true);
      if (newman_shapiro_rhs(p, q) != oracle::norm_sq(oracle::product(p, q))) ++bad;
    }
    IdentityOptions opt;
    const SuiteResult s = newman_shapiro_suite(opt);
    return Outcome{bad == 0 && s.passed() && s.cases == 200,
                   "oracle mismatches=" + std::to_string(bad) + " suite failures=" + std::to_string(s.failures)};
  });

  criterion(4, "adjoint and Bombieri, 200 instances each", 30.0, [&] {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<std::size_t> dim(1, 3);
    std::uniform_int_distribution<unsigned> deg(0, 4);
    int bad_adj = 0;
    for (int i = 0; i < 200; ++i) {
      const std::size_t d = dim(rng);
      const Polynomial q = oracle::random_poly(rng, d, deg(rng), false);
      const Polynomial f = oracle::random_poly(rng, d, deg(rng) + 2, false);
      const Polynomial g = oracle::random_poly(rng, d, deg(rng), false);
      Polynomial qs(d);
      for (const auto& [a, c] : q.terms()) qs.add_term(a, c.conj());
      if (oracle_inner(oracle_apply(qs, f), g) != oracle_inner(f, oracle::product(q, g))) ++bad_adj;
    }
    IdentityOptions opt;
    const SuiteResult adj = adjoint_suite(opt), bomb = bombieri_suite(opt);
    const bool ok = bad_adj == 0 && adj.passed() && bomb.passed() && adj.cases == 200 && bomb.cases == 200;
    return Outcome{ok, "oracle adjoint mismatches=" + std::to_string(bad_adj) +
                           " adjoint failures=" + std::to_string(adj.failures) +
                           " bombieri failures=" + std::to_string(bomb.failures)};
  });

  criterion(5, "power closed forms, 50 random (p,c,m)", 60.0, [&] {
    std::mt19937_64 rng(5);
    int bad1 = 0, bad2 = 0, bad3 = 0;
    for (int t = 0; t < 50; ++t) {
      const std::size_t d = 1 + t % 3;
      const unsigned k = 1 + static_cast<unsigned>(t % 3);
      const unsigned m = k + static_cast<unsigned>(rng() % (16 - k));
      const Polynomial p = oracle::random_poly(rng, d, k, true, 3);
      const auto c = oracle::random_vector(rng, d);
      std::vector<GaussianRational> cbar;
      for (const auto& x : c) cbar.push_back(x.conj());
      mpq_class c2 = 0;
      for (const auto& x : c) c2 += x.norm_sq();
      const Polynomial lm = oracle_power(oracle_linear(c), m);
      const mpq_class lm_norm = oracle::norm_sq(lm);
      // ||<z,c>^m||^2 = m! |c|^(2m)
      if (pairing_power_norm_sq(c, m) != lm_norm) ++bad1;
      mpq_class closed1 = mpq_class(factorial(m));
      for (unsigned i = 0; i < m; ++i) closed1 *= c2;
      if (closed1 != lm_norm) ++bad1;
      // ||P(D)<z,c>^m||^2 = |c|^-2k m!/(m-k)! ||<z,c>^m||^2 |P(conj c)|^2
      mpq_class rhs = lm_norm * mpq_class(factorial(m)) / mpq_class(factorial(m - k)) * evaluate(p, cbar).norm_sq();
      for (unsigned i = 0; i < k; ++i) rhs /= c2;
      if (oracle::norm_sq(oracle_apply(p, lm)) != rhs) ++bad2;
      if (product_with_power_norm_sq(p, c, m) != oracle::norm_sq(oracle::product(p, lm))) ++bad3;
    }
    return Outcome{bad1 + bad2 + bad3 == 0, "mismatches linear-power=" + std::to_string(bad1) +
                                                " operator-form=" + std::to_string(bad2) +
                                                " product-form=" + std::to_string(bad3)};
  });

  criterion(6, "Reznick monomial formula", 0, [&] {
    double worst = 0;
    int cases = 0;
    for (std::size_t d = 1; d <= 3; ++d)
      for (unsigned deg = 1; deg <= 4; ++deg)
        for (const MultiIndex& beta : multi_indices_of_degree(d, deg)) {
          bool decreasing = true;
          for (std::size_t j = 1; j < d; ++j) decreasing = decreasing && beta[j - 1] >= beta[j];
          if (!decreasing) continue;
          const Polynomial p = Polynomial::monomial(beta, GaussianRational(1));
          const double norm = std::sqrt(beta.factorial().get_d());
          const unsigned bd = beta[d - 1];
          for (unsigned m = 0; m <= 12; ++m) {
            const double expected = std::sqrt(fac(bd + m) / (fac(bd) * fac(m)));
            const double got = extremal_ratios(p, m).inf / norm;
            worst = std::max(worst, std::abs(got - expected) / expected);
            ++cases;
          }
        }
    char buf[96];
    std::snprintf(buf, sizeof buf, "cases=%d max_rel_err=%.2e", cases, worst);
    return Outcome{worst <= 1e-9, buf};
  });

  criterion(7, "sufficiency bound, m = 0..25", 0, [&] {
    struct Case {
      const char* p;
      unsigned rho;
    };
    int bad = 0;
    double min_margin = 1e300;
    std::string c1s;
    for (const Case& c : {Case{"x^4+4x^2y^2+2y^4", 1}, Case{"x^4+2x^2y^2+y^4", 2}}) {
      const Polynomial p = P(c.p);
      const double c1 = c1_constant(p, c.rho).value;
      char buf[48];
      std::snprintf(buf, sizeof buf, "C1(rho=%u)=%.6g ", c.rho, c1);
      c1s += buf;
      for (unsigned m = 0; m <= 25; ++m) {
        const double lhs = extremal_ratios(p, m).inf;
        const double rhs = c1 * std::pow(m + 2.0, (4.0 - c.rho) / 2);
        min_margin = std::min(min_margin, lhs - rhs);
        if (!(c1 > 0) || lhs < rhs - 1e-6) ++bad;
      }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "violations=%d min(I_m - bound)=%.3g", bad, min_margin);
    return Outcome{bad == 0, c1s + buf};
  });

  const Polynomial ex2 = P("x^4+2x^2y^2+y^4");
  const std::vector<GaussianRational> c{GaussianRational(1), GaussianRational::i()};

  criterion(8, "necessity bound, m = 4..40", 0, [&] {
    // Brute-force C2^2 at |c| = 1: scaling c by 1/|c| multiplies each
    // |d^alpha P*(conj c)|^2 by |c|^(2|alpha| - 2k), so use c as given.
    const Polynomial ps = conjugate_star(ex2);
    const std::vector<GaussianRational> cbar{GaussianRational(1), -GaussianRational::i()};
    mpq_class brute = 0;
    for (unsigned t = 2; t <= 4; ++t)
      for (const MultiIndex& a : multi_indices_of_degree(2, t)) {
        mpq_class v = evaluate(oracle::diff_repeated(ps, a), cbar).norm_sq() / mpq_class(a.factorial());
        for (unsigned s = t; s < 4; ++s) v /= 2;
        brute += v;
      }
    const NecessityTable tab = necessity_bound_check(ex2, 1, c, 4, 40);
    int bad = 0;
    const Polynomial l = oracle_linear(c);
    Polynomial lm = oracle_power(l, 3);
    for (const NecessityRow& r : tab.rows) {
      lm = oracle::product(lm, l);
      const mpq_class ratio = oracle::norm_sq(oracle::product(ex2, lm)) / oracle::norm_sq(lm);
      // k - rho - 1 = 2
      const mpq_class bound = brute * r.m * r.m;
      if (ratio != r.ratio || bound != r.bound || ratio > bound || !r.holds) ++bad;
    }
    const bool ok = brute == 224 && tab.c2.squared == 224 && tab.rows.size() == 37 && tab.violations == 0 && bad == 0;
    return Outcome{ok, "C2^2 brute=" + brute.get_str() + " computed=" + tab.c2.squared.get_str() +
                           " violations=" + std::to_string(tab.violations) + " oracle mismatches=" + std::to_string(bad)};
  });

  criterion(9, "real witness, m = 4..20", 0, [&] {
    int bad = 0;
    for (unsigned m = 4; m <= 20; ++m) {
      const RealWitness w = real_witness(ex2, 1, c, m);
      const mpq_class prod = oracle::norm_sq(oracle::product(ex2, w.q));
      const mpq_class bound = 4 * mpq_class(224) * oracle::norm_sq(w.q) * m * m;
      bool real = true;
      for (const auto& [a, co] : w.q.terms()) real = real && co.imag() == 0;
      if (!w.holds || !real || prod != w.product_norm_sq || bound != w.bound || prod > bound) ++bad;
    }
    return Outcome{bad == 0, "failing m values=" + std::to_string(bad)};
  });

  criterion(10, "Pinasco soft check, x^2+y^2 at m = 40", 60.0, [&] {
    const PinascoTable t = pinasco_table(P("x^2+y^2"), {40});
    const double r = t.rows.at(0).ratio, rel = std::abs(r - t.sup) / t.sup;
    char buf[96];
    std::snprintf(buf, sizeof buf, "ratio=%.6f sup=%.6f rel_diff=%.4f", r, t.sup, rel);
    return Outcome{rel <= 0.10, buf};
  });

  criterion(11, "Bargmann quadrature, |alpha|,|beta| <= 4", 0, [&] {
    const SuiteResult s = bargmann_suite(1e-8);
    char buf[96];
    std::snprintf(buf, sizeof buf, "pairs=%zu failures=%zu max_dev=%.2e", s.cases, s.failures, s.max_deviation);
    return Outcome{s.passed() && s.cases > 0, buf};
  });

  criterion(12, "gradient rank and Bombieri equality", 0, [&] {
    const unsigned rank = gradient_rank(P("x^2"));
    int bad = 0;
    for (unsigned m = 1; m <= 10; ++m) {
      const Polynomial x2 = P("x^2"), ym = oracle_power(P("y"), m);
      const BombieriCheck b = check_bombieri(x2, ym);
      const mpq_class lhs = oracle::norm_sq(oracle::product(x2, ym));
      if (!b.equality || lhs != oracle::norm_sq(x2) * oracle::norm_sq(ym)) ++bad;
    }
    return Outcome{rank == 1 && bad == 0, "gradient_rank=" + std::to_string(rank) + " failing m=" + std::to_string(bad)};
  });

  std::printf("%s: %d of 12 criteria failed\n", failures == 0 ? "ALL PASS" : "SOME FAIL", failures);
  return failures == 0 ? 0 : 1;
}
