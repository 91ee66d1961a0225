#include "ksbound/ksexp.hpp"

#include <cmath>

namespace ksb {

std::string to_string(ExponentBasis b) {
  switch (b) {
    case ExponentBasis::CommonZeroLevel: return "common-zero-level";
    case ExponentBasis::ExternalUpperBound: return "no-common-zero-with-external-upper-bound";
    case ExponentBasis::OneVariable: return "one-variable";
    case ExponentBasis::LinearForm: return "degree-one";
  }
  return "?";
}

LevelVerdict decide_level(const Polynomial& p, unsigned rho, const MonomialOrder& order) {
  LevelVerdict lv;
  lv.rho = rho;
  const GroebnerBasis gb = buchberger(derivative_system(p, rho), order);
  require(!gb.zero_ideal, "decide_level: derivative system is identically zero");
  lv.verdict = variety_verdict(gb);
  lv.basis = gb.generators;
  return lv;
}

KSReport ks_exponent(const Polynomial& p, const KSOptions& opt) {
  const unsigned k = require_homogeneous(p, "ks_exponent");
  require(k >= 1, "ks_exponent: degree must be at least 1");
  const std::size_t d = p.dimension();
  const MonomialOrder order = opt.order ? *opt.order : MonomialOrder::grevlex(d);

  KSReport r;
  r.degree = k;
  r.dimension = d;

  if (d == 1) {
    r.exponent = k;
    r.basis = ExponentBasis::OneVariable;
    return r;
  }
  if (k == 1) {
    r.exponent = 0;
    r.basis = ExponentBasis::LinearForm;
    return r;
  }

  auto has_zero = [&](unsigned rho) {
    auto it = r.levels.find(rho);
    if (it == r.levels.end()) it = r.levels.emplace(rho, decide_level(p, rho, order)).first;
    return !it->second.verdict.only_origin;
  };

  if (opt.linear_scan) {
    for (unsigned rho = 1; rho < k; ++rho)
      if (has_zero(rho)) r.rho_star = rho;
  } else {
    // Largest rho in [1, k-1] with a common zero; levels above it have none.
    unsigned lo = 1, hi = k - 1;
    if (has_zero(lo)) {
      while (lo < hi) {
        const unsigned mid = lo + (hi - lo + 1) / 2;
        if (has_zero(mid))
          lo = mid;
        else
          hi = mid - 1;
      }
      r.rho_star = lo;
    }
  }

  if (r.rho_star) {
    r.exponent = k - *r.rho_star - 1;
    r.basis = ExponentBasis::CommonZeroLevel;
  } else {
    r.exponent = k - 1;
    r.basis = ExponentBasis::ExternalUpperBound;
  }

  if (r.rho_star && opt.witness) {
    const CommonZeroSearch s = find_common_zero(derivative_system(p, *r.rho_star), opt.sphere);
    r.witness = s.zero;
    r.witness_diagnostic = s.diagnostic;
  }

  if (opt.constants) {
    const unsigned rho1 = r.rho_star ? *r.rho_star + 1 : 1;
    if (rho1 < k) {
      r.c1_rho = rho1;
      r.c1 = c1_constant(p, rho1, opt.sphere, &order);
    }
    if (r.rho_star && r.witness) {
      if (r.witness->exact) {
        const C2Exact c2 = c2_constant_exact(p, *r.rho_star, *r.witness->exact);
        r.c2_squared_exact = c2.squared;
        r.c2 = c2.value;
      } else {
        const std::vector<std::complex<double>> c(r.witness->point.data(),
                                                  r.witness->point.data() + r.witness->point.size());
        r.c2 = c2_constant(p, *r.rho_star, c);
      }
    }
  }
  return r;
}

}  // namespace ksb
