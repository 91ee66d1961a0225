#include "ksbound/identities.hpp"

#include <cmath>

#include "ksbound/apolar.hpp"
#include "ksbound/fockcheck.hpp"

namespace ksb {

namespace {

double deviation(const mpq_class& a, const mpq_class& b) { return std::abs(mpq_class(a - b).get_d()); }

double deviation(const GaussianRational& a, const GaussianRational& b) { return std::abs((a - b).to_complex()); }

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

Polynomial random_polynomial(std::mt19937_64& rng, std::size_t dim, unsigned deg, bool homogeneous,
                             std::size_t max_terms) {
  std::uniform_int_distribution<long> coef(-4, 4);
  std::vector<MultiIndex> pool;
  for (unsigned t = homogeneous ? deg : 0; t <= deg; ++t)
    for (const auto& a : multi_indices_of_degree(dim, t)) pool.push_back(a);
  Polynomial p(dim);
  const std::size_t terms = pick(rng, 1, max_terms);
  for (std::size_t i = 0; i < terms; ++i) {
    const MultiIndex& a = pool[pick(rng, 0, pool.size() - 1)];
    p.add_term(a, GaussianRational(mpq_class(coef(rng)), mpq_class(coef(rng))));
  }
  if (p.is_zero()) p.add_term(pool.front(), GaussianRational(1));
  return p;
}

SuiteResult newman_shapiro_suite(const IdentityOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  SuiteResult r;
  r.name = "newman-shapiro";
  for (std::size_t i = 0; i < opt.cases; ++i) {
    const std::size_t d = pick(rng, 1, opt.max_dimension);
    const Polynomial p = random_polynomial(rng, d, static_cast<unsigned>(pick(rng, 0, opt.max_degree)), true);
    const Polynomial q = random_polynomial(rng, d, static_cast<unsigned>(pick(rng, 0, opt.max_degree)), true);
    const mpq_class lhs = apolar_norm_sq(p * q), rhs = newman_shapiro_rhs(p, q);
    ++r.cases;
    if (lhs != rhs) ++r.failures;
    r.max_deviation = std::max(r.max_deviation, deviation(lhs, rhs));
  }
  return r;
}

SuiteResult adjoint_suite(const IdentityOptions& opt) {
  std::mt19937_64 rng(opt.seed + 1);
  SuiteResult r;
  r.name = "adjoint";
  for (std::size_t i = 0; i < opt.cases; ++i) {
    const std::size_t d = pick(rng, 1, opt.max_dimension);
    auto deg = [&] { return static_cast<unsigned>(pick(rng, 0, opt.max_degree)); };
    const Polynomial q = random_polynomial(rng, d, deg(), false);
    const Polynomial f = random_polynomial(rng, d, deg() + static_cast<unsigned>(std::max(q.total_degree(), 0)), false);
    const Polynomial g = random_polynomial(rng, d, deg(), false);
    const GaussianRational lhs = apolar_inner(apply_diff_operator(conjugate_star(q), f), g);
    const GaussianRational rhs = apolar_inner(f, q * g);
    ++r.cases;
    if (lhs != rhs) ++r.failures;
    r.max_deviation = std::max(r.max_deviation, deviation(lhs, rhs));
  }
  return r;
}

SuiteResult bombieri_suite(const IdentityOptions& opt) {
  std::mt19937_64 rng(opt.seed + 2);
  SuiteResult r;
  r.name = "bombieri";
  for (std::size_t i = 0; i < opt.cases; ++i) {
    const std::size_t d = pick(rng, 2, std::max<std::size_t>(2, opt.max_dimension));
    const bool disjoint = i % 4 == 0;
    Polynomial p(d), q(d);
    if (disjoint) {
      // Monomials in complementary variable blocks: equality expected.
      const std::size_t split = pick(rng, 1, d - 1);
      std::vector<unsigned> a(d, 0), b(d, 0);
      for (std::size_t j = 0; j < d; ++j) (j < split ? a : b)[j] = static_cast<unsigned>(pick(rng, 0, 2));
      a[0] += 1;
      b[d - 1] += 1;
      p = Polynomial::monomial(MultiIndex(a), GaussianRational(static_cast<long>(pick(rng, 1, 3))));
      q = Polynomial::monomial(MultiIndex(b), GaussianRational(1));
    } else {
      p = random_polynomial(rng, d, static_cast<unsigned>(pick(rng, 1, opt.max_degree)), true);
      q = random_polynomial(rng, d, static_cast<unsigned>(pick(rng, 1, opt.max_degree)), true);
    }
    const BombieriCheck c = check_bombieri(p, q);
    ++r.cases;
    const bool ok = c.holds && (!disjoint || c.equality);
    if (!ok) ++r.failures;
    r.max_deviation = std::max(r.max_deviation, ok ? 0.0 : std::abs(mpq_class(c.ratio - 1).get_d()));
  }
  return r;
}

SuiteResult bargmann_suite(double tolerance) {
  SuiteResult r;
  r.name = "bargmann";
  r.exact = false;
  r.tolerance = tolerance;
  for (std::size_t d = 1; d <= 2; ++d) {
    std::vector<MultiIndex> mons;
    for (unsigned t = 0; t <= 4; ++t)
      for (const auto& a : multi_indices_of_degree(d, t)) mons.push_back(a);
    const QuadratureGrid grid = make_grid(d, 5);
    for (const auto& a : mons)
      for (const auto& b : mons) {
        const Polynomial pa = Polynomial::monomial(a, GaussianRational(1));
        const Polynomial pb = Polynomial::monomial(b, GaussianRational(1));
        const std::complex<double> v = bargmann_inner_quadrature(pa, pb, grid);
        const double exact = a == b ? a.factorial().get_d() : 0.0;
        const double dev = exact == 0.0 ? std::abs(v) : std::abs(v - exact) / exact;
        ++r.cases;
        if (dev > tolerance) ++r.failures;
        r.max_deviation = std::max(r.max_deviation, dev);
      }
  }
  return r;
}

std::vector<SuiteResult> verify_identities(const IdentityOptions& opt) {
  return {newman_shapiro_suite(opt), adjoint_suite(opt), bombieri_suite(opt), bargmann_suite()};
}

}  // namespace ksb
