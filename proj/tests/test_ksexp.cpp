#include <doctest.h>

#include <random>

#include "ksbound/ksexp.hpp"
#include "ksbound/polyparse.hpp"
#include "oracles.hpp"

using namespace ksb;

namespace {
Polynomial P(const char* s, std::size_t d = 2) { return parse_poly(s, d); }

KSOptions fast() {
  KSOptions o;
  o.sphere.starts = 16;
  return o;
}
}  // namespace

TEST_CASE("exponent of the worked examples") {
  const KSReport a = ks_exponent(P("x^4+4x^2y^2+2y^4"), fast());
  CHECK(a.degree == 4);
  CHECK(!a.rho_star);
  CHECK(a.exponent == 3);
  CHECK(a.basis == ExponentBasis::ExternalUpperBound);
  CHECK(a.levels.at(1).verdict.only_origin);
  CHECK(!a.witness);
  REQUIRE(a.c1_rho);
  CHECK(*a.c1_rho == 1);
  REQUIRE(a.c1);
  CHECK(a.c1->value > 0);
  CHECK(!a.c2);

  const KSReport b = ks_exponent(P("x^4+2x^2y^2+y^4"), fast());
  REQUIRE(b.rho_star);
  CHECK(*b.rho_star == 1);
  CHECK(b.exponent == 2);
  CHECK(b.basis == ExponentBasis::CommonZeroLevel);
  CHECK(!b.levels.at(1).verdict.only_origin);
  CHECK(b.levels.at(2).verdict.only_origin);
  REQUIRE(b.witness);
  REQUIRE(b.witness->exact);
  REQUIRE(b.c2_squared_exact);
  CHECK(*b.c2_squared_exact == 224);
  REQUIRE(b.c1_rho);
  CHECK(*b.c1_rho == 2);
  CHECK(b.c1->value > 0);
}

TEST_CASE("exponent edge cases") {
  CHECK(ks_exponent(P("x^2"), fast()).exponent == 0);
  CHECK(*ks_exponent(P("x^2"), fast()).rho_star == 1);
  CHECK(ks_exponent(P("x^2+y^2"), fast()).exponent == 1);
  CHECK(ks_exponent(P("x"), fast()).exponent == 0);
  CHECK(ks_exponent(P("x"), fast()).basis == ExponentBasis::LinearForm);
  for (unsigned k = 1; k <= 6; ++k) {
    Polynomial z = power(Polynomial::variable(1, 0), k);
    const KSReport r = ks_exponent(z, fast());
    CHECK(r.exponent == k);
    CHECK(r.basis == ExponentBasis::OneVariable);
  }
  // x^k has a common zero at every level below k.
  const KSReport xk = ks_exponent(P("x^6"), fast());
  CHECK(*xk.rho_star == 5);
  CHECK(xk.exponent == 0);
  CHECK(!xk.c1_rho);
  // (x y)^3: every level up to 2 vanishes on the axes, level 3 contains x^3 and y^3.
  CHECK(*ks_exponent(P("x^3 y^3"), fast()).rho_star == 2);
  // x^3 y^3 z: level 5 still vanishes at (0,0,1), level 6 contains x, y, z.
  CHECK(ks_exponent(P("x^3 y^3 z", 3), fast()).exponent == 1);

  CHECK_THROWS_AS(ks_exponent(P("x^2+y")), PreconditionError);
  CHECK_THROWS_AS(ks_exponent(Polynomial(2)), PreconditionError);
  CHECK_THROWS_AS(ks_exponent(P("3")), PreconditionError);
}

TEST_CASE("binary search agrees with a linear scan") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = 2 + trial % 2;
    const unsigned k = 2 + trial % 4;
    // Mix generic forms with ones that share a high-order linear factor.
    Polynomial p = oracle::random_poly(rng, d, k, true, 3);
    if (trial % 3 == 0) {
      const auto a = oracle::random_vector(rng, d);
      const unsigned e = 1 + trial % (k == 2 ? 1 : k - 1);
      const Polynomial g = oracle::random_poly(rng, d, k - e, true, 2);
      if (!g.is_zero()) p = power(pairing_form(a), e) * g;
    }
    if (p.is_zero() || !homogeneous_degree(p).homogeneous) continue;
    KSOptions bin, lin;
    bin.witness = lin.witness = false;
    bin.constants = lin.constants = false;
    lin.linear_scan = true;
    const KSReport rb = ks_exponent(p, bin), rl = ks_exponent(p, lin);
    CHECK(rb.rho_star == rl.rho_star);
    CHECK(rb.exponent == rl.exponent);
    // Downward closure: every scanned level below rho* has a common zero.
    if (rl.rho_star)
      for (const auto& [rho, lv] : rl.levels) CHECK(lv.verdict.only_origin == (rho > *rl.rho_star));
  }
}

TEST_CASE("verdict does not depend on the monomial order") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 25; ++trial) {
    const Polynomial p = oracle::random_poly(rng, 3, 3, true, 3);
    if (p.is_zero()) continue;
    KSOptions g, l;
    g.witness = l.witness = g.constants = l.constants = false;
    l.order = MonomialOrder::lex(3);
    CHECK(ks_exponent(p, g).rho_star == ks_exponent(p, l).rho_star);
  }
}

TEST_CASE("irrational witness falls back to the floating C2") {
  // (x^2 + 2y^2)^3 vanishes to order 3 on x = +-i sqrt(2) y.
  const Polynomial p = P("(x^2+2y^2)^3");
  const KSReport r = ks_exponent(p, fast());
  REQUIRE(r.rho_star);
  CHECK(*r.rho_star == 2);
  CHECK(r.exponent == 3);
  REQUIRE(r.witness);
  CHECK(!r.witness->exact);
  CHECK(r.witness->residual <= kCommonZeroThreshold);
  for (unsigned rho = 0; rho <= 2; ++rho) {
    double res = 0;
    for (const auto& g : derivative_system(p, rho)) res += std::norm(ComplexForm(g).value(r.witness->point));
    CHECK(res <= 1e-16);
  }
  CHECK(!r.c2_squared_exact);
  REQUIRE(r.c2);
  CHECK(*r.c2 > 0);
}
