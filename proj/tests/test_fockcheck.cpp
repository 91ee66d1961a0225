#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ksbound/apolar.hpp"
#include "ksbound/fockcheck.hpp"
#include "ksbound/polyparse.hpp"
#include "oracles.hpp"

using namespace ksb;

namespace {
Polynomial P(const char* s, std::size_t d = 2) { return parse_poly(s, d); }

std::complex<double> quad(const Polynomial& p, const Polynomial& q, unsigned extra = 0) {
  return bargmann_inner_quadrature(p, q, make_grid(p.dimension(), required_nodes(p, q) + extra));
}
}  // namespace

TEST_CASE("Gauss-Hermite rule") {
  for (unsigned n : {1u, 2u, 3u, 5u, 8u, 13u, 20u, 40u}) {
    const GaussHermiteRule r = gauss_hermite(n);
    REQUIRE(r.nodes.size() == n);
    double total = 0;
    for (double w : r.weights) total += w;
    CHECK(total == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
    for (unsigned i = 1; i < n; ++i) CHECK(r.nodes[i - 1] < r.nodes[i]);
    for (unsigned i = 0; i < n; ++i) CHECK(std::abs(r.nodes[i] + r.nodes[n - 1 - i]) < 1e-14);
    // Moments int t^(2j) e^(-t^2) dt = Gamma(j + 1/2), exact for 2j <= 2n - 1.
    for (unsigned j = 0; 2 * j <= 2 * n - 1; ++j) {
      double s = 0;
      for (unsigned i = 0; i < n; ++i) s += r.weights[i] * std::pow(r.nodes[i], 2.0 * j);
      CHECK(s == doctest::Approx(std::tgamma(j + 0.5)).epsilon(1e-12));
    }
  }
  const GaussHermiteRule two = gauss_hermite(2);
  CHECK(two.nodes[1] == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(gauss_hermite(0), PreconditionError);
}

TEST_CASE("Bargmann integral of simple forms") {
  CHECK(std::abs(quad(P("x", 1), P("x", 1)) - 1.0) <= 1e-8);
  CHECK(std::abs(quad(P("x^2", 1), P("x^2", 1)) - 2.0) <= 1e-8);
  const Polynomial p = P("x^4+4x^2y^2+2y^4");
  const double exact = apolar_norm_sq(p).get_d();
  CHECK(std::abs(quad(p, p) - exact) <= 1e-6 * exact);
}

TEST_CASE("Bargmann integral on monomial pairs") {
  for (std::size_t d = 1; d <= 2; ++d) {
    std::vector<MultiIndex> mons;
    for (unsigned deg = 0; deg <= 4; ++deg)
      for (const auto& a : multi_indices_of_degree(d, deg)) mons.push_back(a);
    const QuadratureGrid g = make_grid(d, 5);
    for (const auto& a : mons)
      for (const auto& b : mons) {
        const Polynomial pa = Polynomial::monomial(a, GaussianRational(1));
        const Polynomial pb = Polynomial::monomial(b, GaussianRational(1));
        const std::complex<double> v = bargmann_inner_quadrature(pa, pb, g);
        if (a == b) {
          const double f = a.factorial().get_d();
          CHECK(std::abs(v - f) <= 1e-8 * f);
        } else {
          CHECK(std::abs(v) <= 1e-10);
        }
      }
  }
}

TEST_CASE("Bargmann integral on random pairs and grid refinement") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 30; ++t) {
    const std::size_t d = 1 + t % 2;
    const Polynomial p = oracle::random_poly(rng, d, 1 + t % 4, t % 3 == 0, 4);
    const Polynomial q = oracle::random_poly(rng, d, 1 + (t + 1) % 4, t % 3 == 0, 4);
    const std::complex<double> exact = apolar_inner(p, q).to_complex();
    const std::complex<double> v = quad(p, q);
    CHECK(std::abs(v - exact) <= 1e-8 * (1 + std::abs(exact)));
    const unsigned n = required_nodes(p, q);
    const std::complex<double> v2 = bargmann_inner_quadrature(p, q, make_grid(d, 2 * n));
    CHECK(std::abs(v2 - v) <= 1e-10 * (1 + std::abs(exact)));
  }
}

TEST_CASE("quadrature preconditions") {
  CHECK(required_nodes(P("x^2"), P("x^2")) == 3);
  CHECK(required_nodes(P("x^2"), P("x^3")) == 4);
  CHECK_THROWS_AS(bargmann_inner_quadrature(P("x^4"), P("x^4"), make_grid(2, 4)), PreconditionError);
  CHECK_THROWS_AS(bargmann_inner_quadrature(P("x"), P("x"), make_grid(1, 4)), DimensionMismatch);
}
