#include "ksbound/fockcheck.hpp"

#include <cmath>
#include <numbers>

#include "ksbound/sphere_opt.hpp"

namespace ksb {

GaussHermiteRule gauss_hermite(unsigned n) {
  require(n >= 1, "gauss_hermite: need at least one node");
  constexpr double pim4 = 0.7511255444649425;  // pi^(-1/4)
  constexpr int max_iterations = 100;
  std::vector<double> x(n), w(n);
  const unsigned half = (n + 1) / 2;
  double z = 0.0;
  for (unsigned i = 0; i < half; ++i) {
    if (i == 0)
      z = std::sqrt(2.0 * n + 1) - 1.85575 * std::pow(2.0 * n + 1, -0.16667);
    else if (i == 1)
      z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
    else if (i == 2)
      z = 1.86 * z - 0.86 * x[0];
    else if (i == 3)
      z = 1.91 * z - 0.91 * x[1];
    else
      z = 2.0 * z - x[i - 2];

    double pp = 0.0;
    bool converged = false;
    for (int it = 0; it < max_iterations; ++it) {
      double p1 = pim4, p2 = 0.0;
      for (unsigned j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-15 * std::max(1.0, std::abs(z))) {
        converged = true;
        break;
      }
    }
    require(converged, "gauss_hermite: Newton iteration did not converge for n = " + std::to_string(n));
    x[i] = z;
    x[n - 1 - i] = -z;
    w[i] = w[n - 1 - i] = 2.0 / (pp * pp);
  }
  if (n % 2 == 1) x[half - 1] = 0.0;

  GaussHermiteRule r;
  r.nodes.assign(x.rbegin(), x.rend());
  r.weights.assign(w.rbegin(), w.rend());
  return r;
}

QuadratureGrid make_grid(std::size_t complex_dimension, unsigned nodes_per_axis) {
  require(complex_dimension >= 1, "make_grid: dimension must be positive");
  QuadratureGrid g;
  g.complex_dimension = complex_dimension;
  g.nodes_per_axis = nodes_per_axis;
  g.rule = gauss_hermite(nodes_per_axis);
  return g;
}

unsigned required_nodes(const Polynomial& p, const Polynomial& q) {
  const int deg = std::max(p.total_degree(), 0) + std::max(q.total_degree(), 0);
  return static_cast<unsigned>(deg + 3) / 2;
}

std::complex<double> bargmann_inner_quadrature(const Polynomial& p, const Polynomial& q, const QuadratureGrid& grid) {
  require_same_dim(p.dimension(), q.dimension());
  if (grid.complex_dimension != p.dimension())
    throw DimensionMismatch(grid.complex_dimension, p.dimension());
  require(grid.nodes_per_axis >= required_nodes(p, q),
          "bargmann_inner_quadrature: " + std::to_string(grid.nodes_per_axis) + " nodes per axis, need " +
              std::to_string(required_nodes(p, q)));

  const std::size_t d = grid.complex_dimension;
  const std::size_t axes = 2 * d;
  const unsigned n = grid.nodes_per_axis;
  const ComplexForm fp(p), fq(q);

  // Odometer over the n^(2d) grid points; axes 0..d-1 are Re z, d..2d-1 are Im z.
  std::vector<unsigned> idx(axes, 0);
  Eigen::VectorXcd z(static_cast<Eigen::Index>(d));
  std::complex<double> sum = 0.0;
  for (;;) {
    double w = 1.0;
    for (std::size_t a = 0; a < axes; ++a) w *= grid.rule.weights[idx[a]];
    for (std::size_t j = 0; j < d; ++j)
      z(static_cast<Eigen::Index>(j)) = {grid.rule.nodes[idx[j]], grid.rule.nodes[idx[d + j]]};
    sum += w * fp.value(z) * std::conj(fq.value(z));

    std::size_t a = 0;
    while (a < axes && ++idx[a] == n) idx[a++] = 0;
    if (a == axes) break;
  }
  return sum / std::pow(std::numbers::pi, static_cast<double>(d));
}

}  // namespace ksb
