#pragma once

#include <complex>
#include <vector>

#include "ksbound/polynomial.hpp"

namespace ksb {

struct GaussHermiteRule {
  std::vector<double> nodes;    ///< ascending
  std::vector<double> weights;  ///< for the weight exp(-t^2); they sum to sqrt(pi)
};

/// n-point Gauss-Hermite rule; nodes by Newton's method on the normalized
/// Hermite recurrence, converged to 1e-15 relative.
GaussHermiteRule gauss_hermite(unsigned n);

/// Tensor-product rule on R^(2d) for the weight exp(-|x|^2 - |y|^2).
struct QuadratureGrid {
  std::size_t complex_dimension = 0;
  unsigned nodes_per_axis = 0;
  GaussHermiteRule rule;

  std::size_t real_dimension() const { return 2 * complex_dimension; }
  /// Largest per-variable degree integrated exactly.
  unsigned exact_degree() const { return 2 * nodes_per_axis - 1; }
};

QuadratureGrid make_grid(std::size_t complex_dimension, unsigned nodes_per_axis);

/// Fewest nodes per axis that satisfy the exactness precondition for p, q.
unsigned required_nodes(const Polynomial& p, const Polynomial& q);

/// pi^-d sum w p(x + iy) conj(q(x + iy)) over the grid. Requires
/// 2 * nodes >= deg p + deg q + 2.
std::complex<double> bargmann_inner_quadrature(const Polynomial& p, const Polynomial& q, const QuadratureGrid& grid);

}  // namespace ksb
