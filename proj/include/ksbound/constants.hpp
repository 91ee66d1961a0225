#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "ksbound/groebner.hpp"
#include "ksbound/polynomial.hpp"
#include "ksbound/sphere_opt.hpp"

namespace ksb {

/// Minimum over |eta| = 1 of sum_{|alpha| = rho} |d^alpha p(eta)|^2.
/// Requires p homogeneous of degree k and 1 <= rho < k.
SphereMinResult sphere_min_sum_sq(const Polynomial& p, unsigned rho, const SphereMinOptions& opt = {});

struct C1Result {
  /// k^-rho binom(d+rho-1, rho)^-1/2 sqrt(min); 0 when level rho has a common zero.
  double value = 0.0;
  SphereMinResult sphere;
  bool level_only_origin = false;
  std::string diagnostic;
};

/// Lower-bound constant for ||p f_m|| >= C1 (m+d)^((k-rho)/2) ||f_m||.
/// The level-rho verdict is decided exactly first; the minimum itself is a
/// multi-start local search and can only overestimate the true minimum.
C1Result c1_constant(const Polynomial& p, unsigned rho, const SphereMinOptions& opt = {},
                     const MonomialOrder* order = nullptr);

struct C2Exact {
  /// sum_{rho < |alpha| <= k} |d^alpha p*(conj c)|^2 / alpha! * |c|^(2|alpha| - 2k)
  mpq_class squared;
  double value = 0.0;  ///< sqrt(squared)
};

/// Upper-bound constant at an exact witness c (any nonzero norm). Requires
/// every d^alpha p, |alpha| = rho, to vanish at c.
C2Exact c2_constant_exact(const Polynomial& p, unsigned rho, std::span<const GaussianRational> c);

/// Same sum at a floating unit vector c (|c| = 1 within 1e-12); the level-rho
/// derivatives must vanish there with squared residual <= 1e-16.
double c2_constant(const Polynomial& p, unsigned rho, std::span<const std::complex<double>> c);

struct NecessityRow {
  unsigned m = 0;
  mpq_class ratio;  ///< ||p <z,c>^m||^2 / ||<z,c>^m||^2
  mpq_class bound;  ///< C2^2 m^(k - rho - 1)
  bool holds = false;
};

struct NecessityTable {
  C2Exact c2;
  std::vector<NecessityRow> rows;
  std::size_t violations = 0;
};

/// Exact check of ||p <z,c>^m||^2 <= C2^2 m^(k-rho-1) ||<z,c>^m||^2 for m in [m_from, m_to].
NecessityTable necessity_bound_check(const Polynomial& p, unsigned rho, std::span<const GaussianRational> c,
                                     unsigned m_from, unsigned m_to);

struct RealWitness {
  Polynomial q;          ///< Re or Im of <x, c>^m
  bool real_part = true;
  mpq_class q_norm_sq;
  mpq_class full_norm_sq;  ///< ||<x, c>^m||^2
  mpq_class product_norm_sq;
  mpq_class bound;  ///< 4 C ||q||^2 m^(k-rho-1), C = C2^2
  bool holds = false;
};

struct RealImagSplit {
  Polynomial q;
  bool real_part = true;
  mpq_class q_norm_sq;
  mpq_class full_norm_sq;
};

/// Re<x,c>^m when it carries at least half of ||<x,c>^m||^2, otherwise Im<x,c>^m.
RealImagSplit split_real_imag(std::span<const GaussianRational> c, unsigned m);

/// Real-coefficient test polynomial for a real p: whichever of Re<x,c>^m and
/// Im<x,c>^m carries at least half the norm (Re on ties), with the exact bound.
RealWitness real_witness(const Polynomial& p, unsigned rho, std::span<const GaussianRational> c, unsigned m);

}  // namespace ksb
