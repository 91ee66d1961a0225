#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ksbound/polynomial.hpp"

namespace ksb {

/// A polynomial compiled for double-precision evaluation of its value and
/// holomorphic partial derivatives at points of C^d.
class ComplexForm {
 public:
  explicit ComplexForm(const Polynomial& p);

  std::size_t dimension() const { return dim_; }
  std::complex<double> value(const Eigen::VectorXcd& z) const;
  /// Value plus d/dz_j for every j.
  std::complex<double> value_and_gradient(const Eigen::VectorXcd& z, Eigen::VectorXcd& grad) const;

 private:
  struct Term {
    std::vector<unsigned> exp;
    std::complex<double> coef;
  };
  std::size_t dim_;
  unsigned max_exp_ = 0;
  std::vector<Term> terms_;
};

/// eta = u + i v  <->  x = (u, v) in R^(2d).
Eigen::VectorXcd to_complex_point(const Eigen::VectorXd& x);
Eigen::VectorXd to_real_point(const Eigen::VectorXcd& z);

/// sign * sum_i |f_i(u + i v)|^2 as a smooth function on R^(2d), with its
/// analytic gradient.
class SquaredModulusSum {
 public:
  SquaredModulusSum(const std::vector<Polynomial>& forms, double sign = 1.0);

  std::size_t real_dimension() const { return 2 * dim_; }
  double value(const Eigen::VectorXd& x) const;
  double value_and_gradient(const Eigen::VectorXd& x, Eigen::VectorXd& grad) const;

 private:
  std::size_t dim_;
  double sign_;
  std::vector<ComplexForm> forms_;
};

struct SphereMinOptions {
  int starts = 64;
  std::uint64_t seed = 0;
  double gradient_tolerance = 1e-12;
  int max_iterations = 20000;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct SphereMinResult {
  double minimum = 0.0;
  Eigen::VectorXd argmin;  ///< unit vector in R^(2d)
  int starts_used = 0;
  bool converged = false;
  double gradient_norm = 0.0;
};

using SphereObjective = std::function<double(const Eigen::VectorXd&, Eigen::VectorXd*)>;

/// Projected gradient descent with Armijo backtracking from a single start.
SphereMinResult descend_on_sphere(const SphereObjective& f, Eigen::VectorXd x0, double gradient_tolerance,
                                  int max_iterations);

/// Multi-start minimization over the unit sphere of R^dim. Start i draws from
/// a generator seeded by (seed, i), so the result does not depend on the
/// thread count. Ties go to the lower objective, then to the lexicographically
/// smaller argmin rounded to 1e-9.
SphereMinResult minimize_on_sphere(const SphereObjective& f, std::size_t dim, const SphereMinOptions& opt);

/// All local results, indexed by start.
std::vector<SphereMinResult> minimize_on_sphere_all(const SphereObjective& f, std::size_t dim,
                                                    const SphereMinOptions& opt);

/// Uniformly distributed start point number `index` for the given seed.
Eigen::VectorXd sphere_start(std::size_t dim, std::uint64_t seed, std::uint64_t index);

struct CommonZero {
  Eigen::VectorXcd point;  ///< |point| = 1, largest coordinate real positive
  double residual = 0.0;   ///< sum_g |g(point)|^2
  /// Same direction with complex-rational coordinates, when the rounded
  /// candidate is an exact common zero.
  std::optional<std::vector<GaussianRational>> exact;
};

struct CommonZeroSearch {
  std::optional<CommonZero> zero;
  double best_residual = 0.0;
  std::string diagnostic;
};

/// Squared-residual acceptance threshold for numeric common zeros.
inline constexpr double kCommonZeroThreshold = 1e-20;

/// Numeric nonzero common zero of homogeneous forms: multi-start descent on
/// sum |g|^2 over the sphere, then Gauss-Newton on the real/imaginary split.
CommonZeroSearch find_common_zero(const std::vector<Polynomial>& gens, const SphereMinOptions& opt = {});

/// Rounds a numeric zero to complex-rational coordinates (scaled so the
/// largest coordinate is 1) and keeps it only if every generator vanishes
/// exactly there.
std::optional<std::vector<GaussianRational>> rationalize_zero(const std::vector<Polynomial>& gens,
                                                              const Eigen::VectorXcd& point,
                                                              long max_denominator = 1000);

}  // namespace ksb
