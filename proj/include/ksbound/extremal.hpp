#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "ksbound/eigen_support.hpp"
#include "ksbound/polynomial.hpp"
#include "ksbound/sphere_opt.hpp"

namespace ksb {

/// Largest Gram dimension binom(m+d-1, m) accepted.
inline constexpr std::size_t kMaxGramDimension = 20000;

/// Gram matrix of f -> p f on degree-m forms in the orthonormal basis
/// z^alpha / sqrt(alpha!), alpha in descending grlex order.
///
/// The normalization sqrt(alpha! beta!) is irrational in general, so the exact
/// part is stored unnormalized: raw(a, b) = <p z^beta, p z^alpha>.
struct HermitianGram {
  unsigned m = 0;
  std::vector<MultiIndex> basis;
  ExactMatrix raw;

  std::size_t dimension() const { return basis.size(); }
  /// raw(a, b) / sqrt(alpha! beta!), rounded once from multiprecision.
  Eigen::MatrixXcd normalized() const;
};

HermitianGram gram_matrix(const Polynomial& p, unsigned m);

template <class Scalar>
struct JacobiResult {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> values;  ///< ascending
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> vectors;
  int sweeps = 0;
};

/// Cyclic Jacobi for a real symmetric matrix; stops once the off-diagonal
/// Frobenius norm drops below rel_tol * ||a||_F.
template <class Scalar>
JacobiResult<Scalar> jacobi_eigen(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a, Scalar rel_tol,
                                  int max_sweeps = 100) {
  using std::abs;
  using std::sqrt;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index n = a.rows();
  Mat v = Mat::Identity(n, n);
  const Scalar target = rel_tol * a.norm();
  auto off = [&] {
    Scalar s(0);
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < n; ++i)
        if (i != j) s += a(i, j) * a(i, j);
    return sqrt(s);
  };

  JacobiResult<Scalar> r;
  for (Scalar o = off(); r.sweeps < max_sweeps && o >= target && o > Scalar(0); o = off()) {
    ++r.sweeps;
    for (Eigen::Index p = 0; p < n - 1; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        if (apq == Scalar(0)) continue;
        const Scalar theta = (a(q, q) - a(p, p)) / (Scalar(2) * apq);
        const Scalar t = (theta >= Scalar(0) ? Scalar(1) : Scalar(-1)) / (abs(theta) + sqrt(theta * theta + Scalar(1)));
        const Scalar c = Scalar(1) / sqrt(t * t + Scalar(1));
        const Scalar s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return a(x, x) < a(y, y); });
  r.values.resize(n);
  r.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    r.values(i) = a(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i)]);
    r.vectors.col(i) = v.col(order[static_cast<std::size_t>(i)]);
  }
  return r;
}

/// [[X, -Y], [Y, X]] for H = X + iY.
Eigen::MatrixXd real_embedding(const Eigen::MatrixXcd& h);

struct HermitianEigen {
  Eigen::VectorXd values;     ///< ascending, one per Hermitian eigenvalue
  Eigen::MatrixXcd vectors;   ///< unitary
  int sweeps = 0;
};

/// Jacobi on the real embedding; each eigenvalue appears there twice, with
/// eigenvectors w and i w, and the duplicates are removed by Gram-Schmidt.
HermitianEigen hermitian_eigen(const Eigen::MatrixXcd& h, double rel_tol = 1e-14);

struct SpectralRow {
  unsigned m = 0;
  double inf = 0.0;  ///< I_m = sqrt(lambda_min)
  double sup = 0.0;  ///< S_m = sqrt(lambda_max)
  std::size_t dimension = 0;
  int sweeps = 0;
};

/// I_m and S_m of ||p f|| / ||f|| over nonzero degree-m forms f.
SpectralRow extremal_ratios(const Polynomial& p, unsigned m);

/// Rows for several m, computed concurrently, returned in input order.
std::vector<SpectralRow> extremal_table(const Polynomial& p, const std::vector<unsigned>& ms, unsigned threads = 0);

/// max |p(eta)| over the unit sphere of C^d (multi-start local search).
double sup_on_sphere(const Polynomial& p, const SphereMinOptions& opt = {});

struct PinascoRow {
  SpectralRow spectral;
  double ratio = 0.0;  ///< S_m / sqrt((m+1)...(m+k))
};

struct PinascoTable {
  double sup = 0.0;
  std::vector<PinascoRow> rows;
};

PinascoTable pinasco_table(const Polynomial& p, const std::vector<unsigned>& ms, const SphereMinOptions& opt = {});

/// S_m / sqrt((m+1)...(m+k)).
double pinasco_ratio(double s_m, unsigned m, unsigned k);

}  // namespace ksb
