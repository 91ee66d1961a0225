#pragma once

// Lets Eigen dense containers hold exact Q(i) scalars. Only storage, block
// access and elementwise arithmetic are used with this scalar; anything that
// needs conj() or sqrt() goes through the ksb free functions instead.

#include <Eigen/Core>

#include "ksbound/gaussian_rational.hpp"

namespace Eigen {

template <>
struct NumTraits<ksb::GaussianRational> : GenericNumTraits<ksb::GaussianRational> {
  using Real = ksb::GaussianRational;
  using NonInteger = ksb::GaussianRational;
  using Nested = ksb::GaussianRational;
  using Literal = ksb::GaussianRational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 100
  };

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace ksb {

using ExactMatrix = Eigen::Matrix<GaussianRational, Eigen::Dynamic, Eigen::Dynamic>;

/// Rank by exact Gaussian elimination (the matrix is copied).
Eigen::Index exact_rank(ExactMatrix m);

/// A == A^H, exactly.
bool is_hermitian(const ExactMatrix& a);

}  // namespace ksb
