#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ksb {

/// Operands live in different dimensions.
class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(std::size_t a, std::size_t b)
      : std::invalid_argument("dimension mismatch: " + std::to_string(a) + " vs " +
                              std::to_string(b)) {}
};

/// A documented precondition of a computation does not hold
/// (non-homogeneous input, rho out of range, witness that does not vanish, ...).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw PreconditionError(what);
}

inline void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) throw DimensionMismatch(a, b);
}

}  // namespace ksb
