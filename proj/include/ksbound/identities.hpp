#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ksbound/polynomial.hpp"

namespace ksb {

struct SuiteResult {
  std::string name;
  bool exact = true;  ///< exact rational comparison; otherwise tolerance-based
  double tolerance = 0.0;
  std::size_t cases = 0;
  std::size_t failures = 0;
  double max_deviation = 0.0;

  bool passed() const { return failures == 0; }
};

struct IdentityOptions {
  std::uint64_t seed = 0;
  std::size_t cases = 200;  ///< random instances per exact suite
  std::size_t max_dimension = 3;
  unsigned max_degree = 4;
};

/// Random polynomial in `dim` variables with small Gaussian-integer
/// coefficients: homogeneous of degree `deg`, or with terms of degree <= deg.
Polynomial random_polynomial(std::mt19937_64& rng, std::size_t dim, unsigned deg, bool homogeneous,
                             std::size_t max_terms = 5);

/// ||p q||^2 against sum_gamma ||(d^gamma p*)(D) q||^2 / gamma!.
SuiteResult newman_shapiro_suite(const IdentityOptions& opt);
/// <q*(D) f, g> against <f, q g>.
SuiteResult adjoint_suite(const IdentityOptions& opt);
/// ||p q|| >= ||p|| ||q|| for homogeneous p, q, with equality when they use disjoint variables.
SuiteResult bombieri_suite(const IdentityOptions& opt);
/// Bargmann quadrature against the exact inner product on all monomial
/// pairs with |alpha|, |beta| <= 4 in d <= 2 (absolute error for zero
/// entries, relative otherwise).
SuiteResult bargmann_suite(double tolerance = 1e-8);

std::vector<SuiteResult> verify_identities(const IdentityOptions& opt);

}  // namespace ksb
