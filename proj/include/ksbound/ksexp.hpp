#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ksbound/constants.hpp"
#include "ksbound/groebner.hpp"
#include "ksbound/polynomial.hpp"
#include "ksbound/sphere_opt.hpp"

namespace ksb {

/// Exact verdict for one derivative level {d^alpha p : |alpha| = rho}.
struct LevelVerdict {
  unsigned rho = 0;
  VarietyVerdict verdict;
  std::vector<Polynomial> basis;  ///< reduced Groebner basis
};

/// How the exponent was pinned down.
enum class ExponentBasis {
  CommonZeroLevel,    ///< rho* found: l = k - rho* - 1
  ExternalUpperBound, ///< no level has a common zero, d > 1: l = k - 1 using l <= k - 1 for d > 1
  OneVariable,        ///< d = 1: l = k
  LinearForm,         ///< k = 1, d > 1: l = 0
};

std::string to_string(ExponentBasis b);

struct KSReport {
  unsigned degree = 0;
  std::size_t dimension = 0;
  /// Largest rho in 1..k-1 whose derivative system has a common nonzero zero.
  std::optional<unsigned> rho_star;
  unsigned exponent = 0;
  ExponentBasis basis = ExponentBasis::CommonZeroLevel;
  /// Levels visited by the search, keyed by rho.
  std::map<unsigned, LevelVerdict> levels;

  /// Numeric common zero at rho* (advisory; never feeds the verdict).
  std::optional<CommonZero> witness;
  std::string witness_diagnostic;

  /// C1 at rho* + 1 (or rho = 1 when rho* is absent), when that level is < k.
  std::optional<unsigned> c1_rho;
  std::optional<C1Result> c1;
  /// C2 at rho* from the witness: exact when the witness was rationalized.
  std::optional<double> c2;
  std::optional<mpq_class> c2_squared_exact;
};

struct KSOptions {
  std::optional<MonomialOrder> order;  ///< default grevlex
  /// Scan every level instead of binary search.
  bool linear_scan = false;
  bool witness = true;
  bool constants = true;
  SphereMinOptions sphere;
};

/// Exact verdict for a single level.
LevelVerdict decide_level(const Polynomial& p, unsigned rho, const MonomialOrder& order);

/// Khavinson-Shapiro exponent of a nonzero homogeneous p of degree k >= 1.
///
/// Common-zero levels are downward closed (a zero of every rho-th derivative
/// is a zero of every lower derivative by Euler's identity), so rho* is found
/// by binary search over 1..k-1.
KSReport ks_exponent(const Polynomial& p, const KSOptions& opt = {});

}  // namespace ksb
