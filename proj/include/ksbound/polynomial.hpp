#pragma once

#include <complex>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ksbound/error.hpp"
#include "ksbound/gaussian_rational.hpp"
#include "ksbound/multi_index.hpp"

namespace ksb {

/// Sparse polynomial in d variables over Q(i).
///
/// Terms are stored in descending graded-lex order and no zero coefficient is
/// ever stored, so two polynomials are equal iff their term maps are equal.
class Polynomial {
 public:
  using Terms = std::map<MultiIndex, GaussianRational, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::size_t dim) : dim_(dim) {}

  static Polynomial constant(std::size_t dim, GaussianRational c);
  static Polynomial monomial(MultiIndex alpha, GaussianRational c = 1);
  /// The coordinate function z_j (0-based j).
  static Polynomial variable(std::size_t dim, std::size_t j);

  std::size_t dimension() const { return dim_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of z^alpha (zero when absent).
  GaussianRational coefficient(const MultiIndex& alpha) const;
  /// Adds c to the coefficient of z^alpha, erasing it if the sum cancels.
  void add_term(const MultiIndex& alpha, const GaussianRational& c);

  /// Largest |alpha| over stored terms; -1 for the zero polynomial.
  int total_degree() const;
  /// Largest alpha_j over stored terms (the degree of z_j).
  unsigned degree_in(std::size_t j) const;
  bool has_real_coefficients() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const GaussianRational& c);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const GaussianRational& c) { return a *= c; }
  friend Polynomial operator*(const GaussianRational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  std::size_t dim_ = 0;
  Terms terms_;
};

/// Exact product; throws DimensionMismatch.
Polynomial multiply(const Polynomial& p, const Polynomial& q);
Polynomial power(const Polynomial& p, unsigned n);

/// Exact partial derivative d^alpha p.
Polynomial diff(const Polynomial& p, const MultiIndex& alpha);
/// d/dz_j.
Polynomial diff(const Polynomial& p, std::size_t j);

/// P*: all coefficients conjugated.
Polynomial conjugate_star(const Polynomial& p);
Polynomial real_part(const Polynomial& p);
Polynomial imag_part(const Polynomial& p);

/// Direct monomial sum at an exact point.
GaussianRational evaluate(const Polynomial& p, std::span<const GaussianRational> z);
/// Direct monomial sum at a floating point.
std::complex<double> evaluate(const Polynomial& p, std::span<const std::complex<double>> z);

/// Result of a homogeneity test. The zero polynomial is homogeneous of every
/// degree and reports `every_degree`.
struct Homogeneity {
  bool homogeneous = false;
  bool every_degree = false;
  unsigned degree = 0;

  /// True when the polynomial is homogeneous of exactly degree m.
  bool is(unsigned m) const { return homogeneous && (every_degree || degree == m); }
};
Homogeneity homogeneous_degree(const Polynomial& p);

/// Degree k of a nonzero homogeneous polynomial; throws PreconditionError otherwise.
unsigned require_homogeneous(const Polynomial& p, const char* what);

/// All (alpha, d^alpha p) with |alpha| = rho, alpha in descending graded-lex
/// order. Zero derivatives are kept so the list length is binom(d+rho-1, rho).
std::vector<std::pair<MultiIndex, Polynomial>> derivative_level(const Polynomial& p, unsigned rho);

/// Only the polynomials of derivative_level.
std::vector<Polynomial> derivative_system(const Polynomial& p, unsigned rho);

/// The linear form <z, c> = sum_j conj(c_j) z_j.
Polynomial pairing_form(std::span<const GaussianRational> c);

/// |c|^2 = sum_j |c_j|^2.
mpq_class vector_norm_sq(std::span<const GaussianRational> c);

}  // namespace ksb
