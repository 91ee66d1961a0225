#pragma once

#include <span>

#include "ksbound/polynomial.hpp"

namespace ksb {

/// <p, q>_a = sum_alpha alpha! c_alpha conj(d_alpha), exact.
GaussianRational apolar_inner(const Polynomial& p, const Polynomial& q);

/// ||p||_a^2.
mpq_class apolar_norm_sq(const Polynomial& p);

/// [p]_B^2 = ||p||_a^2 / m! for p homogeneous of degree m. The zero
/// polynomial has Bombieri norm 0.
mpq_class bombieri_norm_sq(const Polynomial& p);

/// q(D) f = sum_alpha d_alpha d^alpha f, the constant-coefficient
/// differential operator obtained by substituting d/dz_j for z_j in q.
Polynomial apply_diff_operator(const Polynomial& q, const Polynomial& f);

/// sum_gamma (1/gamma!) ||(d^gamma p*)(D) q||_a^2. Equals ||p q||_a^2.
mpq_class newman_shapiro_rhs(const Polynomial& p, const Polynomial& q);

/// ||<z, c>^m||_a^2 in closed form: m! |c|^(2m).
mpq_class pairing_power_norm_sq(std::span<const GaussianRational> c, unsigned m);

/// ||p(z) <z, c>^m||_a^2 in closed form, for p homogeneous of degree k,
/// c != 0 and m >= k:
///
///   ||<z,c>^m||^2 * sum_{|alpha| <= k} m! |d^alpha p*(conj c)|^2
///                   / (alpha! (m - k + |alpha|)!) * |c|^(2|alpha| - 2k)
///
/// Everything is rational because |c| only enters squared.
mpq_class product_with_power_norm_sq(const Polynomial& p, std::span<const GaussianRational> c,
                                     unsigned m);

/// Outcome of Bombieri's inequality ||p q||^2 >= ||p||^2 ||q||^2.
struct BombieriCheck {
  mpq_class product_norm_sq;
  mpq_class p_norm_sq;
  mpq_class q_norm_sq;
  mpq_class ratio;  ///< product / (p * q), always >= 1
  bool holds = false;
  bool equality = false;
};

/// Requires p and q homogeneous and nonzero.
BombieriCheck check_bombieri(const Polynomial& p, const Polynomial& q);

}  // namespace ksb
