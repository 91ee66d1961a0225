#pragma once

// Independent reference computations used only by the tests. None of these
// call the library routine they are used to check.

#include <complex>
#include <random>
#include <vector>

#include "ksbound/polynomial.hpp"

namespace ksb::oracle {

/// d/dz_j by the power rule, written out term by term.
inline Polynomial diff_once(const Polynomial& p, std::size_t j) {
  Polynomial r(p.dimension());
  for (const auto& [a, c] : p.terms()) {
    if (a[j] == 0) continue;
    std::vector<unsigned> e = a.exponents();
    const long n = e[j];
    e[j] -= 1;
    r.add_term(MultiIndex(e), c * GaussianRational(n));
  }
  return r;
}

/// d^alpha by repeated single derivatives.
inline Polynomial diff_repeated(Polynomial p, const MultiIndex& alpha) {
  for (std::size_t j = 0; j < alpha.size(); ++j)
    for (unsigned t = 0; t < alpha[j]; ++t) p = diff_once(p, j);
  return p;
}

/// Schoolbook product computed on raw exponent vectors.
inline Polynomial product(const Polynomial& p, const Polynomial& q) {
  std::map<std::vector<unsigned>, GaussianRational> acc;
  for (const auto& [a, ca] : p.terms())
    for (const auto& [b, cb] : q.terms()) {
      std::vector<unsigned> e(a.size());
      for (std::size_t j = 0; j < e.size(); ++j) e[j] = a[j] + b[j];
      acc[e] += ca * cb;
    }
  Polynomial r(p.dimension());
  for (auto& [e, c] : acc) r.add_term(MultiIndex(e), c);
  return r;
}

/// sum alpha! |c_alpha|^2 with factorials built by multiplication.
inline mpq_class norm_sq(const Polynomial& p) {
  mpq_class s = 0;
  for (const auto& [a, c] : p.terms()) {
    mpz_class f = 1;
    for (unsigned v : a.exponents())
      for (unsigned t = 2; t <= v; ++t) f *= t;
    s += mpq_class(f) * (c.real() * c.real() + c.imag() * c.imag());
  }
  return s;
}

inline GaussianRational random_coefficient(std::mt19937_64& rng, int range = 3, bool complex = true) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 3);
  mpq_class re(num(rng), den(rng));
  re.canonicalize();
  mpq_class im = 0;
  if (complex) {
    im = mpq_class(num(rng), den(rng));
    im.canonicalize();
  }
  return {re, im};
}

/// Random polynomial with up to `terms` terms, each of total degree <= max_deg
/// (exactly `deg` when homogeneous).
inline Polynomial random_poly(std::mt19937_64& rng, std::size_t dim, unsigned deg, bool homogeneous,
                              std::size_t terms = 4, bool complex = true) {
  Polynomial p(dim);
  std::uniform_int_distribution<unsigned> pick_deg(0, deg);
  while (p.is_zero()) {
    for (std::size_t t = 0; t < terms; ++t) {
      const unsigned n = homogeneous ? deg : pick_deg(rng);
      const auto all = multi_indices_of_degree(dim, n);
      std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
      p.add_term(all[pick(rng)], random_coefficient(rng, 3, complex));
    }
  }
  return p;
}

inline std::vector<GaussianRational> random_vector(std::mt19937_64& rng, std::size_t dim) {
  std::vector<GaussianRational> c(dim);
  while (true) {
    for (auto& x : c) x = random_coefficient(rng, 2, true);
    mpq_class s = 0;
    for (auto& x : c) s += x.norm_sq();
    if (sgn(s) != 0) return c;
  }
}

// --- univariate helpers over Q(i), coefficients low degree first ---

using Univariate = std::vector<GaussianRational>;

inline void trim(Univariate& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

inline Univariate univariate_rem(Univariate a, const Univariate& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const GaussianRational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

inline Univariate univariate_gcd(Univariate a, Univariate b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Univariate r = univariate_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Common nonzero zero of homogeneous bivariate forms, decided by
/// dehomogenizing: either y != 0 (set y = 1, test the gcd of the univariate
/// restrictions) or y = 0 and x = 1 is a common root.
inline bool bivariate_forms_have_common_zero(const std::vector<Polynomial>& gens) {
  bool all_vanish_at_x_axis = true;
  Univariate g;  // empty = zero polynomial
  for (const auto& p : gens) {
    Univariate u;
    GaussianRational at_x_axis;
    for (const auto& [a, c] : p.terms()) {
      if (u.size() <= a[0]) u.resize(a[0] + 1);
      u[a[0]] += c;
      if (a[1] == 0) at_x_axis += c;
    }
    if (!at_x_axis.is_zero()) all_vanish_at_x_axis = false;
    g = univariate_gcd(g, u);
  }
  trim(g);
  // A zero restriction means every (x, 1) is a root.
  return all_vanish_at_x_axis || g.empty() || g.size() >= 2;
}

}  // namespace ksb::oracle
