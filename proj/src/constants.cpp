#include "ksbound/constants.hpp"

#include <cmath>

#include "ksbound/apolar.hpp"

namespace ksb {

namespace {

unsigned check_level(const Polynomial& p, unsigned rho, const char* what) {
  const unsigned k = require_homogeneous(p, what);
  require(rho >= 1 && rho < k, std::string(what) + ": need 1 <= rho < deg p");
  return k;
}

mpq_class pow_q(const mpq_class& x, unsigned n) {
  mpq_class r = 1;
  for (unsigned i = 0; i < n; ++i) r *= x;
  return r;
}

void require_exact_vanishing(const Polynomial& p, unsigned rho, std::span<const GaussianRational> c,
                             const char* what) {
  require_same_dim(p.dimension(), c.size());
  require(sgn(vector_norm_sq(c)) != 0, std::string(what) + ": witness must be nonzero");
  for (const auto& [alpha, d] : derivative_level(p, rho))
    require(evaluate(d, c).is_zero(),
            std::string(what) + ": level-" + std::to_string(rho) + " derivatives do not all vanish at the witness");
}

}  // namespace

SphereMinResult sphere_min_sum_sq(const Polynomial& p, unsigned rho, const SphereMinOptions& opt) {
  check_level(p, rho, "sphere_min_sum_sq");
  const SquaredModulusSum obj(derivative_system(p, rho));
  const SphereObjective f = [&](const Eigen::VectorXd& x, Eigen::VectorXd* g) {
    return g != nullptr ? obj.value_and_gradient(x, *g) : obj.value(x);
  };
  return minimize_on_sphere(f, 2 * p.dimension(), opt);
}

C1Result c1_constant(const Polynomial& p, unsigned rho, const SphereMinOptions& opt, const MonomialOrder* order) {
  const unsigned k = check_level(p, rho, "c1_constant");
  const std::size_t d = p.dimension();
  const MonomialOrder o = order != nullptr ? *order : MonomialOrder::grevlex(d);
  C1Result r;
  r.level_only_origin = variety_only_origin(derivative_system(p, rho), o).only_origin;
  r.sphere = sphere_min_sum_sq(p, rho, opt);
  if (!r.level_only_origin) {
    r.value = 0.0;
    r.diagnostic = "level-" + std::to_string(rho) + " derivatives have a common nonzero zero; C1 is 0";
    return r;
  }
  const double count = binomial(static_cast<unsigned>(d) + rho - 1, rho).get_d();
  r.value = std::pow(static_cast<double>(k), -static_cast<double>(rho)) / std::sqrt(count) *
            std::sqrt(std::max(0.0, r.sphere.minimum));
  return r;
}

C2Exact c2_constant_exact(const Polynomial& p, unsigned rho, std::span<const GaussianRational> c) {
  const unsigned k = check_level(p, rho, "c2_constant");
  require_exact_vanishing(p, rho, c, "c2_constant");
  const mpq_class c2 = vector_norm_sq(c);
  std::vector<GaussianRational> cbar;
  for (const auto& x : c) cbar.push_back(x.conj());
  const Polynomial ps = conjugate_star(p);
  C2Exact out;
  out.squared = 0;
  for (unsigned level = rho + 1; level <= k; ++level) {
    const mpq_class weight = 1 / pow_q(c2, k - level);
    for (const auto& [alpha, d] : derivative_level(ps, level))
      out.squared += evaluate(d, cbar).norm_sq() / mpq_class(alpha.factorial()) * weight;
  }
  out.value = std::sqrt(out.squared.get_d());
  return out;
}

double c2_constant(const Polynomial& p, unsigned rho, std::span<const std::complex<double>> c) {
  const unsigned k = check_level(p, rho, "c2_constant");
  require_same_dim(p.dimension(), c.size());
  const Eigen::VectorXcd z = Eigen::Map<const Eigen::VectorXcd>(c.data(), static_cast<Eigen::Index>(c.size()));
  require(std::abs(z.norm() - 1.0) <= 1e-12, "c2_constant: witness must be a unit vector");
  double residual = 0.0;
  for (const auto& d : derivative_system(p, rho)) residual += std::norm(ComplexForm(d).value(z));
  require(residual <= 1e-16, "c2_constant: level-" + std::to_string(rho) +
                                 " derivatives do not vanish at the witness (squared residual " +
                                 std::to_string(residual) + ")");
  const Eigen::VectorXcd zbar = z.conjugate();
  const Polynomial ps = conjugate_star(p);
  double s = 0.0;
  for (unsigned level = rho + 1; level <= k; ++level)
    for (const auto& [alpha, d] : derivative_level(ps, level))
      s += std::norm(ComplexForm(d).value(zbar)) / alpha.factorial().get_d();
  return std::sqrt(s);
}

NecessityTable necessity_bound_check(const Polynomial& p, unsigned rho, std::span<const GaussianRational> c,
                                     unsigned m_from, unsigned m_to) {
  const unsigned k = check_level(p, rho, "necessity_bound_check");
  require(m_from >= k, "necessity_bound_check: need m >= deg p");
  require(m_from <= m_to, "necessity_bound_check: empty m range");
  NecessityTable t;
  t.c2 = c2_constant_exact(p, rho, c);
  for (unsigned m = m_from; m <= m_to; ++m) {
    NecessityRow row;
    row.m = m;
    row.ratio = product_with_power_norm_sq(p, c, m) / pairing_power_norm_sq(c, m);
    row.bound = t.c2.squared * pow_q(mpq_class(m), k - rho - 1);
    row.holds = row.ratio <= row.bound;
    if (!row.holds) ++t.violations;
    t.rows.push_back(std::move(row));
  }
  return t;
}

RealImagSplit split_real_imag(std::span<const GaussianRational> c, unsigned m) {
  const Polynomial f = power(pairing_form(c), m);
  Polynomial re = real_part(f);
  RealImagSplit s;
  s.full_norm_sq = apolar_norm_sq(f);
  const mpq_class re_norm = apolar_norm_sq(re);
  s.real_part = 2 * re_norm >= s.full_norm_sq;
  if (s.real_part) {
    s.q = std::move(re);
    s.q_norm_sq = re_norm;
  } else {
    s.q = imag_part(f);
    s.q_norm_sq = apolar_norm_sq(s.q);
  }
  return s;
}

RealWitness real_witness(const Polynomial& p, unsigned rho, std::span<const GaussianRational> c, unsigned m) {
  const unsigned k = check_level(p, rho, "real_witness");
  require(p.has_real_coefficients(), "real_witness: polynomial must have real coefficients");
  require(m >= k, "real_witness: need m >= deg p");
  const C2Exact c2 = c2_constant_exact(p, rho, c);

  RealImagSplit split = split_real_imag(c, m);
  RealWitness w;
  w.q = std::move(split.q);
  w.real_part = split.real_part;
  w.q_norm_sq = split.q_norm_sq;
  w.full_norm_sq = split.full_norm_sq;
  w.product_norm_sq = apolar_norm_sq(p * w.q);
  w.bound = 4 * c2.squared * w.q_norm_sq * pow_q(mpq_class(m), k - rho - 1);
  w.holds = w.product_norm_sq <= w.bound;
  return w;
}

}  // namespace ksb
