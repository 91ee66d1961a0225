#include "ksbound/apolar.hpp"

#include <vector>

namespace ksb {

GaussianRational apolar_inner(const Polynomial& p, const Polynomial& q) {
  require_same_dim(p.dimension(), q.dimension());
  GaussianRational s;
  // Iterate the smaller map and look up in the larger.
  const bool p_small = p.size() <= q.size();
  const Polynomial& a = p_small ? p : q;
  const Polynomial& b = p_small ? q : p;
  for (const auto& [alpha, ca] : a.terms()) {
    auto it = b.terms().find(alpha);
    if (it == b.terms().end()) continue;
    const GaussianRational& cp = p_small ? ca : it->second;
    const GaussianRational& cq = p_small ? it->second : ca;
    s += cp * cq.conj() * GaussianRational(mpq_class(alpha.factorial()));
  }
  return s;
}

mpq_class apolar_norm_sq(const Polynomial& p) {
  mpq_class s = 0;
  for (const auto& [alpha, c] : p.terms()) s += c.norm_sq() * mpq_class(alpha.factorial());
  return s;
}

mpq_class bombieri_norm_sq(const Polynomial& p) {
  const Homogeneity h = homogeneous_degree(p);
  require(h.homogeneous, "bombieri_norm_sq: polynomial must be homogeneous");
  if (p.is_zero()) return 0;
  return apolar_norm_sq(p) / mpq_class(factorial(h.degree));
}

Polynomial apply_diff_operator(const Polynomial& q, const Polynomial& f) {
  require_same_dim(q.dimension(), f.dimension());
  Polynomial r(f.dimension());
  for (const auto& [alpha, d] : q.terms()) r += diff(f, alpha) * d;
  return r;
}

namespace {

/// All gamma with gamma_j <= bound_j.
std::vector<MultiIndex> box_indices(const std::vector<unsigned>& bound) {
  std::vector<MultiIndex> out{MultiIndex(bound.size())};
  for (std::size_t j = 0; j < bound.size(); ++j) {
    std::vector<MultiIndex> next;
    for (const auto& g : out)
      for (unsigned v = 0; v <= bound[j]; ++v) {
        MultiIndex h = g;
        h[j] = v;
        next.push_back(std::move(h));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

mpq_class newman_shapiro_rhs(const Polynomial& p, const Polynomial& q) {
  require_same_dim(p.dimension(), q.dimension());
  const Polynomial ps = conjugate_star(p);
  std::vector<unsigned> bound(p.dimension());
  for (std::size_t j = 0; j < bound.size(); ++j) bound[j] = p.degree_in(j);
  mpq_class s = 0;
  for (const auto& gamma : box_indices(bound)) {
    const Polynomial dg = diff(ps, gamma);
    if (dg.is_zero()) continue;
    s += apolar_norm_sq(apply_diff_operator(dg, q)) / mpq_class(gamma.factorial());
  }
  return s;
}

mpq_class pairing_power_norm_sq(std::span<const GaussianRational> c, unsigned m) {
  mpq_class c2 = vector_norm_sq(c);
  mpq_class r(factorial(m));
  for (unsigned t = 0; t < m; ++t) r *= c2;
  return r;
}

mpq_class product_with_power_norm_sq(const Polynomial& p, std::span<const GaussianRational> c,
                                     unsigned m) {
  require_same_dim(p.dimension(), c.size());
  const unsigned k = require_homogeneous(p, "product_with_power_norm_sq");
  require(m >= k, "product_with_power_norm_sq: need m >= deg p");
  const mpq_class c2 = vector_norm_sq(c);
  require(sgn(c2) != 0, "product_with_power_norm_sq: c must be nonzero");

  std::vector<GaussianRational> cbar(c.begin(), c.end());
  for (auto& x : cbar) x = x.conj();
  const Polynomial ps = conjugate_star(p);
  const mpq_class mfact(factorial(m));

  mpq_class sum = 0;
  for (unsigned level = 0; level <= k; ++level) {
    // |c|^(2 level - 2k)
    mpq_class weight = 1;
    for (unsigned t = level; t < k; ++t) weight /= c2;
    const mpq_class denom_m(factorial(m - (k - level)));
    for (const auto& [alpha, d] : derivative_level(ps, level)) {
      if (d.is_zero()) continue;
      const mpq_class v = evaluate(d, cbar).norm_sq();
      if (sgn(v) == 0) continue;
      sum += mfact * v / (mpq_class(alpha.factorial()) * denom_m) * weight;
    }
  }
  return pairing_power_norm_sq(c, m) * sum;
}

BombieriCheck check_bombieri(const Polynomial& p, const Polynomial& q) {
  require(!p.is_zero() && !q.is_zero(), "check_bombieri: inputs must be nonzero");
  require(homogeneous_degree(p).homogeneous && homogeneous_degree(q).homogeneous,
          "check_bombieri: inputs must be homogeneous");
  BombieriCheck r;
  r.product_norm_sq = apolar_norm_sq(p * q);
  r.p_norm_sq = apolar_norm_sq(p);
  r.q_norm_sq = apolar_norm_sq(q);
  r.ratio = r.product_norm_sq / (r.p_norm_sq * r.q_norm_sq);
  r.holds = r.ratio >= 1;
  r.equality = r.ratio == 1;
  return r;
}

}  // namespace ksb
