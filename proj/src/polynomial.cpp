#include "ksbound/polynomial.hpp"

#include <string>

namespace ksb {

Polynomial Polynomial::constant(std::size_t dim, GaussianRational c) {
  Polynomial p(dim);
  p.add_term(MultiIndex(dim), c);
  return p;
}

Polynomial Polynomial::monomial(MultiIndex alpha, GaussianRational c) {
  Polynomial p(alpha.size());
  p.add_term(alpha, c);
  return p;
}

Polynomial Polynomial::variable(std::size_t dim, std::size_t j) {
  return monomial(MultiIndex::unit(dim, j));
}

GaussianRational Polynomial::coefficient(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? GaussianRational{} : it->second;
}

void Polynomial::add_term(const MultiIndex& alpha, const GaussianRational& c) {
  require_same_dim(alpha.size(), dim_);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int Polynomial::total_degree() const {
  // Descending grlex storage: the first key has the largest |alpha|.
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.total());
}

unsigned Polynomial::degree_in(std::size_t j) const {
  unsigned m = 0;
  for (const auto& [a, c] : terms_) m = std::max(m, a[j]);
  return m;
}

bool Polynomial::has_real_coefficients() const {
  for (const auto& [a, c] : terms_)
    if (!c.is_real()) return false;
  return true;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_dim(dim_, o.dim_);
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_dim(dim_, o.dim_);
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [a, v] : r.terms_) v = -v;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_dim(a.dim_, b.dim_);
  Polynomial r(a.dim_);
  for (const auto& [x, cx] : a.terms_)
    for (const auto& [y, cy] : b.terms_) r.add_term(x + y, cx * cy);
  return r;
}

Polynomial multiply(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial power(const Polynomial& p, unsigned n) {
  Polynomial r = Polynomial::constant(p.dimension(), 1);
  Polynomial base = p;
  while (n > 0) {
    if (n & 1u) r = r * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return r;
}

Polynomial diff(const Polynomial& p, const MultiIndex& alpha) {
  require_same_dim(p.dimension(), alpha.size());
  Polynomial r(p.dimension());
  for (const auto& [beta, c] : p.terms()) {
    if (!alpha.divides(beta)) continue;
    // d^alpha z^beta = beta!/(beta-alpha)! z^(beta-alpha)
    mpz_class f = 1;
    for (std::size_t j = 0; j < beta.size(); ++j)
      for (unsigned t = 0; t < alpha[j]; ++t) f *= beta[j] - t;
    r.add_term(beta - alpha, c * GaussianRational(mpq_class(f)));
  }
  return r;
}

Polynomial diff(const Polynomial& p, std::size_t j) {
  return diff(p, MultiIndex::unit(p.dimension(), j));
}

Polynomial conjugate_star(const Polynomial& p) {
  Polynomial r(p.dimension());
  for (const auto& [a, c] : p.terms()) r.add_term(a, c.conj());
  return r;
}

Polynomial real_part(const Polynomial& p) {
  Polynomial r(p.dimension());
  for (const auto& [a, c] : p.terms()) r.add_term(a, GaussianRational(c.real()));
  return r;
}

Polynomial imag_part(const Polynomial& p) {
  Polynomial r(p.dimension());
  for (const auto& [a, c] : p.terms()) r.add_term(a, GaussianRational(c.imag()));
  return r;
}

namespace {

template <typename T>
T ipow(const T& x, unsigned n) {
  T r = T(1);
  for (unsigned t = 0; t < n; ++t) r *= x;
  return r;
}

}  // namespace

GaussianRational evaluate(const Polynomial& p, std::span<const GaussianRational> z) {
  require_same_dim(p.dimension(), z.size());
  GaussianRational sum;
  for (const auto& [a, c] : p.terms()) {
    GaussianRational t = c;
    for (std::size_t j = 0; j < a.size(); ++j) t *= ipow(z[j], a[j]);
    sum += t;
  }
  return sum;
}

std::complex<double> evaluate(const Polynomial& p, std::span<const std::complex<double>> z) {
  require_same_dim(p.dimension(), z.size());
  std::complex<double> sum = 0.0;
  for (const auto& [a, c] : p.terms()) {
    std::complex<double> t = c.to_complex();
    for (std::size_t j = 0; j < a.size(); ++j) t *= ipow(z[j], a[j]);
    sum += t;
  }
  return sum;
}

Homogeneity homogeneous_degree(const Polynomial& p) {
  if (p.is_zero()) return {true, true, 0};
  const unsigned m = static_cast<unsigned>(p.total_degree());
  for (const auto& [a, c] : p.terms())
    if (a.total() != m) return {false, false, 0};
  return {true, false, m};
}

unsigned require_homogeneous(const Polynomial& p, const char* what) {
  const Homogeneity h = homogeneous_degree(p);
  require(!p.is_zero(), std::string(what) + ": polynomial must be nonzero");
  require(h.homogeneous, std::string(what) + ": polynomial must be homogeneous");
  return h.degree;
}

std::vector<std::pair<MultiIndex, Polynomial>> derivative_level(const Polynomial& p, unsigned rho) {
  std::vector<std::pair<MultiIndex, Polynomial>> out;
  for (auto& alpha : multi_indices_of_degree(p.dimension(), rho)) {
    Polynomial d = diff(p, alpha);
    out.emplace_back(std::move(alpha), std::move(d));
  }
  return out;
}

std::vector<Polynomial> derivative_system(const Polynomial& p, unsigned rho) {
  std::vector<Polynomial> out;
  for (auto& [a, d] : derivative_level(p, rho)) out.push_back(std::move(d));
  return out;
}

Polynomial pairing_form(std::span<const GaussianRational> c) {
  Polynomial r(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) r.add_term(MultiIndex::unit(c.size(), j), c[j].conj());
  return r;
}

mpq_class vector_norm_sq(std::span<const GaussianRational> c) {
  mpq_class s = 0;
  for (const auto& x : c) s += x.norm_sq();
  return s;
}

}  // namespace ksb
