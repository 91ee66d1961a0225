#include "ksbound/sphere_opt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

namespace ksb {

ComplexForm::ComplexForm(const Polynomial& p) : dim_(p.dimension()) {
  for (const auto& [a, c] : p.terms()) {
    terms_.push_back({a.exponents(), c.to_complex()});
    for (unsigned e : a.exponents()) max_exp_ = std::max(max_exp_, e);
  }
}

namespace {

/// powers[j][n] = z_j^n
std::vector<std::vector<std::complex<double>>> power_table(const Eigen::VectorXcd& z, unsigned max_exp) {
  std::vector<std::vector<std::complex<double>>> pw(static_cast<std::size_t>(z.size()),
                                                    std::vector<std::complex<double>>(max_exp + 1));
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    auto& row = pw[static_cast<std::size_t>(j)];
    row[0] = 1.0;
    for (unsigned n = 1; n <= max_exp; ++n) row[n] = row[n - 1] * z(j);
  }
  return pw;
}

}  // namespace

std::complex<double> ComplexForm::value(const Eigen::VectorXcd& z) const {
  require_same_dim(static_cast<std::size_t>(z.size()), dim_);
  const auto pw = power_table(z, max_exp_);
  std::complex<double> s = 0.0;
  for (const auto& t : terms_) {
    std::complex<double> v = t.coef;
    for (std::size_t j = 0; j < dim_; ++j) v *= pw[j][t.exp[j]];
    s += v;
  }
  return s;
}

std::complex<double> ComplexForm::value_and_gradient(const Eigen::VectorXcd& z, Eigen::VectorXcd& grad) const {
  require_same_dim(static_cast<std::size_t>(z.size()), dim_);
  const auto pw = power_table(z, max_exp_);
  grad = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim_));
  std::complex<double> s = 0.0;
  for (const auto& t : terms_) {
    std::complex<double> v = t.coef;
    for (std::size_t j = 0; j < dim_; ++j) v *= pw[j][t.exp[j]];
    s += v;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (t.exp[j] == 0) continue;
      std::complex<double> g = t.coef * static_cast<double>(t.exp[j]);
      for (std::size_t i = 0; i < dim_; ++i) g *= pw[i][i == j ? t.exp[i] - 1 : t.exp[i]];
      grad(static_cast<Eigen::Index>(j)) += g;
    }
  }
  return s;
}

Eigen::VectorXcd to_complex_point(const Eigen::VectorXd& x) {
  const Eigen::Index d = x.size() / 2;
  Eigen::VectorXcd z(d);
  for (Eigen::Index j = 0; j < d; ++j) z(j) = {x(j), x(d + j)};
  return z;
}

Eigen::VectorXd to_real_point(const Eigen::VectorXcd& z) {
  const Eigen::Index d = z.size();
  Eigen::VectorXd x(2 * d);
  x.head(d) = z.real();
  x.tail(d) = z.imag();
  return x;
}

SquaredModulusSum::SquaredModulusSum(const std::vector<Polynomial>& forms, double sign)
    : dim_(forms.empty() ? 0 : forms.front().dimension()), sign_(sign) {
  for (const auto& f : forms) {
    require_same_dim(f.dimension(), dim_);
    if (!f.is_zero()) forms_.emplace_back(f);
  }
}

double SquaredModulusSum::value(const Eigen::VectorXd& x) const {
  const Eigen::VectorXcd z = to_complex_point(x);
  double s = 0.0;
  for (const auto& f : forms_) s += std::norm(f.value(z));
  return sign_ * s;
}

double SquaredModulusSum::value_and_gradient(const Eigen::VectorXd& x, Eigen::VectorXd& grad) const {
  const Eigen::VectorXcd z = to_complex_point(x);
  const Eigen::Index d = static_cast<Eigen::Index>(dim_);
  grad = Eigen::VectorXd::Zero(2 * d);
  Eigen::VectorXcd g;
  double s = 0.0;
  for (const auto& f : forms_) {
    const std::complex<double> v = f.value_and_gradient(z, g);
    s += std::norm(v);
    // d|f|^2/du_j = 2 Re(conj f * f_j), d|f|^2/dv_j = -2 Im(conj f * f_j)
    const Eigen::VectorXcd w = std::conj(v) * g;
    grad.head(d) += 2.0 * w.real();
    grad.tail(d) -= 2.0 * w.imag();
  }
  grad *= sign_;
  return sign_ * s;
}

Eigen::VectorXd sphere_start(std::size_t dim, std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::VectorXd x(static_cast<Eigen::Index>(dim));
  do {
    for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = n(rng);
  } while (x.norm() < 1e-8);
  return x.normalized();
}

namespace {

Eigen::VectorXd tangent(const Eigen::VectorXd& x, const Eigen::VectorXd& g) { return g - x.dot(g) * x; }

// Riemannian Hessian P (H - (x.g) I) P on the tangent space, with H by
// central differences of the analytic gradient.
Eigen::MatrixXd sphere_hessian(const SphereObjective& f, const Eigen::VectorXd& x, const Eigen::VectorXd& g) {
  const Eigen::Index n = x.size();
  const double h = 1e-6;
  Eigen::MatrixXd hess(n, n);
  Eigen::VectorXd gp, gm;
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::VectorXd xp = x, xm = x;
    xp(i) += h;
    xm(i) -= h;
    f(xp, &gp);
    f(xm, &gm);
    hess.col(i) = (gp - gm) / (2 * h);
  }
  hess = 0.5 * (hess + hess.transpose()).eval();
  const Eigen::MatrixXd proj = Eigen::MatrixXd::Identity(n, n) - x * x.transpose();
  return proj * (hess - x.dot(g) * Eigen::MatrixXd::Identity(n, n)) * proj;
}

}  // namespace

SphereMinResult descend_on_sphere(const SphereObjective& f, Eigen::VectorXd x, double gradient_tolerance,
                                  int max_iterations) {
  x.normalize();
  Eigen::VectorXd g;
  double fx = f(x, &g);
  Eigen::VectorXd pg = tangent(x, g);
  double step = 1.0 / std::max(1.0, pg.norm());
  const double eps = std::numeric_limits<double>::epsilon();

  SphereMinResult r;
  r.starts_used = 1;
  double best = fx;
  int flat = 0;
  for (int it = 0; it < max_iterations && pg.norm() > gradient_tolerance; ++it) {
    const double gn = pg.norm();
    double t = step;
    Eigen::VectorXd xn, gnew;
    double fn = 0.0;
    bool accepted = false;
    for (; t > 1e-30; t *= 0.5) {
      xn = (x - t * pg).normalized();
      fn = f(xn, &gnew);
      if (fn <= fx - 1e-4 * t * gn * gn) {
        accepted = true;
        break;
      }
    }
    if (!accepted) break;  // no measurable descent left at double precision
    const Eigen::VectorXd pgn = tangent(xn, gnew);
    // Barzilai-Borwein initial step for the next iteration.
    const Eigen::VectorXd s = xn - x, y = pgn - pg;
    const double sy = std::abs(s.dot(y));
    step = sy > 0 ? std::clamp(s.squaredNorm() / sy, 1e-12, 1e12) : 2.0 * t;
    x = xn;
    fx = fn;
    g = gnew;
    pg = pgn;
    // Slow creep on a flat valley floor: hand over to the Newton polish.
    if (fx < best - 1e3 * eps * (1 + std::abs(best))) {
      best = fx;
      flat = 0;
    } else if (++flat >= 200) {
      break;
    }
  }

  // Newton polish on the tangent space; the pseudo-inverse absorbs the
  // phase direction, along which the objectives here are constant.
  const double slack = 16 * eps * (1 + std::abs(fx));
  for (int it = 0; it < 60 && pg.norm() > gradient_tolerance; ++it) {
    const Eigen::MatrixXd hess = sphere_hessian(f, x, g);
    Eigen::VectorXd dir = hess.completeOrthogonalDecomposition().solve(-pg);
    dir = tangent(x, dir);
    if (dir.dot(pg) >= 0) dir = -pg;
    bool accepted = false;
    for (double t = 1.0; t > 1e-12; t *= 0.5) {
      const Eigen::VectorXd xn = (x + t * dir).normalized();
      Eigen::VectorXd gn;
      const double fn = f(xn, &gn);
      const Eigen::VectorXd pgn = tangent(xn, gn);
      if (fn <= fx + slack && pgn.norm() < pg.norm()) {
        x = xn;
        fx = fn;
        g = gn;
        pg = pgn;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }

  r.argmin = x;
  r.minimum = fx;
  r.gradient_norm = pg.norm();
  r.converged = r.gradient_norm <= gradient_tolerance;
  return r;
}

std::vector<SphereMinResult> minimize_on_sphere_all(const SphereObjective& f, std::size_t dim,
                                                    const SphereMinOptions& opt) {
  require(opt.starts >= 1, "minimize_on_sphere: need at least one start");
  require(dim >= 1, "minimize_on_sphere: empty dimension");
  const std::size_t n = static_cast<std::size_t>(opt.starts);
  std::vector<SphereMinResult> results(n);
  unsigned workers = opt.threads != 0 ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < n; i += workers)
      results[i] = descend_on_sphere(f, sphere_start(dim, opt.seed, i), opt.gradient_tolerance, opt.max_iterations);
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  return results;
}

namespace {

bool better(const SphereMinResult& a, const SphereMinResult& b) {
  if (a.minimum != b.minimum) return a.minimum < b.minimum;
  for (Eigen::Index i = 0; i < a.argmin.size(); ++i) {
    const double ra = std::round(a.argmin(i) * 1e9), rb = std::round(b.argmin(i) * 1e9);
    if (ra != rb) return ra < rb;
  }
  return false;
}

}  // namespace

SphereMinResult minimize_on_sphere(const SphereObjective& f, std::size_t dim, const SphereMinOptions& opt) {
  const auto all = minimize_on_sphere_all(f, dim, opt);
  SphereMinResult best = all.front();
  for (const auto& r : all)
    if (better(r, best)) best = r;
  best.starts_used = opt.starts;
  return best;
}

namespace {

/// Stacked (Re g_i, Im g_i) residual and its Jacobian in (u, v).
double split_residual(const std::vector<ComplexForm>& forms, const Eigen::VectorXd& x, Eigen::VectorXd& res,
                      Eigen::MatrixXd& jac) {
  const Eigen::VectorXcd z = to_complex_point(x);
  const Eigen::Index d = z.size(), n = static_cast<Eigen::Index>(forms.size());
  res.resize(2 * n);
  jac.resize(2 * n, 2 * d);
  Eigen::VectorXcd g;
  for (Eigen::Index i = 0; i < n; ++i) {
    const std::complex<double> v = forms[static_cast<std::size_t>(i)].value_and_gradient(z, g);
    res(2 * i) = v.real();
    res(2 * i + 1) = v.imag();
    for (Eigen::Index j = 0; j < d; ++j) {
      jac(2 * i, j) = g(j).real();
      jac(2 * i + 1, j) = g(j).imag();
      jac(2 * i, d + j) = -g(j).imag();
      jac(2 * i + 1, d + j) = g(j).real();
    }
  }
  return res.squaredNorm();
}

Eigen::VectorXcd normalize_phase(Eigen::VectorXcd z) {
  z.normalize();
  Eigen::Index jmax = 0;
  for (Eigen::Index j = 1; j < z.size(); ++j)
    if (std::abs(z(j)) > std::abs(z(jmax)) + 1e-12) jmax = j;
  const std::complex<double> ph = std::conj(z(jmax)) / std::abs(z(jmax));
  return z * ph;
}

mpq_class best_rational(double x, long max_den) {
  // Continued-fraction convergents.
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int it = 0; it < 64; ++it) {
    const double a = std::floor(r);
    if (std::abs(a) > 1e15) break;
    const long ai = static_cast<long>(a);
    const long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    const double frac = r - a;
    if (std::abs(frac) < 1e-12) break;
    r = 1.0 / frac;
  }
  mpq_class q(h1, k1 == 0 ? 1 : k1);
  q.canonicalize();
  return q;
}

}  // namespace

std::optional<std::vector<GaussianRational>> rationalize_zero(const std::vector<Polynomial>& gens,
                                                              const Eigen::VectorXcd& point, long max_denominator) {
  if (point.size() == 0) return std::nullopt;
  Eigen::Index jmax = 0;
  for (Eigen::Index j = 1; j < point.size(); ++j)
    if (std::abs(point(j)) > std::abs(point(jmax))) jmax = j;
  if (std::abs(point(jmax)) == 0.0) return std::nullopt;
  const Eigen::VectorXcd scaled = point / point(jmax);
  std::vector<GaussianRational> c;
  for (Eigen::Index j = 0; j < scaled.size(); ++j) {
    const mpq_class re = best_rational(scaled(j).real(), max_denominator);
    const mpq_class im = best_rational(scaled(j).imag(), max_denominator);
    if (std::abs(re.get_d() - scaled(j).real()) > 1e-9 || std::abs(im.get_d() - scaled(j).imag()) > 1e-9)
      return std::nullopt;
    c.emplace_back(re, im);
  }
  for (const auto& g : gens)
    if (!evaluate(g, c).is_zero()) return std::nullopt;
  return c;
}

CommonZeroSearch find_common_zero(const std::vector<Polynomial>& gens, const SphereMinOptions& opt) {
  require(!gens.empty(), "find_common_zero: empty generator list");
  const std::size_t d = gens.front().dimension();
  for (const auto& g : gens) require_same_dim(g.dimension(), d);

  std::vector<ComplexForm> forms;
  std::vector<Polynomial> nonzero;
  for (const auto& g : gens)
    if (!g.is_zero()) {
      forms.emplace_back(g);
      nonzero.push_back(g);
    }

  CommonZeroSearch out;
  if (forms.empty()) {
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(d));
    e(0) = 1.0;
    out.zero = CommonZero{e, 0.0, std::vector<GaussianRational>(d)};
    (*out.zero->exact)[0] = 1;
    out.diagnostic = "all generators are zero";
    return out;
  }

  const SquaredModulusSum obj(nonzero);
  const SphereObjective f = [&](const Eigen::VectorXd& x, Eigen::VectorXd* g) {
    return g != nullptr ? obj.value_and_gradient(x, *g) : obj.value(x);
  };
  auto starts = minimize_on_sphere_all(f, 2 * d, opt);
  std::vector<std::size_t> order(starts.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return starts[a].minimum < starts[b].minimum; });

  out.best_residual = starts[order.front()].minimum;
  const std::size_t candidates = std::min<std::size_t>(order.size(), 8);
  for (std::size_t c = 0; c < candidates; ++c) {
    Eigen::VectorXd x = starts[order[c]].argmin;
    Eigen::VectorXd res;
    Eigen::MatrixXd jac;
    double r2 = split_residual(forms, x, res, jac);
    for (int it = 0; it < 200 && r2 > 1e-32; ++it) {
      Eigen::VectorXd step = jac.completeOrthogonalDecomposition().solve(-res);
      // Radial steps only rescale toward the origin, which is always a zero.
      step -= x.dot(step) * x;
      const Eigen::VectorXd xn = (x + step).normalized();
      Eigen::VectorXd rn;
      Eigen::MatrixXd jn;
      const double r2n = split_residual(forms, xn, rn, jn);
      if (!(r2n < r2)) break;
      x = xn;
      r2 = r2n;
      res = std::move(rn);
      jac = std::move(jn);
    }
    out.best_residual = std::min(out.best_residual, r2);
    if (r2 <= kCommonZeroThreshold) {
      CommonZero z;
      z.point = normalize_phase(to_complex_point(x));
      z.residual = obj.value(to_real_point(z.point));
      z.exact = rationalize_zero(nonzero, z.point);
      out.zero = std::move(z);
      return out;
    }
  }
  out.diagnostic = "no start converged below squared residual 1e-20 (best " + std::to_string(out.best_residual) + ")";
  return out;
}

}  // namespace ksb
