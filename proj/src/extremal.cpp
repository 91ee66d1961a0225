#include "ksbound/extremal.hpp"

#include <map>
#include <thread>

namespace ksb {

namespace {

constexpr mp_bitcnt_t kNormalizePrecision = 256;

unsigned worker_count(unsigned requested, std::size_t jobs) {
  const unsigned w = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(w, jobs)));
}

template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& body) {
  const unsigned workers = worker_count(threads, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) body(i);
    });
}

}  // namespace

HermitianGram gram_matrix(const Polynomial& p, unsigned m) {
  require_homogeneous(p, "gram_matrix");
  const std::size_t d = p.dimension();
  const mpz_class dim = binomial(m + static_cast<unsigned>(d) - 1, m);
  require(dim <= kMaxGramDimension, "gram_matrix: dimension " + dim.get_str() + " exceeds " +
                                        std::to_string(kMaxGramDimension));

  HermitianGram g;
  g.m = m;
  g.basis = multi_indices_of_degree(d, m);
  const auto n = static_cast<Eigen::Index>(g.basis.size());
  std::map<MultiIndex, Eigen::Index, GrlexGreater> index;
  for (Eigen::Index i = 0; i < n; ++i) index.emplace(g.basis[static_cast<std::size_t>(i)], i);

  g.raw = ExactMatrix::Constant(n, n, GaussianRational(0));
  // <p z^beta, p z^alpha> = sum over gamma + beta = delta + alpha of (gamma+beta)! c_gamma conj(c_delta)
  parallel_for(static_cast<std::size_t>(n), 0, [&](std::size_t col) {
    const MultiIndex& beta = g.basis[col];
    for (const auto& [gamma, cg] : p.terms()) {
      const MultiIndex mu = gamma + beta;
      const GaussianRational w = cg * GaussianRational(mpq_class(mu.factorial()));
      for (const auto& [delta, cd] : p.terms()) {
        if (!delta.divides(mu)) continue;
        auto it = index.find(mu - delta);
        if (it == index.end()) continue;
        g.raw(it->second, static_cast<Eigen::Index>(col)) += w * cd.conj();
      }
    }
  });
  return g;
}

Eigen::MatrixXcd HermitianGram::normalized() const {
  const auto n = static_cast<Eigen::Index>(basis.size());
  std::vector<mpf_class> root(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    root[i] = sqrt(mpf_class(basis[i].factorial(), kNormalizePrecision));
  Eigen::MatrixXcd a(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) {
      const GaussianRational& e = raw(i, j);
      if (e.is_zero()) {
        a(i, j) = 0.0;
        continue;
      }
      const mpf_class s = root[static_cast<std::size_t>(i)] * root[static_cast<std::size_t>(j)];
      const mpf_class re = mpf_class(e.real(), kNormalizePrecision) / s;
      const mpf_class im = mpf_class(e.imag(), kNormalizePrecision) / s;
      a(i, j) = {re.get_d(), im.get_d()};
    }
  return a;
}

Eigen::MatrixXd real_embedding(const Eigen::MatrixXcd& h) {
  const Eigen::Index n = h.rows();
  Eigen::MatrixXd r(2 * n, 2 * n);
  r.topLeftCorner(n, n) = h.real();
  r.topRightCorner(n, n) = -h.imag();
  r.bottomLeftCorner(n, n) = h.imag();
  r.bottomRightCorner(n, n) = h.real();
  return r;
}

HermitianEigen hermitian_eigen(const Eigen::MatrixXcd& h, double rel_tol) {
  require(h.rows() == h.cols(), "hermitian_eigen: matrix must be square");
  const Eigen::Index n = h.rows();
  const JacobiResult<double> j = jacobi_eigen<double>(real_embedding(h), rel_tol);

  std::vector<Eigen::VectorXcd> kept;
  std::vector<double> vals;
  std::vector<bool> used(static_cast<std::size_t>(2 * n), false);
  auto residual = [&](Eigen::Index c) {
    Eigen::VectorXcd w(n);
    w.real() = j.vectors.col(c).head(n);
    w.imag() = j.vectors.col(c).tail(n);
    for (const auto& q : kept) w -= q * q.dot(w);
    return w;
  };
  // Two passes: clear representatives first, then whatever is still missing.
  for (double threshold : {0.5, 1e-3}) {
    for (Eigen::Index c = 0; c < 2 * n && static_cast<Eigen::Index>(kept.size()) < n; ++c) {
      if (used[static_cast<std::size_t>(c)]) continue;
      const Eigen::VectorXcd w = residual(c);
      if (w.norm() <= threshold) continue;
      used[static_cast<std::size_t>(c)] = true;
      kept.push_back(w.normalized());
      vals.push_back(j.values(c));
    }
  }
  require(static_cast<Eigen::Index>(kept.size()) == n, "hermitian_eigen: could not separate eigenvectors");

  std::vector<std::size_t> order(kept.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return vals[a] < vals[b]; });
  HermitianEigen out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values(i) = vals[order[static_cast<std::size_t>(i)]];
    out.vectors.col(i) = kept[order[static_cast<std::size_t>(i)]];
  }
  out.sweeps = j.sweeps;
  return out;
}

SpectralRow extremal_ratios(const Polynomial& p, unsigned m) {
  const HermitianGram g = gram_matrix(p, m);
  const JacobiResult<double> j = jacobi_eigen<double>(real_embedding(g.normalized()), 1e-14);
  SpectralRow r;
  r.m = m;
  r.dimension = g.dimension();
  r.inf = std::sqrt(std::max(0.0, j.values(0)));
  r.sup = std::sqrt(std::max(0.0, j.values(j.values.size() - 1)));
  r.sweeps = j.sweeps;
  return r;
}

std::vector<SpectralRow> extremal_table(const Polynomial& p, const std::vector<unsigned>& ms, unsigned threads) {
  require_homogeneous(p, "extremal_table");
  std::vector<SpectralRow> rows(ms.size());
  parallel_for(ms.size(), threads, [&](std::size_t i) { rows[i] = extremal_ratios(p, ms[i]); });
  return rows;
}

double sup_on_sphere(const Polynomial& p, const SphereMinOptions& opt) {
  require(!p.is_zero(), "sup_on_sphere: polynomial must be nonzero");
  const SquaredModulusSum obj({p}, -1.0);
  const SphereObjective f = [&](const Eigen::VectorXd& x, Eigen::VectorXd* g) {
    return g != nullptr ? obj.value_and_gradient(x, *g) : obj.value(x);
  };
  return std::sqrt(std::max(0.0, -minimize_on_sphere(f, 2 * p.dimension(), opt).minimum));
}

double pinasco_ratio(double s_m, unsigned m, unsigned k) {
  double prod = 1.0;
  for (unsigned j = 1; j <= k; ++j) prod *= static_cast<double>(m + j);
  return s_m / std::sqrt(prod);
}

PinascoTable pinasco_table(const Polynomial& p, const std::vector<unsigned>& ms, const SphereMinOptions& opt) {
  const unsigned k = require_homogeneous(p, "pinasco_table");
  PinascoTable t;
  t.sup = sup_on_sphere(p, opt);
  for (const SpectralRow& row : extremal_table(p, ms, opt.threads))
    t.rows.push_back({row, pinasco_ratio(row.sup, row.m, k)});
  return t;
}

}  // namespace ksb
