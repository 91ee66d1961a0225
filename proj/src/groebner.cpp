#include "ksbound/groebner.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "ksbound/eigen_support.hpp"

namespace ksb {

MonomialOrder MonomialOrder::make(OrderKind kind, std::size_t dim) {
  MonomialOrder o;
  o.kind = kind;
  o.precedence.resize(dim);
  std::iota(o.precedence.begin(), o.precedence.end(), std::size_t{0});
  return o;
}

bool MonomialOrder::greater(const MultiIndex& a, const MultiIndex& b) const {
  if (kind != OrderKind::Lex) {
    const unsigned ta = a.total(), tb = b.total();
    if (ta != tb) return ta > tb;
  }
  if (kind == OrderKind::GRevLex) {
    // Smaller exponent in the least significant differing variable wins.
    for (auto it = precedence.rbegin(); it != precedence.rend(); ++it)
      if (a[*it] != b[*it]) return a[*it] < b[*it];
    return false;
  }
  for (std::size_t v : precedence)
    if (a[v] != b[v]) return a[v] > b[v];
  return false;
}

std::string MonomialOrder::name() const {
  switch (kind) {
    case OrderKind::GRevLex: return "grevlex";
    case OrderKind::Lex: return "lex";
    case OrderKind::GrLex: return "grlex";
  }
  return "?";
}

OrderKind parse_order_kind(const std::string& s) {
  if (s == "grevlex") return OrderKind::GRevLex;
  if (s == "lex") return OrderKind::Lex;
  if (s == "grlex") return OrderKind::GrLex;
  throw std::invalid_argument("unknown monomial order '" + s + "'");
}

namespace {

struct OrderGreater {
  const MonomialOrder* order;
  bool operator()(const MultiIndex& a, const MultiIndex& b) const { return order->greater(a, b); }
};

using OrderedTerms = std::map<MultiIndex, GaussianRational, OrderGreater>;

void check_order(const MonomialOrder& order, std::size_t dim) {
  require_same_dim(order.precedence.size(), dim);
}

}  // namespace

MultiIndex leading_monomial(const Polynomial& p, const MonomialOrder& order) {
  require(!p.is_zero(), "leading_monomial: zero polynomial");
  const MultiIndex* best = nullptr;
  for (const auto& [a, c] : p.terms())
    if (best == nullptr || order.greater(a, *best)) best = &a;
  return *best;
}

GaussianRational leading_coefficient(const Polynomial& p, const MonomialOrder& order) {
  return p.coefficient(leading_monomial(p, order));
}

Polynomial make_monic(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) return p;
  return p * (GaussianRational(1) / leading_coefficient(p, order));
}

Polynomial remove_content(const Polynomial& p) {
  if (p.is_zero()) return p;
  mpz_class den_lcm = 1;
  for (const auto& [a, c] : p.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.real().get_den_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.imag().get_den_mpz_t());
  }
  mpz_class num_gcd = 0;
  for (const auto& [a, c] : p.terms()) {
    mpz_class re = c.real().get_num() * (den_lcm / c.real().get_den());
    mpz_class im = c.imag().get_num() * (den_lcm / c.imag().get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), re.get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), im.get_mpz_t());
  }
  return p * GaussianRational(mpq_class(den_lcm, num_gcd));
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis, const MonomialOrder& order) {
  check_order(order, f.dimension());
  struct Divisor {
    MultiIndex lm;
    GaussianRational lc;
    const Polynomial* poly;
  };
  std::vector<Divisor> divisors;
  for (const auto& g : basis) {
    require_same_dim(g.dimension(), f.dimension());
    if (g.is_zero()) continue;
    MultiIndex lm = leading_monomial(g, order);
    divisors.push_back({lm, g.coefficient(lm), &g});
  }

  OrderedTerms work(OrderGreater{&order});
  for (const auto& [a, c] : f.terms()) work.emplace(a, c);
  Polynomial rem(f.dimension());

  while (!work.empty()) {
    auto top = work.begin();
    const MultiIndex t = top->first;
    const GaussianRational c = top->second;
    const Divisor* hit = nullptr;
    for (const auto& d : divisors)
      if (d.lm.divides(t)) {
        hit = &d;
        break;
      }
    if (hit == nullptr) {
      rem.add_term(t, c);
      work.erase(top);
      continue;
    }
    const MultiIndex shift = t - hit->lm;
    const GaussianRational factor = c / hit->lc;
    for (const auto& [a, gc] : hit->poly->terms()) {
      const MultiIndex m = a + shift;
      const GaussianRational delta = -(factor * gc);
      auto [it, inserted] = work.try_emplace(m, delta);
      if (!inserted) {
        it->second += delta;
        if (it->second.is_zero()) work.erase(it);
      }
    }
  }
  return rem;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  const MultiIndex lf = leading_monomial(f, order), lg = leading_monomial(g, order);
  const MultiIndex l = lcm(lf, lg);
  Polynomial a = multiply(Polynomial::monomial(l - lf, GaussianRational(1) / f.coefficient(lf)), f);
  Polynomial b = multiply(Polynomial::monomial(l - lg, GaussianRational(1) / g.coefficient(lg)), g);
  return a - b;
}

namespace {

/// Minimal + interreduced + monic, sorted by descending leading monomial.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> g, const MonomialOrder& order) {
  // Drop elements whose leading monomial is divisible by another's.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const MultiIndex li = leading_monomial(g[i], order);
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const MultiIndex lj = leading_monomial(g[j], order);
      // Equal leading monomials: keep the first occurrence only.
      if (lj.divides(li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(make_monic(g[i], order));
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const MultiIndex lm = leading_monomial(minimal[i], order);
    Polynomial tail = minimal[i] - Polynomial::monomial(lm);
    minimal[i] = Polynomial::monomial(lm) + reduce(tail, others, order);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.greater(leading_monomial(a, order), leading_monomial(b, order));
  });
  return minimal;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  require(!gens.empty(), "buchberger: empty generator list");
  const std::size_t dim = gens.front().dimension();
  check_order(order, dim);

  std::vector<Polynomial> g;
  for (const auto& p : gens) {
    require_same_dim(p.dimension(), dim);
    if (!p.is_zero()) g.push_back(remove_content(p));
  }
  GroebnerBasis out;
  out.order = order;
  out.reduced = true;
  if (g.empty()) {
    out.zero_ideal = true;
    return out;
  }

  std::vector<MultiIndex> lms;
  for (const auto& p : g) lms.push_back(leading_monomial(p, order));

  struct Pair {
    std::size_t i, j;
    MultiIndex lcm;
  };
  std::vector<Pair> pairs;
  auto add_pairs_for = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) pairs.push_back({i, k, lcm(lms[i], lms[k])});
  };
  for (std::size_t k = 1; k < g.size(); ++k) add_pairs_for(k);

  while (!pairs.empty()) {
    // Normal strategy: process the pair with the smallest lcm first.
    auto it = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      return order.greater(b.lcm, a.lcm);
    });
    const Pair pr = *it;
    pairs.erase(it);
    if (coprime(lms[pr.i], lms[pr.j])) continue;  // Buchberger's first criterion
    Polynomial r = reduce(s_polynomial(g[pr.i], g[pr.j], order), g, order);
    if (r.is_zero()) continue;
    g.push_back(remove_content(r));
    lms.push_back(leading_monomial(g.back(), order));
    add_pairs_for(g.size() - 1);
  }

  out.generators = reduce_basis(std::move(g), order);
  return out;
}

VarietyVerdict variety_verdict(const GroebnerBasis& gb) {
  VarietyVerdict v;
  const std::size_t dim = gb.order.precedence.size();
  for (std::size_t j = 0; j < dim; ++j) {
    bool found = false;
    for (const auto& g : gb.generators) {
      const MultiIndex lm = leading_monomial(g, gb.order);
      // x_j^N, N >= 0 (a constant leading term covers every variable).
      if (lm.total() == lm[j]) {
        found = true;
        break;
      }
    }
    if (!found) v.missing_pure_power_variables.push_back(j);
  }
  v.only_origin = v.missing_pure_power_variables.empty();
  return v;
}

VarietyVerdict variety_only_origin(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  require(!gens.empty(), "variety_only_origin: empty generator list");
  for (const auto& p : gens)
    require(homogeneous_degree(p).homogeneous, "variety_only_origin: generators must be homogeneous");
  const GroebnerBasis gb = buchberger(gens, order);
  require(!gb.zero_ideal, "variety_only_origin: all generators are zero");
  return variety_verdict(gb);
}

unsigned gradient_rank(const Polynomial& p) {
  const unsigned k = require_homogeneous(p, "gradient_rank");
  require(k >= 1, "gradient_rank: degree must be at least 1");
  const std::size_t d = p.dimension();
  const auto level = derivative_level(conjugate_star(p), k - 1);
  ExactMatrix m(static_cast<Eigen::Index>(level.size()), static_cast<Eigen::Index>(d));
  for (std::size_t r = 0; r < level.size(); ++r)
    for (std::size_t j = 0; j < d; ++j)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j)) =
          level[r].second.coefficient(MultiIndex::unit(d, j));
  return static_cast<unsigned>(exact_rank(std::move(m)));
}

bool is_amenable(const Polynomial& p) {
  const unsigned k = require_homogeneous(p, "is_amenable");
  require(k >= 1, "is_amenable: degree must be at least 1");
  const std::size_t d = p.dimension();
  std::vector<bool> covered(d, false);
  for (const auto& [alpha, lin] : derivative_level(p, k - 1)) {
    if (lin.size() != 1) continue;
    const MultiIndex& a = lin.terms().begin()->first;
    if (a.total() != 1) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (a[j] == 1) covered[j] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

Eigen::Index exact_rank(ExactMatrix m) {
  Eigen::Index rank = 0;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < rows; ++r)
      if (!m(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    m.row(rank).swap(m.row(pivot));
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      if (m(r, col).is_zero()) continue;
      const GaussianRational f = m(r, col) / m(rank, col);
      for (Eigen::Index c = col; c < cols; ++c) m(r, c) -= f * m(rank, c);
    }
    ++rank;
  }
  return rank;
}

bool is_hermitian(const ExactMatrix& a) {
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = i; j < a.cols(); ++j)
      if (a(i, j) != a(j, i).conj()) return false;
  return true;
}

bool ideals_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b, const MonomialOrder& order) {
  auto contained = [&](const std::vector<Polynomial>& gens, const std::vector<Polynomial>& in) {
    const GroebnerBasis gb = buchberger(in, order);
    for (const auto& g : gens)
      if (!reduce(g, gb.generators, order).is_zero()) return false;
    return true;
  };
  return contained(a, b) && contained(b, a);
}

}  // namespace ksb
