#include "ksbound/multi_index.hpp"

#include <functional>

namespace ksb {

mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class MultiIndex::factorial() const {
  mpz_class r = 1;
  for (unsigned v : e_) r *= ksb::factorial(v);
  return r;
}

std::vector<MultiIndex> multi_indices_of_degree(std::size_t dim, unsigned n) {
  std::vector<MultiIndex> out;
  if (dim == 0) {
    if (n == 0) out.emplace_back(0);
    return out;
  }
  MultiIndex cur(dim);
  // Lex-descending enumeration: first coordinate takes the largest values first.
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t j, unsigned rest) {
    if (j + 1 == dim) {
      cur[j] = rest;
      out.push_back(cur);
      return;
    }
    for (unsigned v = rest + 1; v-- > 0;) {
      cur[j] = v;
      rec(j + 1, rest - v);
    }
  };
  rec(0, n);
  return out;
}

}  // namespace ksb
