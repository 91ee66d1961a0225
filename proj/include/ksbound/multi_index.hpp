#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <gmpxx.h>
#include <initializer_list>
#include <vector>

namespace ksb {

/// Exponent vector alpha in N^d.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t dim) : e_(dim, 0) {}
  MultiIndex(std::initializer_list<unsigned> e) : e_(e) {}
  explicit MultiIndex(std::vector<unsigned> e) : e_(std::move(e)) {}

  static MultiIndex unit(std::size_t dim, std::size_t j) {
    MultiIndex a(dim);
    a.e_[j] = 1;
    return a;
  }

  std::size_t size() const { return e_.size(); }
  unsigned operator[](std::size_t j) const { return e_[j]; }
  unsigned& operator[](std::size_t j) { return e_[j]; }
  const std::vector<unsigned>& exponents() const { return e_; }

  /// |alpha|
  unsigned total() const {
    unsigned s = 0;
    for (unsigned v : e_) s += v;
    return s;
  }
  /// alpha! as an exact big integer.
  mpz_class factorial() const;

  bool divides(const MultiIndex& b) const {
    for (std::size_t j = 0; j < e_.size(); ++j)
      if (e_[j] > b.e_[j]) return false;
    return true;
  }
  bool is_zero() const { return total() == 0; }

  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) {
    for (std::size_t j = 0; j < a.e_.size(); ++j) a.e_[j] += b.e_[j];
    return a;
  }
  /// Componentwise difference; requires b.divides(a).
  friend MultiIndex operator-(MultiIndex a, const MultiIndex& b) {
    for (std::size_t j = 0; j < a.e_.size(); ++j) a.e_[j] -= b.e_[j];
    return a;
  }
  friend MultiIndex lcm(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r = a;
    for (std::size_t j = 0; j < r.e_.size(); ++j) r.e_[j] = std::max(a.e_[j], b.e_[j]);
    return r;
  }
  friend bool coprime(const MultiIndex& a, const MultiIndex& b) {
    for (std::size_t j = 0; j < a.e_.size(); ++j)
      if (a.e_[j] != 0 && b.e_[j] != 0) return false;
    return true;
  }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e_ == b.e_; }
  friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return a.e_ != b.e_; }

 private:
  std::vector<unsigned> e_;
};

/// Graded-lexicographic "greater than": larger |alpha| first, ties broken
/// lexicographically with x1 most significant. Used as the storage order of
/// polynomial terms, so iteration runs in descending grlex order.
struct GrlexGreater {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    unsigned ta = a.total(), tb = b.total();
    if (ta != tb) return ta > tb;
    return a.exponents() > b.exponents();
  }
};

/// All alpha in N^d with |alpha| = n, in descending graded-lex order
/// (x1^n first). Count is binom(d+n-1, n).
std::vector<MultiIndex> multi_indices_of_degree(std::size_t dim, unsigned n);

/// Exact n!.
mpz_class factorial(unsigned n);
/// Exact binomial coefficient.
mpz_class binomial(unsigned n, unsigned k);

}  // namespace ksb
