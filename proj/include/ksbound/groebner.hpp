#pragma once

#include <string>
#include <vector>

#include "ksbound/polynomial.hpp"

namespace ksb {

enum class OrderKind { GRevLex, Lex, GrLex };

/// Term order on N^d. `precedence[0]` is the most significant variable,
/// so the identity permutation gives x1 > x2 > ... > xd.
struct MonomialOrder {
  OrderKind kind = OrderKind::GRevLex;
  std::vector<std::size_t> precedence;

  static MonomialOrder make(OrderKind kind, std::size_t dim);
  static MonomialOrder grevlex(std::size_t dim) { return make(OrderKind::GRevLex, dim); }
  static MonomialOrder lex(std::size_t dim) { return make(OrderKind::Lex, dim); }
  static MonomialOrder grlex(std::size_t dim) { return make(OrderKind::GrLex, dim); }

  /// Strict a > b.
  bool greater(const MultiIndex& a, const MultiIndex& b) const;
  std::string name() const;
};

/// "grevlex", "lex" or "grlex"; throws std::invalid_argument otherwise.
OrderKind parse_order_kind(const std::string& s);

struct GroebnerBasis {
  std::vector<Polynomial> generators;  ///< sorted by descending leading monomial
  MonomialOrder order;
  bool reduced = false;
  /// All input generators were zero.
  bool zero_ideal = false;
};

struct VarietyVerdict {
  bool only_origin = false;
  /// Variables (0-based) with no pure power among the leading monomials.
  std::vector<std::size_t> missing_pure_power_variables;
};

MultiIndex leading_monomial(const Polynomial& p, const MonomialOrder& order);
GaussianRational leading_coefficient(const Polynomial& p, const MonomialOrder& order);

/// Divides p by its leading coefficient.
Polynomial make_monic(const Polynomial& p, const MonomialOrder& order);

/// Divides by the rational content so that the real and imaginary parts of
/// all coefficients become coprime integers. Leading sign is kept.
Polynomial remove_content(const Polynomial& p);

/// Full normal form of f: no term of the result is divisible by the leading
/// monomial of any (nonzero) basis element.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis, const MonomialOrder& order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Reduced Groebner basis of the ideal generated by gens.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order);

/// Zero set test for a homogeneous ideal: {0} iff every variable has a pure
/// power among the leading monomials of the reduced basis.
VarietyVerdict variety_only_origin(const std::vector<Polynomial>& gens, const MonomialOrder& order);
VarietyVerdict variety_verdict(const GroebnerBasis& gb);

/// Rank of the linear forms d^alpha p*, |alpha| = k - 1.
unsigned gradient_rank(const Polynomial& p);

/// Every coordinate z_j equals a nonzero multiple of some d^alpha p with |alpha| = k - 1.
bool is_amenable(const Polynomial& p);

/// Same ideal: each generating set reduces to zero modulo a Groebner basis of the other.
bool ideals_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b, const MonomialOrder& order);

}  // namespace ksb
