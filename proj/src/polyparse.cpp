#include "ksbound/polyparse.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace ksb {

namespace {

constexpr unsigned kMaxExponent = 100000;

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

const std::vector<std::string> kXyz = {"x", "y", "z"};

bool is_xyz_prefix(const std::vector<std::string>& names) {
  if (names.empty() || names.size() > 3) return false;
  return std::equal(names.begin(), names.end(), kXyz.begin());
}

class Parser {
 public:
  Parser(std::string_view src, const std::vector<std::string>& vars) : src_(src), vars_(vars) {
    const bool aliases = vars.size() <= 3 && (vars == default_variables(vars.size()) || is_xyz_prefix(vars));
    for (std::size_t j = 0; j < vars.size(); ++j) {
      if (vars[j] == "i") throw ParseError("'i' is reserved for the imaginary unit", 0);
      if (!index_.emplace(vars[j], j).second) throw ParseError("duplicate variable '" + vars[j] + "'", 0);
    }
    if (aliases)
      for (std::size_t j = 0; j < vars.size(); ++j) {
        index_.emplace(kXyz[j], j);
        index_.emplace("x" + std::to_string(j + 1), j);
      }
  }

  Polynomial parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    Polynomial p = expr();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  std::size_t dim() const { return vars_.size(); }

  Polynomial expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial t = term();
      if (c == '+')
        acc += t;
      else
        acc -= t;
    }
    return acc;
  }

  bool starts_primary() const {
    const char c = peek();
    return is_digit(c) || is_ident_start(c) || c == '(';
  }

  Polynomial term() {
    skip_ws();
    Polynomial acc = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (!starts_primary()) throw ParseError("expected factor after '*'", pos_);
      } else if (peek() == '/') {
        throw ParseError("division by a polynomial is not supported", pos_);
      } else if (!starts_primary()) {
        break;
      }
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    const std::size_t at = pos_;
    if (peek() == '-') throw ParseError("negative exponent", at);
    if (!is_digit(peek())) throw ParseError("expected nonnegative integer exponent", at);
    const mpz_class e = digits();
    if (peek() == '.' || peek() == '/') throw ParseError("fractional exponent", at);
    if (e > kMaxExponent) throw ParseError("exponent too large", at);
    return power(base, static_cast<unsigned>(e.get_ui()));
  }

  mpz_class digits() {
    const std::size_t start = pos_;
    while (is_digit(peek())) ++pos_;
    return mpz_class(std::string(src_.substr(start, pos_ - start)));
  }

  Polynomial primary() {
    skip_ws();
    const std::size_t at = pos_;
    const char c = peek();
    if (is_digit(c)) {
      mpq_class value(digits());
      if (peek() == '/') {
        ++pos_;
        if (!is_digit(peek())) throw ParseError("expected denominator", pos_);
        const mpz_class den = digits();
        if (den == 0) throw ParseError("zero denominator", at);
        value = mpq_class(value.get_num(), den);
        value.canonicalize();
      }
      if (peek() == '.') throw ParseError("decimal literals are not supported", pos_);
      return Polynomial::constant(dim(), GaussianRational(value));
    }
    if (is_ident_start(c)) {
      while (is_ident_char(peek())) ++pos_;
      const std::string name(src_.substr(at, pos_ - at));
      if (name == "i") return Polynomial::constant(dim(), GaussianRational::i());
      auto it = index_.find(name);
      if (it == index_.end()) throw ParseError("unknown variable '" + name + "'", at);
      return Polynomial::variable(dim(), it->second);
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (at_end()) throw ParseError("unexpected end of input", at);
    throw ParseError(std::string("unexpected '") + c + "'", at);
  }

  std::string_view src_;
  std::vector<std::string> vars_;
  std::map<std::string, std::size_t> index_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::string> default_variables(std::size_t dim) {
  std::vector<std::string> v;
  for (std::size_t j = 1; j <= dim; ++j) v.push_back("x" + std::to_string(j));
  return v;
}

std::vector<std::string> infer_variables(std::string_view text) {
  std::vector<std::string> seen;
  for (std::size_t p = 0; p < text.size();) {
    if (is_ident_start(text[p]) && (p == 0 || !is_ident_char(text[p - 1]))) {
      std::size_t q = p;
      while (q < text.size() && is_ident_char(text[q])) ++q;
      std::string name(text.substr(p, q - p));
      if (name != "i" && std::find(seen.begin(), seen.end(), name) == seen.end()) seen.push_back(name);
      p = q;
    } else {
      ++p;
    }
  }
  if (seen.empty()) return {"x"};
  std::size_t xyz_max = 0;
  bool all_xyz = true;
  for (const auto& s : seen) {
    auto it = std::find(kXyz.begin(), kXyz.end(), s);
    if (it == kXyz.end()) {
      all_xyz = false;
      break;
    }
    xyz_max = std::max<std::size_t>(xyz_max, static_cast<std::size_t>(it - kXyz.begin()) + 1);
  }
  if (all_xyz) return {kXyz.begin(), kXyz.begin() + static_cast<std::ptrdiff_t>(xyz_max)};
  std::size_t n_max = 0;
  bool all_indexed = true;
  for (const auto& s : seen) {
    if (s.size() < 2 || s[0] != 'x' || !std::all_of(s.begin() + 1, s.end(), is_digit) || s[1] == '0') {
      all_indexed = false;
      break;
    }
    n_max = std::max<std::size_t>(n_max, std::stoul(s.substr(1)));
  }
  if (all_indexed) return default_variables(n_max);
  return seen;
}

Polynomial parse_poly(const PolyText& text) {
  if (text.variables.empty()) throw ParseError("no variables given", 0);
  return Parser(text.source, text.variables).parse();
}

Polynomial parse_poly(std::string_view source, std::size_t dim) {
  return parse_poly(PolyText{std::string(source), default_variables(dim)});
}

Polynomial parse_poly(std::string_view source) {
  return parse_poly(PolyText{std::string(source), infer_variables(source)});
}

GaussianRational parse_coefficient(std::string_view source) {
  // Parse in one dimension with no usable variable name.
  Polynomial p = Parser(source, {"__coef"}).parse();
  if (p.total_degree() > 0) throw ParseError("expected a constant", 0);
  return p.coefficient(MultiIndex(1));
}

std::string format_poly(const Polynomial& p) {
  const std::size_t d = p.dimension();
  if (d <= 3) return format_poly(p, {kXyz.begin(), kXyz.begin() + static_cast<std::ptrdiff_t>(d)});
  return format_poly(p, default_variables(d));
}

std::string format_poly(const Polynomial& p, const std::vector<std::string>& names) {
  require_same_dim(p.dimension(), names.size());
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [alpha, c] : p.terms()) {
    std::string mono;
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      if (alpha[j] == 0) continue;
      if (!mono.empty()) mono += ' ';
      mono += names[j];
      if (alpha[j] > 1) mono += '^' + std::to_string(alpha[j]);
    }
    bool negative = false;
    std::string coef;
    if (c.is_real()) {
      negative = sgn(c.real()) < 0;
      const GaussianRational mag = negative ? -c : c;
      if (mono.empty() || mag != GaussianRational(1)) coef = mag.to_string();
    } else {
      coef = c.to_string();
    }
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    os << coef;
    if (!coef.empty() && !mono.empty()) os << ' ';
    os << mono;
    first = false;
  }
  return os.str();
}

}  // namespace ksb
