#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ksbound/polynomial.hpp"

namespace ksb {

/// Polynomial source text plus the ordered variable names that fix d.
struct PolyText {
  std::string source;
  std::vector<std::string> variables;
};

/// Syntax or semantic error, carrying the 0-based byte offset into the source.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::invalid_argument(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// x1..xd.
std::vector<std::string> default_variables(std::size_t dim);

/// Variable names used when none are given: x, y, z when the text only uses
/// those (d = index of the last one used, at least 1), otherwise x1..xn with
/// n the largest index mentioned.
std::vector<std::string> infer_variables(std::string_view text);

/// Grammar (whitespace-insensitive, `*` optional):
///   expr    := ['+'|'-'] term (('+'|'-') term)*
///   term    := factor (['*'] factor)*
///   factor  := primary ['^' uint]
///   primary := uint ['/' uint] | 'i' | ident | '(' expr ')'
/// With the default names x1..xd, the aliases x, y, z are accepted for d <= 3.
Polynomial parse_poly(const PolyText& text);
Polynomial parse_poly(std::string_view source, std::size_t dim);
/// Uses infer_variables.
Polynomial parse_poly(std::string_view source);

/// Parses a constant such as "3/2", "-i" or "(1-2i)".
GaussianRational parse_coefficient(std::string_view source);

/// Terms in descending graded-lex order, e.g. "x^2 - 3/2 x y + (1+2i) y^2".
/// Uses x, y, z for d <= 3 and x1..xd otherwise.
std::string format_poly(const Polynomial& p);
std::string format_poly(const Polynomial& p, const std::vector<std::string>& names);

}  // namespace ksb
