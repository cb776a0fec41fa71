#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "canonlab/polyring/polynomial.hpp"

namespace canonlab {

/// Syntax or semantic error while reading polynomial text. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Reads text in the grammar
///
///   poly   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := coeff | var ['^' uint] | '(' poly ')'
///   coeff  := uint ['/' uint]
///   var    := 'x' uint
///
/// Whitespace is ignored. Throws ParseError on bad syntax, unknown variables
/// and zero denominators.
template <class K>
Polynomial<K> parse_poly(std::string_view text, const Ring<K>& ring);

/// Canonical text: terms in decreasing order, coefficients as "a" or "a/b",
/// unit coefficients and exponent 1 elided.
template <class K>
std::string to_string(const Polynomial<K>& f);

std::string monomial_text(const Monomial& m, const std::vector<std::string>& names);

}  // namespace canonlab
