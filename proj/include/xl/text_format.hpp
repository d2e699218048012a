#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "xl/polynomial.hpp"

namespace xl {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Grammar (whitespace ignored):
//   poly   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := integer | 'x' index ['^' integer]
// Variables are x1..xn (an underscore as in x_1 is accepted). "0" is the
// zero polynomial.
Polynomial parse_polynomial(std::string_view text, const PrimeField& field, std::size_t n);

/// Terms by descending degree as c*x1^a1*...*xn^an joined by " + ".
/// Exponent 1 and zero exponents are omitted; the coefficient is always printed.
std::string to_string(const Polynomial& poly);

// System files: a header line "p=<prime> n=<vars>" followed by one
// polynomial per line. Blank lines and lines starting with '#' are skipped.
PolySystem parse_system(std::istream& in);
PolySystem parse_system(std::string_view text);
std::string format_system(const PolySystem& system);

}  // namespace xl
