#pragma once

#include <string>
#include <vector>

#include "vamod/poly.hpp"

namespace vamod {

// Expression parser for the text forms accepted on the command line and in
// JSON artifacts.  Supported syntax: integer literals, '/', '+', '-', '*',
// '^' with a nonnegative integer exponent, parentheses, the imaginary unit
// 'i', 'sqrt(<constant>)', and the variable names listed per entry point.
// Division is only defined by nonzero constants.

// No variables allowed.  Accepts everything FieldScalar::str() emits.
FieldScalar parse_scalar(const std::string& text);

// Polynomial in the single variable `var` (default "s").  The name "Z" is
// rejected here so operator polynomials and base-field polynomials cannot
// be mixed up silently.
Poly parse_poly(const std::string& text, const std::string& var = "s");

// Polynomial in "Z" whose coefficients are polynomials in "s".  Returns the
// dense coefficient list indexed by Z-degree (size >= 1).
std::vector<Poly> parse_zpoly(const std::string& text);

} // namespace vamod
