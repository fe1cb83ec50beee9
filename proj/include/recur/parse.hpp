#pragma once

#include <string>

#include "recur/integrand.hpp"

namespace recur {

/// Parses the factored product notation, e.g.
///   (1 - x + 3*x^2) * (1 + x + x^2)^(-2) * (1 - x + x^2)^(-1/2)
/// Bare parenthesized polynomials multiply the cofactor; an explicit
/// exponent makes a power factor. Exponents are rational literals, with
/// parentheses required for negatives and fractions. The result is
/// normalized.
Integrand parse_expr(const std::string& text, const std::string& var = "x");

/// Parses a bare polynomial in the same notation (used by the result-file
/// reader).
Poly parse_poly(const std::string& text, const std::string& var = "x");

}  // namespace recur
