#pragma once

#include <string>

#include "recur/engine.hpp"
#include "recur/integrand.hpp"

namespace recur {

std::string print_poly(const Poly& p, const std::string& var = "x");
std::string print_expr(const Integrand& i, const std::string& var = "x");
std::string print_algterm(const AlgTerm& g, const std::string& var = "x");

/// JSON with exact "p/q" scalars throughout:
/// {"input","status","obstruction","algebraic","residuals","trace"}.
std::string serialize_result(const Integrand& input, const ReductionResult& r,
                             const std::string& var = "x");

/// Reads serialize_result output back (for verification against a saved run).
ReductionResult load_result(const std::string& json_text, const std::string& var = "x");

}  // namespace recur
