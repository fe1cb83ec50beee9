#pragma once

#include <string>

#include "recur/integrand.hpp"
#include "recur/parse.hpp"

namespace testutil {

inline recur::Poly P(const std::string& s) { return recur::parse_poly(s); }
inline recur::Integrand I(const std::string& s) { return recur::parse_expr(s); }
inline recur::Rat Q(const std::string& s) {
  auto r = recur::Rat::parse(s);
  REQUIRE(r);
  return *r;
}

}  // namespace testutil
