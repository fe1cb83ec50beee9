#pragma once

#include <map>
#include <memory>
#include <string>

#include "recur/poly.hpp"

namespace recur {

/// Expression tree over named rational symbols and the indeterminate x, in
/// the operator notation the relation listing uses: + - * / ^ and parentheses,
/// with ^ restricted to nonnegative integer powers and / to constant divisors.
struct Expr {
  enum class Kind { Num, Sym, Add, Sub, Mul, Div, Pow, Neg };
  Kind kind;
  Rat num;          // Kind::Num
  std::string sym;  // Kind::Sym
  std::shared_ptr<const Expr> lhs, rhs;
  unsigned power = 0;  // Kind::Pow
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Parses the template notation; throws Error(Internal) on malformed input
/// (templates are build-time data, so failures are defects, not user errors).
ExprPtr parse_template(const std::string& text);

/// Symbol environment for evaluation. Values are polynomials in x so one
/// evaluator serves scalar guards (degree-0 results) and the polynomial
/// coefficient templates (x bound to the indeterminate).
struct Env {
  std::map<std::string, Poly> vals;

  void set(const std::string& name, const Poly& v) { vals[name] = v; }
  void set(const std::string& name, const Rat& v) { vals[name] = Poly(v); }
};

Poly eval(const ExprPtr& e, const Env& env);

/// Evaluates an expression that must come out constant.
Rat eval_scalar(const ExprPtr& e, const Env& env);

std::string to_string(const ExprPtr& e);

}  // namespace recur
