#pragma once

#include <string>
#include <vector>

#include "recur/catalog.hpp"
#include "recur/engine.hpp"
#include "recur/integrand.hpp"

namespace recur {

/// d/dx of an algebraic term, as coefficient polynomials over the common
/// power product with every exponent lowered by one (per factor present).
/// cos/sin terms differentiate into both kinds, so up to two entries.
struct DerivTerm {
  Poly coeff;
  std::vector<PowerFactor> factors;
  std::optional<TranscFactor> transc;
};
std::vector<DerivTerm> differentiate_algterm(const AlgTerm& g);

/// Polynomial numerators of a checked identity after factoring out the
/// common power product (one numerator per transcendental component).
/// The identity holds iff every numerator is the zero polynomial.
struct Residual {
  std::vector<std::pair<std::string, Poly>> numerators;

  bool ok() const {
    for (const auto& [name, p] : numerators)
      if (!p.is_zero()) return false;
    return true;
  }
};

/// Accumulates coefficient * product-of-powers * transc terms and clears
/// denominators over the componentwise-minimal exponents.
class ResidualAccumulator {
 public:
  void add(const Poly& coeff, const std::vector<PowerFactor>& factors,
           const std::optional<TranscFactor>& transc);
  void add_integrand(const Rat& coeff, const Integrand& i);
  void add_algterm_derivative(const AlgTerm& g);

  Residual finish() const;

 private:
  struct Term {
    Poly coeff;
    std::vector<std::pair<Poly, Rat>> powers;  // base -> exponent
    int component;                             // 0 plain/exp, 1 cos, 2 sin
  };
  std::vector<Term> terms_;
};

/// k1*f1 + f2 + d/dx(G) as a cleared polynomial numerator; zero iff the
/// relation instance is an exact identity.
Residual relation_residual(const RelationInstance& inst);

struct VerifyReport {
  bool ok;
  Residual residual;
};

/// Checks d/dx(sum of algebraic) + sum residuals - original == 0 exactly.
VerifyReport verify_result(const Integrand& original, const ReductionResult& r);

/// d/dx(alg) + scale * f_next - f_current == 0; the per-step soundness check.
Residual step_residual(const Integrand& current, const Step& step);

}  // namespace recur
