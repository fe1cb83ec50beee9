#pragma once

#include <string>
#include <vector>

#include "recur/catalog.hpp"
#include "recur/integrand.hpp"

namespace recur {

/// Target interval (lo, hi] for every factor exponent; must span at least a
/// unit so every exponent has a representative reachable by unit shifts.
struct Window {
  Rat lo = Rat(-1);
  Rat hi = Rat(0);

  bool contains(const Rat& e) const { return lo < e && e <= hi; }
  /// Unit steps needed to bring e inside (the reduction potential of one
  /// exponent).
  long dist(const Rat& e) const;
};

struct ReduceOptions {
  Window window;
  int max_steps = 512;
};

/// One relation application: INT(current) = alg_contribution +
/// scale * INT(next), exactly.
struct Step {
  std::string rule_id;
  int solve_for = 1;
  Rat scale;
  std::vector<AlgTerm> alg_contribution;
  Integrand next;
  bool next_vanishes = false;  // partner integrand evaluated to zero
};

enum class ReduceStatus { Terminal, Obstructed };

struct ReductionResult {
  std::vector<AlgTerm> algebraic;
  std::vector<std::pair<Rat, Integrand>> residuals;
  std::vector<Step> trace;
  ReduceStatus status = ReduceStatus::Terminal;
  std::string obstruction;  // blocking exponent combinations, when obstructed
};

/// Solves the instantiated relation for one of its two integrals.
/// solve_for = 1: current is f1, next is f2. solve_for = 2: the reverse.
/// Requires k1 != 0 either way (SolvedCoefficientZero).
Step apply_step(const RelationInstance& inst, int solve_for);

/// Rewrites a nonconstant cofactor in the shifted-power basis of the first
/// linear factor, splitting the integrand into <= 3 constant-cofactor
/// integrands of the same form. NoLinearFactor when no degree-1 base exists.
std::vector<std::pair<Rat, Integrand>> absorb_cofactor(const Integrand& i);

/// Sum over factors of the window distance of their exponents.
long potential(const Integrand& i, const Window& w);

/// Drives every factor exponent into the window by repeated relation steps,
/// greedily taking the candidate with the largest potential decrease
/// (catalog order, then slot assignment, then solve direction break ties).
ReductionResult reduce(const Integrand& input, const ReduceOptions& opts,
                       const Catalog& cat = Catalog::builtin());

}  // namespace recur
