#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "recur/expr.hpp"
#include "recur/integrand.hpp"

namespace recur {

enum class CofShape { None, AB, ABC };

inline int cof_shape_degree(CofShape s) {
  switch (s) {
    case CofShape::None: return 0;
    case CofShape::AB: return 1;
    case CofShape::ABC: return 2;
  }
  return 0;
}

/// One encoded recurrence relation. Written k1*INT(f1) + INT(f2) + G = 0:
/// k1 multiplies the integral of the plain-exponent integrand, i2 is the
/// partner's signed cofactor polynomial at exponents shifted by `shift`, and
/// the alg pieces are the signed non-integral terms at their own shifts.
struct Rule {
  std::string id;          // "8B.1" (subsection label + ordinal)
  int section = 0;         // 1..12
  FormTag form;
  std::string case_label;  // "8B", "11E-3", ...
  CofShape cof = CofShape::None;

  TranscKind t1 = TranscKind::Exp;    // transcendental kind of f1
  TranscKind t2 = TranscKind::Exp;    // transcendental kind of f2

  std::vector<int> shift;  // per slot, in {-1, 0, +1}

  std::vector<std::pair<std::string, ExprPtr>> vanish;  // must evaluate to 0
  std::vector<std::pair<std::string, ExprPtr>> guards;  // must evaluate nonzero

  std::string k1_text;
  ExprPtr k1;
  std::vector<std::tuple<std::string, std::string, ExprPtr>> locals;  // name, text, expr
  std::string i2_text;
  ExprPtr i2;

  struct AlgPiece {
    std::vector<int> shift;
    TranscKind kind = TranscKind::Exp;  // meaningful only for transc forms
    std::string text;
    ExprPtr mult;
  };
  std::vector<AlgPiece> alg;

  bool reversible = false;  // flagged "used backwards for its own inverse"
};

class Catalog {
 public:
  /// Parses the rule DSL; validates counts and template symbols.
  static Catalog load(const std::string& text);

  /// The embedded catalog (parsed once, shared).
  static const Catalog& builtin();

  const std::vector<Rule>& rules() const { return rules_; }
  const Rule* find(const std::string& id) const;
  std::vector<const Rule*> rules_for_case(FormTag form, const std::string& case_label) const;

  /// Serializes back to the DSL text (the export/import audit format).
  std::string export_text() const;

 private:
  std::vector<Rule> rules_;
  std::map<std::string, std::size_t> by_id_;
};

/// k1*f1 + f2 + d/dx(G) = 0 with concrete rational scalars; f1 is the given
/// integrand (its own cofactor folded in), f2 carries the instantiated
/// partner cofactor, G the liberated algebraic part (possibly several terms
/// for the cos/sin relations).
struct RelationInstance {
  const Rule* rule = nullptr;
  std::vector<std::size_t> slot_of;
  Rat k1;
  Integrand i1;
  Integrand i2;
  std::vector<AlgTerm> alg;
};

/// Instantiates `rule` on integrand `i` under the slot assignment. Checks the
/// rule's case conditions (GuardViolated on mismatch); does not check k1.
RelationInstance instantiate(const Rule& rule, const Integrand& i,
                             const std::vector<std::size_t>& slot_of);

/// Convenience overload using the profile's canonical assignment.
RelationInstance instantiate(const Rule& rule, const Integrand& i);

/// Catalog rules matching (form, case) that can move exponents in the wanted
/// directions (+1 raise, -1 lower, 0 don't care, per slot), solving for
/// either integral; rules usable in the direct solve order come first, each
/// group in catalog order. Throws NoRuleForCase when the case has no rules.
std::vector<const Rule*> rules_for(const Catalog& cat, FormTag form,
                                   const std::string& case_label,
                                   const std::vector<int>& want);

}  // namespace recur
