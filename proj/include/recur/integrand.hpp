#pragma once

#include <optional>
#include <string>
#include <vector>

#include "recur/poly.hpp"

namespace recur {

/// A polynomial base (degree 1..4, nonzero leading coefficient) raised to a
/// constant rational exponent.
struct PowerFactor {
  Poly base;
  Rat exponent;

  bool operator==(const PowerFactor& o) const {
    return base == o.base && exponent == o.exponent;
  }
};

enum class TranscKind { Exp, Cos, Sin };

inline const char* transc_name(TranscKind k) {
  switch (k) {
    case TranscKind::Exp: return "exp";
    case TranscKind::Cos: return "cos";
    case TranscKind::Sin: return "sin";
  }
  return "?";
}

/// exp/cos/sin of a degree-1 polynomial argument.
struct TranscFactor {
  TranscKind kind;
  Poly arg;  // degree exactly 1

  bool operator==(const TranscFactor& o) const { return kind == o.kind && arg == o.arg; }
};

/// cofactor(x) * transc? * prod_i base_i^exponent_i
struct Integrand {
  Poly cofactor = Poly::one();
  std::optional<TranscFactor> transc;
  std::vector<PowerFactor> factors;

  bool operator==(const Integrand& o) const {
    return cofactor == o.cofactor && transc == o.transc && factors == o.factors;
  }
};

/// weight * multiplier(x) * prod_i base_i^exponent_i * transc?; one liberated
/// algebraic term of an antiderivative, differentiable in closed form.
struct AlgTerm {
  Rat weight = Rat(1);
  Poly multiplier = Poly::one();
  std::vector<PowerFactor> factors;
  std::optional<TranscFactor> transc;

  bool is_zero() const { return weight.is_zero() || multiplier.is_zero(); }
};

enum class FormTag { Q2, C3, Q4, LL, EL, LQ, EQ, QQ, LLL, ELL, LLQ, LLLL };

const char* form_name(FormTag t);
std::optional<FormTag> form_from_name(const std::string& s);

/// Result of degeneracy profiling: the case label, the slot assignment that
/// realizes it (slot index -> factor index), and the named guard values that
/// were evaluated to select it.
struct DegeneracyProfile {
  std::string case_label;
  std::vector<std::size_t> slot_of;
  std::vector<std::pair<std::string, Rat>> guard_values;
};

struct FormClass {
  FormTag tag;
  DegeneracyProfile profile;
};

/// Canonical ordering, zero-exponent removal, and proportional-base merging.
Integrand normalize(const Integrand& raw);

/// Form tag from the factor-degree multiset and transcendental presence;
/// rejects shapes outside the supported inventory and oversized cofactors.
FormTag form_tag_of(const Integrand& i);

/// Evaluates every guard the form's section defines and selects the unique
/// matching case, most degenerate first.
DegeneracyProfile degeneracy_profile(const Integrand& i, FormTag tag);

/// form_tag_of + cofactor-degree cap + degeneracy_profile.
FormClass classify(const Integrand& i);

/// Maximum cofactor degree the relations of (form, case) accept directly.
int case_cofactor_cap(FormTag tag, const std::string& case_label);

/// Maximum cofactor degree classify accepts for the form (what some case of
/// the form supports, or what cofactor absorption through a linear factor can
/// bridge).
int form_cofactor_cap(FormTag tag);

/// All degree-preserving permutations of the factor list (slot index ->
/// factor index), lexicographically ordered; the interchangeable same-degree
/// slots of a form are filled deterministically from these.
std::vector<std::vector<std::size_t>> enumerate_slot_assignments(const Integrand& i);

}  // namespace recur
