#pragma once

#include <vector>

#include "recur/expr.hpp"
#include "recur/integrand.hpp"

namespace recur {

/// Relation listing number (1..12) whose symbol conventions the form uses.
int section_of_form(FormTag tag);

/// Coefficient letters per power slot, in slot order: e.g. LLQ binds
/// (a,b) (c,d) (e,f,g). Transcendental forms bind the argument to (a,b) first.
struct SlotLayout {
  std::vector<std::vector<const char*>> slot_coeffs;
  std::vector<const char*> slot_exponents;  // "m","n","p","q" per slot
  bool transc = false;                      // arg coefficients bound to a,b
};

const SlotLayout& slot_layout(FormTag tag);

/// Section-level abbreviation definitions (ra, sa, ...) in evaluation order.
const std::vector<std::pair<const char*, const char*>>& section_abbrevs(int section);

/// Binds base coefficients of i's factors under the given slot assignment
/// (slot index -> factor index), the transcendental argument if present, and
/// the per-slot exponents. Does not bind x or the cofactor.
Env make_slot_env(const Integrand& i, FormTag tag, const std::vector<std::size_t>& slot_of);

/// Evaluates and adds the section's abbreviations to env.
void bind_abbrevs(Env& env, int section);

}  // namespace recur
