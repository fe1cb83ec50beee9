#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "recur/catalog.hpp"

namespace recur {

struct RuleReport {
  std::string id;
  std::string case_label;
  int samples = 0;
  bool pass = false;
  std::string detail;  // first failing instantiation, when any
};

struct SelftestReport {
  std::vector<RuleReport> per_rule;
  int passed = 0;
  int total = 0;

  bool ok() const { return passed == total; }
};

/// Randomized instantiation of every catalog rule with bases built from
/// rational roots in the rule's confluence pattern and random exponents
/// outside the finite bad set; asserts a zero relation residual each time.
/// Deterministic for a given seed. rule_filter empty = all rules.
SelftestReport selftest_catalog(const Catalog& cat, int samples, std::uint64_t seed,
                                const std::vector<std::string>& rule_filter = {});

/// A random valid instantiation honoring the rule's degeneracy case (shared
/// with tests that need sample integrands per case).
Integrand sample_integrand_for_case(FormTag form, const std::string& case_label,
                                    CofShape cof, TranscKind t1, std::uint64_t seed);

}  // namespace recur
