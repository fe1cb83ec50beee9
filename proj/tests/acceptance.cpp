// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "recur/engine.hpp"
#include "recur/errors.hpp"
#include "recur/parse.hpp"
#include "recur/printer.hpp"
#include "recur/selftest.hpp"
#include "recur/verify.hpp"

using namespace recur;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, what.c_str());
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- criterion 1: catalog cardinality ------------------------------------
void criterion1() {
  std::size_t n = Catalog::builtin().rules().size();
  report(1, n == 136, "catalog holds exactly 136 relations (found " +
                          std::to_string(n) + ")");
}

// ---- criterion 2: full randomized identity suite --------------------------
void criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  SelftestReport r = selftest_catalog(Catalog::builtin(), 25, 42);
  double dt = seconds_since(t0);
  std::string what = "selftest 25 samples seed 42: " + std::to_string(r.passed) + "/" +
                     std::to_string(r.total) + " zero residuals in " +
                     std::to_string(dt) + " s";
  report(2, r.ok() && r.total == 136 && dt < 60.0, what);
}

// ---- criterion 3: worked two-quadratic example, bit exact ------------------
void criterion3() {
  Integrand input = parse_expr("(1 - x + 3*x^2) * (1 + x + x^2)^(-2) * (1 - x + x^2)^(-1/2)");
  ReductionResult r = reduce(input, ReduceOptions{});
  bool ok = r.algebraic.size() == 1 && r.residuals.size() == 1;
  if (ok) {
    const AlgTerm& g = r.algebraic[0];
    ok = ok && g.weight * g.multiplier == parse_poly("1 + x");
    ok = ok && g.factors.size() == 2;
    ok = ok && g.factors[0].base == parse_poly("1 - x + x^2") &&
         g.factors[0].exponent == Rat(1, 2);
    ok = ok && g.factors[1].base == parse_poly("1 + x + x^2") &&
         g.factors[1].exponent == Rat(-1);
    const auto& [coeff, ig] = r.residuals[0];
    ok = ok && Poly(coeff) * ig.cofactor == parse_poly("3/2 - 1/2*x");
    ok = ok && ig.factors.size() == 2;
    ok = ok && ig.factors[0].base == parse_poly("1 - x + x^2") &&
         ig.factors[0].exponent == Rat(-1, 2);
    ok = ok && ig.factors[1].base == parse_poly("1 + x + x^2") &&
         ig.factors[1].exponent == Rat(-1);
    ok = ok && verify_result(input, r).ok;
  }
  report(3, ok,
         "reduction liberates (1+x)(1-x+x^2)^(1/2)(1+x+x^2)^(-1) and leaves "
         "1/2 INT((3-x)(1+x+x^2)^(-1)(1-x+x^2)^(-1/2))");
}

// ---- random integrand generation ------------------------------------------

struct Shape {
  FormTag form;
  const char* case_label;
  CofShape cof;
};

const std::vector<Shape>& shapes_of(FormTag tag) {
  static const std::vector<Shape> q2{{FormTag::Q2, "1", CofShape::None}};
  static const std::vector<Shape> c3{{FormTag::C3, "2A", CofShape::AB},
                                     {FormTag::C3, "2B", CofShape::None}};
  static const std::vector<Shape> q4{{FormTag::Q4, "3A", CofShape::ABC},
                                     {FormTag::Q4, "3B", CofShape::AB},
                                     {FormTag::Q4, "3C-1", CofShape::None},
                                     {FormTag::Q4, "3C-2", CofShape::None}};
  static const std::vector<Shape> ll{{FormTag::LL, "4", CofShape::None},
                                     {FormTag::LL, "4", CofShape::AB}};
  static const std::vector<Shape> el{{FormTag::EL, "5", CofShape::None},
                                     {FormTag::EL, "5", CofShape::AB}};
  static const std::vector<Shape> lq{{FormTag::LQ, "6A", CofShape::AB},
                                     {FormTag::LQ, "6B-1", CofShape::None},
                                     {FormTag::LQ, "6B-2", CofShape::None}};
  static const std::vector<Shape> eq{{FormTag::EQ, "7A", CofShape::AB},
                                     {FormTag::EQ, "7B", CofShape::None}};
  static const std::vector<Shape> qq{{FormTag::QQ, "8A", CofShape::ABC},
                                     {FormTag::QQ, "8B", CofShape::AB},
                                     {FormTag::QQ, "8C", CofShape::AB},
                                     {FormTag::QQ, "8D-1", CofShape::None},
                                     {FormTag::QQ, "8D-2", CofShape::None},
                                     {FormTag::QQ, "8D-3", CofShape::None}};
  static const std::vector<Shape> lll{{FormTag::LLL, "9A", CofShape::AB},
                                      {FormTag::LLL, "9B", CofShape::None}};
  static const std::vector<Shape> ell{{FormTag::ELL, "10A", CofShape::AB},
                                      {FormTag::ELL, "10B", CofShape::None}};
  static const std::vector<Shape> llq{{FormTag::LLQ, "11A", CofShape::ABC},
                                      {FormTag::LLQ, "11B", CofShape::AB},
                                      {FormTag::LLQ, "11C", CofShape::AB},
                                      {FormTag::LLQ, "11D", CofShape::AB},
                                      {FormTag::LLQ, "11E-1", CofShape::None},
                                      {FormTag::LLQ, "11E-2", CofShape::None},
                                      {FormTag::LLQ, "11E-3", CofShape::None},
                                      {FormTag::LLQ, "11E-4", CofShape::None}};
  static const std::vector<Shape> llll{{FormTag::LLLL, "12A", CofShape::ABC},
                                       {FormTag::LLLL, "12B", CofShape::AB},
                                       {FormTag::LLLL, "12C-1", CofShape::None},
                                       {FormTag::LLLL, "12C-2", CofShape::None}};
  switch (tag) {
    case FormTag::Q2: return q2;
    case FormTag::C3: return c3;
    case FormTag::Q4: return q4;
    case FormTag::LL: return ll;
    case FormTag::EL: return el;
    case FormTag::LQ: return lq;
    case FormTag::EQ: return eq;
    case FormTag::QQ: return qq;
    case FormTag::LLL: return lll;
    case FormTag::ELL: return ell;
    case FormTag::LLQ: return llq;
    case FormTag::LLLL: return llll;
  }
  return q2;
}

/// Integer and half-integer exponents in [-4, 4], excluding 0.
Rat small_exponent(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> halves(-8, 8);
  for (;;) {
    int h = halves(rng);
    if (h != 0) return Rat(h, 2);
  }
}

// ---- criterion 4: reduction soundness over all form classes ---------------
void criterion4() {
  const FormTag forms[] = {FormTag::Q2, FormTag::C3, FormTag::Q4,  FormTag::LL,
                           FormTag::EL, FormTag::LQ, FormTag::EQ,  FormTag::QQ,
                           FormTag::LLL, FormTag::ELL, FormTag::LLQ, FormTag::LLLL};
  const TranscKind kinds[] = {TranscKind::Exp, TranscKind::Cos, TranscKind::Sin};
  int verified = 0, obstructed = 0;
  bool ok = true;
  std::string what;
  for (FormTag form : forms) {
    const auto& shapes = shapes_of(form);
    std::mt19937_64 rng(0xC4 + static_cast<int>(form));
    int done = 0;
    for (std::uint64_t s = 0; done < 100 && s < 4000; ++s) {
      const Shape& shape = shapes[s % shapes.size()];
      Integrand ig = sample_integrand_for_case(shape.form, shape.case_label, shape.cof,
                                               kinds[s % 3],
                                               77000 + 1000 * s + static_cast<int>(form));
      for (auto& f : ig.factors) f.exponent = small_exponent(rng);
      Integrand input;
      try {
        input = normalize(ig);
        classify(input);
      } catch (const Error&) {
        continue;  // merged into an out-of-inventory shape; redraw
      }
      ReductionResult r;
      try {
        r = reduce(input, ReduceOptions{});
      } catch (const Error& e) {
        ok = false;
        what = "reduce failed on " + print_expr(input) + ": " + e.detail();
        break;
      }
      if (!verify_result(input, r).ok) {
        ok = false;
        what = "reconstruction failed on " + print_expr(input);
        break;
      }
      if (r.status == ReduceStatus::Terminal) {
        for (const auto& [coeff, res] : r.residuals)
          for (const PowerFactor& f : res.factors)
            if (!ReduceOptions{}.window.contains(f.exponent)) {
              ok = false;
              what = "terminal residual out of window on " + print_expr(input);
            }
      } else {
        ++obstructed;
      }
      ++verified;
      ++done;
    }
    if (!ok) break;
    if (done < 100) {
      ok = false;
      what = std::string("could not draw 100 integrands for ") + form_name(form);
      break;
    }
  }
  if (ok)
    what = std::to_string(verified) + " random reductions reconstruct exactly (" +
           std::to_string(obstructed) + " obstructed, identity holds for those too)";
  report(4, ok, what);
}

// ---- criterion 5: reversibility of the flagged relations ------------------
void criterion5() {
  bool ok = true;
  int checked = 0;
  std::string what;
  std::vector<std::size_t> identity;
  for (const Rule& rule : Catalog::builtin().rules()) {
    if (!rule.reversible) continue;
    identity.clear();
    for (std::size_t k = 0; k < rule.shift.size(); ++k) identity.push_back(k);
    int done = 0;
    for (std::uint64_t attempt = 0; attempt < 64 && done < 5; ++attempt) {
      Integrand ig = sample_integrand_for_case(rule.form, rule.case_label, rule.cof,
                                               rule.t1, 555000 + attempt * 131 + checked);
      RelationInstance inst;
      try {
        inst = instantiate(rule, ig, identity);
      } catch (const Error&) {
        continue;
      }
      if (inst.k1.is_zero() || inst.i2.cofactor.is_zero()) continue;
      Step fwd = apply_step(inst, 1);
      Step back = apply_step(inst, 2);
      // INT(f1) = A_f + s_f INT(f2), INT(f2) = A_b + s_b INT(f1):
      // the round trip requires s_f s_b = 1 and A_f + s_f A_b = 0.
      if (!(fwd.scale * back.scale == Rat(1))) {
        ok = false;
        what = "scales do not invert for rule " + rule.id;
        break;
      }
      ResidualAccumulator acc;  // the combined algebra must vanish identically
      for (AlgTerm g : fwd.alg_contribution) acc.add_algterm_derivative(g);
      for (AlgTerm g : back.alg_contribution) {
        g.weight *= fwd.scale;
        acc.add_algterm_derivative(g);
      }
      if (!acc.finish().ok()) {
        ok = false;
        what = "algebraic terms do not cancel for rule " + rule.id;
        break;
      }
      // and both directions must individually be exact steps
      if (!step_residual(inst.i1, fwd).ok() || !step_residual(inst.i2, back).ok()) {
        ok = false;
        what = "step identity fails for rule " + rule.id;
        break;
      }
      ++done;
    }
    if (!ok) break;
    if (done < 5) {
      ok = false;
      what = "no valid reversible samples for rule " + rule.id;
      break;
    }
    ++checked;
  }
  if (ok)
    what = std::to_string(checked) +
           " flagged relations round-trip with exactly cancelling algebra";
  report(5, ok && checked == 60, what);
}

// ---- criterion 6: degeneracy routing matrix --------------------------------
void criterion6() {
  struct Probe {
    FormTag form;
    const char* case_label;
    CofShape cof;
    const char* nondeg_rule;  // must raise GuardViolated on this input
  };
  const Probe probes[] = {
      {FormTag::C3, "2B", CofShape::None, "2A.1"},
      {FormTag::Q4, "3B", CofShape::AB, "3A.1"},
      {FormTag::Q4, "3C-1", CofShape::None, "3A.1"},
      {FormTag::Q4, "3C-2", CofShape::None, "3A.1"},
      {FormTag::LQ, "6B-1", CofShape::None, "6A.1"},
      {FormTag::LQ, "6B-2", CofShape::None, "6A.1"},
      {FormTag::EQ, "7B", CofShape::None, "7A.1"},
      {FormTag::QQ, "8B", CofShape::AB, "8A.1"},
      {FormTag::QQ, "8C", CofShape::AB, "8A.1"},
      {FormTag::QQ, "8D-1", CofShape::None, "8A.1"},
      {FormTag::QQ, "8D-2", CofShape::None, "8A.1"},
      {FormTag::QQ, "8D-3", CofShape::None, "8A.1"},
      {FormTag::LLL, "9B", CofShape::None, "9A.1"},
      {FormTag::ELL, "10B", CofShape::None, "10A.1"},
      {FormTag::LLQ, "11B", CofShape::AB, "11A.1"},
      {FormTag::LLQ, "11C", CofShape::AB, "11A.1"},
      {FormTag::LLQ, "11D", CofShape::AB, "11A.1"},
      {FormTag::LLQ, "11E-1", CofShape::None, "11A.1"},
      {FormTag::LLQ, "11E-2", CofShape::None, "11A.1"},
      {FormTag::LLQ, "11E-3", CofShape::None, "11A.1"},
      {FormTag::LLQ, "11E-4", CofShape::None, "11A.1"},
      {FormTag::LLLL, "12B", CofShape::AB, "12A.1"},
      {FormTag::LLLL, "12C-1", CofShape::None, "12A.1"},
      {FormTag::LLLL, "12C-2", CofShape::None, "12A.1"},
  };
  bool ok = true;
  int routed = 0;
  std::string what;
  for (const Probe& probe : probes) {
    for (std::uint64_t s = 0; s < 20 && ok; ++s) {
      Integrand ig = sample_integrand_for_case(probe.form, probe.case_label, probe.cof,
                                               TranscKind::Exp, 909000 + 37 * s + routed);
      Integrand n;
      try {
        n = normalize(ig);
      } catch (const Error&) {
        continue;
      }
      if (n.factors.size() != ig.factors.size()) continue;  // merged away
      DegeneracyProfile prof;
      try {
        prof = degeneracy_profile(n, form_tag_of(n));
      } catch (const Error& e) {
        ok = false;
        what = std::string("no case for a ") + probe.case_label +
               " construction: " + e.detail();
        break;
      }
      if (prof.case_label != probe.case_label) {
        ok = false;
        what = std::string("expected case ") + probe.case_label + ", routed to " +
               prof.case_label + " for " + print_expr(n);
        break;
      }
      // a nondegenerate relation must refuse this input
      const Rule* nondeg = Catalog::builtin().find(probe.nondeg_rule);
      try {
        std::vector<std::size_t> identity;
        for (std::size_t k = 0; k < ig.factors.size(); ++k) identity.push_back(k);
        instantiate(*nondeg, ig, identity);
        ok = false;
        what = std::string(probe.nondeg_rule) + " accepted a " + probe.case_label +
               " integrand";
      } catch (const Error& e) {
        if (e.code() != ErrorCode::GuardViolated) {
          ok = false;
          what = std::string("unexpected error from ") + probe.nondeg_rule + ": " +
                 e.detail();
        }
      }
      ++routed;
    }
    if (!ok) break;
  }
  if (ok)
    what = std::to_string(routed) +
           " constructed confluence patterns routed to exactly one case; "
           "nondegenerate relations refuse all of them";
  report(6, ok, what);
}

// ---- criterion 7: termination ----------------------------------------------
void criterion7() {
  bool ok = true;
  std::string what;
  std::mt19937_64 rng(0x70);
  std::uniform_int_distribution<int> mag(1, 50);
  std::uniform_int_distribution<int> kind(0, 2);
  const Window w;
  int done = 0;
  for (std::uint64_t s = 0; done < 1000 && s < 5000 && ok; ++s) {
    // single-chain draws: positive integer exponents only on single-factor forms
    const FormTag forms[] = {FormTag::Q2,  FormTag::C3,  FormTag::Q4, FormTag::LL,
                             FormTag::LQ,  FormTag::QQ,  FormTag::LLL,
                             FormTag::LLQ, FormTag::LLLL};
    FormTag form = forms[s % 9];
    const auto& shapes = shapes_of(form);
    const Shape& shape = shapes[s % shapes.size()];
    Integrand ig = sample_integrand_for_case(shape.form, shape.case_label,
                                             CofShape::None, TranscKind::Exp,
                                             313000 + 7 * s);
    bool single_factor = ig.factors.size() == 1;
    for (auto& f : ig.factors) {
      int m = mag(rng);
      switch (kind(rng)) {
        case 0: f.exponent = Rat(single_factor ? m : -m); break;
        case 1: f.exponent = Rat(-m); break;
        default: f.exponent = Rat(2 * m - 1, 2) * Rat(kind(rng) == 0 ? 1 : -1); break;
      }
    }
    Integrand input;
    try {
      input = normalize(ig);
      classify(input);
    } catch (const Error&) {
      continue;
    }
    long phi0 = potential(input, w);
    ReduceOptions opts;
    opts.max_steps = 2048;
    ReductionResult r;
    try {
      r = reduce(input, opts);
    } catch (const Error& e) {
      ok = false;
      what = "reduce failed on " + print_expr(input) + ": " + e.detail();
      break;
    }
    if (static_cast<long>(r.trace.size()) > phi0) {
      ok = false;
      what = "step count " + std::to_string(r.trace.size()) + " exceeds potential " +
             std::to_string(phi0) + " on " + print_expr(input);
      break;
    }
    // strictly decreasing potential along the chain
    long phi = phi0;
    for (const Step& step : r.trace) {
      if (step.next_vanishes) break;
      long next_phi = potential(normalize(step.next), w);
      if (next_phi >= phi) {
        ok = false;
        what = "potential did not decrease at rule " + step.rule_id + " on " +
               print_expr(input);
        break;
      }
      phi = next_phi;
    }
    if (!ok) break;
    // Reconstruction on every input is criterion 4's job (and is expensive at
    // depth 50); spot-check it here on the shallow draws.
    if (phi0 <= 12 && !verify_result(input, r).ok) {
      ok = false;
      what = "reconstruction failed on " + print_expr(input);
      break;
    }
    ++done;
  }
  if (ok && done < 1000) {
    ok = false;
    what = "generator exhausted before 1000 inputs";
  }

  auto t0 = std::chrono::steady_clock::now();
  ReductionResult deep = reduce(parse_expr("(1 + x^2)^(-50)"), ReduceOptions{});
  double dt = seconds_since(t0);
  if (ok && dt >= 1.0) {
    ok = false;
    what = "(1+x^2)^(-50) took " + std::to_string(dt) + " s";
  }
  if (ok && deep.trace.size() != 49) {
    ok = false;
    what = "(1+x^2)^(-50) expected 49 steps, took " + std::to_string(deep.trace.size());
  }
  if (ok)
    what = "1000 reductions within the potential bound, strictly decreasing; "
           "(1+x^2)^(-50) in " + std::to_string(dt) + " s";
  report(7, ok, what);
}

// ---- criterion 8: parser round-trip ----------------------------------------
void criterion8() {
  bool ok = true;
  std::string what;
  Integrand intro =
      parse_expr("(1 - x + 3*x^2) * (1 + x + x^2)^(-2) * (1 - x + x^2)^(-1/2)");
  if (classify(intro).tag != FormTag::QQ) {
    ok = false;
    what = "the two-quadratic example did not classify as QQ";
  }
  const TranscKind kinds[] = {TranscKind::Exp, TranscKind::Cos, TranscKind::Sin};
  const FormTag forms[] = {FormTag::Q2,  FormTag::C3, FormTag::Q4,  FormTag::LL,
                           FormTag::EL,  FormTag::LQ, FormTag::EQ,  FormTag::QQ,
                           FormTag::LLL, FormTag::ELL, FormTag::LLQ, FormTag::LLLL};
  int done = 0;
  for (std::uint64_t s = 0; ok && done < 1000 && s < 4000; ++s) {
    FormTag form = forms[s % 12];
    const auto& shapes = shapes_of(form);
    const Shape& shape = shapes[s % shapes.size()];
    Integrand ig = sample_integrand_for_case(shape.form, shape.case_label, shape.cof,
                                             kinds[s % 3], 47000 + 3 * s);
    Integrand n;
    try {
      n = normalize(ig);
    } catch (const Error&) {
      continue;
    }
    std::string text = print_expr(n);
    Integrand back;
    try {
      back = parse_expr(text);
    } catch (const Error& e) {
      ok = false;
      what = "parse failed on printed form " + text + ": " + e.detail();
      break;
    }
    if (!(back == n)) {
      ok = false;
      what = "round trip changed " + text;
      break;
    }
    ++done;
  }
  if (ok && done < 1000) {
    ok = false;
    what = "generator exhausted before 1000 integrands";
  }
  if (ok)
    what = "parse(print()) identity on 1000 generated integrands; example "
           "string classifies as QQ";
  report(8, ok, what);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  if (failures == 0) {
    std::printf("acceptance: all 8 criteria pass\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", failures);
  return 1;
}
