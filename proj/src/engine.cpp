#include "recur/engine.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "recur/errors.hpp"
#include "recur/symbols.hpp"

namespace recur {

long Window::dist(const Rat& e) const {
  if (hi - lo < Rat(1))
    fail(ErrorCode::Internal, "window must span at least one unit");
  if (contains(e)) return 0;
  if (e <= lo) {
    // smallest integer k with e + k > lo
    mpz_class k = (lo - e).floor() + 1;
    return mpz_get_si(k.get_mpz_t());
  }
  mpz_class k = (e - hi).ceil();
  return mpz_get_si(k.get_mpz_t());
}

long potential(const Integrand& i, const Window& w) {
  long phi = 0;
  for (const PowerFactor& f : i.factors) phi += w.dist(f.exponent);
  return phi;
}

Step apply_step(const RelationInstance& inst, int solve_for) {
  if (solve_for != 1 && solve_for != 2)
    fail(ErrorCode::Internal, "solve_for must be 1 or 2");
  if (inst.k1.is_zero())
    fail(ErrorCode::SolvedCoefficientZero,
         "k1 = 0 in rule " + inst.rule->id + "; pivot to another relation");

  Step step;
  step.rule_id = inst.rule->id;
  step.solve_for = solve_for;
  if (solve_for == 1) {
    // k1*INT(f1) = -INT(f2) - G
    Rat inv = Rat(-1) / inst.k1;
    step.scale = inv;
    step.next = inst.i2;
    step.next_vanishes = inst.i2.cofactor.is_zero();
    for (AlgTerm g : inst.alg) {
      g.weight *= inv;
      if (!g.is_zero()) step.alg_contribution.push_back(std::move(g));
    }
  } else {
    // INT(f2) = -k1*INT(f1) - G
    step.scale = -inst.k1;
    step.next = inst.i1;
    step.next_vanishes = inst.i1.cofactor.is_zero();
    for (AlgTerm g : inst.alg) {
      g.weight = -g.weight;
      if (!g.is_zero()) step.alg_contribution.push_back(std::move(g));
    }
  }
  return step;
}

std::vector<std::pair<Rat, Integrand>> absorb_cofactor(const Integrand& i) {
  if (i.cofactor.is_constant())
    fail(ErrorCode::Internal, "absorb_cofactor on constant cofactor");
  std::size_t linear = i.factors.size();
  for (std::size_t k = 0; k < i.factors.size(); ++k) {
    if (i.factors[k].base.degree() == 1) {
      linear = k;
      break;
    }
  }
  if (linear == i.factors.size())
    fail(ErrorCode::NoLinearFactor,
         "cofactor absorption needs a linear power factor");
  const Poly& L = i.factors[linear].base;

  // cofactor = sum_k c_k L^k by repeated division.
  std::vector<Rat> comps;
  Poly rest = i.cofactor;
  while (!rest.is_zero()) {
    auto [quot, rem] = Poly::divrem(rest, L);
    if (!rem.is_constant()) fail(ErrorCode::Internal, "linear division remainder");
    comps.push_back(rem.coeff(0));
    rest = quot;
  }

  std::vector<std::pair<Rat, Integrand>> out;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    if (comps[k].is_zero()) continue;
    Integrand part = i;
    part.cofactor = Poly::one();
    part.factors[linear].exponent += Rat(static_cast<long>(k));
    out.emplace_back(comps[k], std::move(part));
  }
  return out;
}

namespace {

/// Evaluates the rule's partner polynomial for a chosen cofactor binding,
/// running the local definitions under that binding.
Poly eval_partner(const Rule& rule, Env env, const Rat& A, const Rat& B, const Rat& C) {
  if (rule.cof != CofShape::None) {
    env.set("A", A);
    env.set("B", B);
    if (rule.cof == CofShape::ABC) env.set("C", C);
  }
  for (const auto& [name, text, e] : rule.locals) env.set(name, eval(e, env));
  env.set("x", Poly::x());
  return eval(rule.i2, env);
}

/// Solves the linear system sum_k u_k * basis_k = target for the cofactor
/// coefficients by exact elimination; empty on inconsistency. Free variables
/// are pinned to zero.
std::optional<std::vector<Rat>> solve_linear(std::vector<Poly> basis, const Poly& target) {
  int maxdeg = target.degree();
  for (const Poly& b : basis) maxdeg = std::max(maxdeg, b.degree());
  const std::size_t rows = static_cast<std::size_t>(maxdeg + 1);
  const std::size_t cols = basis.size();
  std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols + 1, Rat(0)));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = basis[c].coeff(r);
    m[r][cols] = target.coeff(r);
  }
  std::vector<std::size_t> pivot_of_col(cols, rows);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    Rat inv = Rat(1) / m[rank][c];
    for (auto& v : m[rank]) v *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      Rat f = m[r][c];
      for (std::size_t k = c; k <= cols; ++k) m[r][k] -= f * m[rank][k];
    }
    pivot_of_col[c] = rank;
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (!m[r][cols].is_zero()) return std::nullopt;
  std::vector<Rat> sol(cols, Rat(0));
  for (std::size_t c = 0; c < cols; ++c)
    if (pivot_of_col[c] < rows) sol[c] = m[pivot_of_col[c]][cols];
  return sol;
}

struct WorkItem {
  Rat coeff;
  Integrand ig;
};

struct Reducer {
  const Catalog& cat;
  ReduceOptions opts;
  ReductionResult result;
  int steps = 0;

  explicit Reducer(const Catalog& c, ReduceOptions o) : cat(c), opts(std::move(o)) {}

  void obstruct(const Rat& coeff, const Integrand& j, const std::string& why) {
    result.residuals.emplace_back(coeff, j);
    result.status = ReduceStatus::Obstructed;
    if (!result.obstruction.empty()) result.obstruction += "; ";
    result.obstruction += why;
  }

  void push_alg(const Rat& coeff, AlgTerm g) {
    g.weight *= coeff;
    if (!g.is_zero()) result.algebraic.push_back(std::move(g));
  }

  std::string exponents_of(const Integrand& j) const {
    std::string s = "(";
    for (std::size_t k = 0; k < j.factors.size(); ++k) {
      if (k) s += ", ";
      s += j.factors[k].exponent.str();
    }
    return s + ")";
  }

  /// Closed forms for shapes below the supported inventory: plain
  /// polynomials, polynomial * exp/cos/sin, and a single linear power.
  /// Returns false when the shape is not elementary.
  bool finish_elementary(const Rat& coeff, const Integrand& j) {
    if (j.factors.empty() && !j.transc) {
      AlgTerm g;
      g.multiplier = j.cofactor.antiderivative();
      push_alg(coeff, std::move(g));
      return true;
    }
    if (j.factors.empty() && j.transc) {
      const Poly& M = j.cofactor;
      const Rat b = j.transc->arg.coeff(1);
      if (b.is_zero()) return false;
      if (j.transc->kind == TranscKind::Exp) {
        Poly q;
        Poly d = M;
        Rat s(1);
        while (!d.is_zero()) {
          q += d * (s / b);
          d = d.derivative();
          s = -s / b;
        }
        AlgTerm g;
        g.multiplier = q;
        g.transc = j.transc;
        push_alg(coeff, std::move(g));
        return true;
      }
      // qs = sum_j (-1)^j M^(2j) / b^(2j+1); qc = qs'/b.
      Poly qs;
      Poly d = M;
      Rat s = Rat(1) / b;
      while (!d.is_zero()) {
        qs += d * s;
        d = d.derivative().derivative();
        s = -s / (b * b);
      }
      Poly qc = qs.derivative() * (Rat(1) / b);
      AlgTerm gc, gs;
      gc.transc = TranscFactor{TranscKind::Cos, j.transc->arg};
      gs.transc = TranscFactor{TranscKind::Sin, j.transc->arg};
      if (j.transc->kind == TranscKind::Cos) {
        gc.multiplier = qc;
        gs.multiplier = qs;
      } else {
        gc.multiplier = -qs;
        gs.multiplier = qc;
      }
      push_alg(coeff, std::move(gc));
      push_alg(coeff, std::move(gs));
      return true;
    }
    if (j.factors.size() == 1 && j.factors[0].base.degree() == 1 && !j.transc) {
      const Poly& L = j.factors[0].base;
      const Rat bb = L.coeff(1);
      const Rat nu = j.factors[0].exponent;
      Poly rest = j.cofactor;
      long k = 0;
      while (!rest.is_zero()) {
        auto [quot, rem] = Poly::divrem(rest, L);
        Rat ck = rem.coeff(0);
        Rat e = nu + Rat(k);
        if (!ck.is_zero()) {
          if (e == Rat(-1)) {
            Integrand logterm;
            logterm.factors.push_back(PowerFactor{L, Rat(-1)});
            obstruct(coeff * ck, logterm, "logarithmic terminal " + exponents_of(logterm));
          } else {
            AlgTerm g;
            g.weight = ck / ((e + Rat(1)) * bb);
            g.factors.push_back(PowerFactor{L, e + Rat(1)});
            push_alg(coeff, std::move(g));
          }
        }
        rest = quot;
        ++k;
      }
      return true;
    }
    return false;
  }

  /// One candidate application; empty when the candidate does not apply.
  std::optional<Step> try_candidate(const Integrand& j, const Rule& rule,
                                    const std::vector<std::size_t>& slot_of, int solve_for) {
    try {
      if (solve_for == 1) {
        RelationInstance inst = instantiate(rule, j, slot_of);
        if (inst.k1.is_zero()) return std::nullopt;
        return apply_step(inst, 1);
      }
      // Backward: the current integrand plays f2. Undo the shift, solve the
      // partner template for the f1 cofactor, and check the match exactly.
      Integrand i1 = j;
      for (std::size_t slot = 0; slot < rule.shift.size(); ++slot)
        i1.factors[slot_of[slot]].exponent -= Rat(rule.shift[slot]);
      const SlotLayout& layout = slot_layout(rule.form);
      if (layout.transc) {
        if (!j.transc || j.transc->kind != rule.t2) return std::nullopt;
        i1.transc = TranscFactor{rule.t1, j.transc->arg};
      }
      Env env = make_slot_env(i1, rule.form, slot_of);
      bind_abbrevs(env, rule.section);
      if (rule.cof == CofShape::None) {
        Poly unit = eval_partner(rule, env, Rat(0), Rat(0), Rat(0));
        if (!unit.is_constant() || unit.is_zero()) return std::nullopt;
        auto lambda = j.cofactor.ratio_to(unit);
        if (!lambda) return std::nullopt;
        i1.cofactor = Poly(*lambda);
      } else {
        std::vector<Poly> basis;
        basis.push_back(eval_partner(rule, env, Rat(1), Rat(0), Rat(0)));
        basis.push_back(eval_partner(rule, env, Rat(0), Rat(1), Rat(0)));
        if (rule.cof == CofShape::ABC)
          basis.push_back(eval_partner(rule, env, Rat(0), Rat(0), Rat(1)));
        auto sol = solve_linear(basis, j.cofactor);
        if (!sol) return std::nullopt;
        std::vector<Rat> coeffs = *sol;
        coeffs.resize(3, Rat(0));
        Poly cof({coeffs[0], coeffs[1], coeffs[2]});
        if (cof.is_zero()) return std::nullopt;
        i1.cofactor = cof;
      }
      RelationInstance inst = instantiate(rule, i1, slot_of);
      if (inst.k1.is_zero()) return std::nullopt;
      if (!(inst.i2.cofactor == j.cofactor))
        fail(ErrorCode::Internal, "backward solve mismatch for rule " + rule.id);
      return apply_step(inst, 2);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::GuardViolated ||
          e.code() == ErrorCode::SolvedCoefficientZero)
        return std::nullopt;
      throw;
    }
  }

  void run(const Integrand& input) {
    std::deque<WorkItem> work;
    work.push_back(WorkItem{Rat(1), input});

    while (!work.empty()) {
      WorkItem item = std::move(work.front());
      work.pop_front();
      Integrand j;
      try {
        j = normalize(item.ig);
      } catch (const Error& e) {
        obstruct(item.coeff, item.ig, e.detail());
        continue;
      }

      FormTag tag;
      DegeneracyProfile prof;
      try {
        tag = form_tag_of(j);
        prof = degeneracy_profile(j, tag);
      } catch (const Error& e) {
        if (finish_elementary(item.coeff, j)) continue;
        obstruct(item.coeff, j, e.detail() + " at exponents " + exponents_of(j));
        continue;
      }

      const long phi = potential(j, opts.window);
      if (phi == 0) {
        result.residuals.emplace_back(item.coeff, j);
        continue;
      }

      const int cap = case_cofactor_cap(tag, prof.case_label);
      if (j.cofactor.degree() > cap) {
        std::vector<std::pair<Rat, Integrand>> parts;
        try {
          parts = absorb_cofactor(j);
        } catch (const Error& e) {
          obstruct(item.coeff, j,
                   "case " + prof.case_label + " supports cofactor degree " +
                       std::to_string(cap) + " and " + e.detail());
          continue;
        }
        for (auto it = parts.rbegin(); it != parts.rend(); ++it)
          work.push_front(WorkItem{item.coeff * it->first, std::move(it->second)});
        continue;
      }

      // Candidate steps, largest potential decrease first; catalog order,
      // slot assignment order, then solve direction break ties.
      struct Candidate {
        long decrease;
        std::size_t rule_idx;
        std::size_t asg_idx;
        int solve_for;
        const Rule* rule;
        const std::vector<std::size_t>* asg;
      };
      std::vector<Candidate> cands;
      const auto assignments = enumerate_slot_assignments(j);
      const auto rules = cat.rules_for_case(tag, prof.case_label);
      for (std::size_t ri = 0; ri < rules.size(); ++ri) {
        const Rule& rule = *rules[ri];
        for (std::size_t ai = 0; ai < assignments.size(); ++ai) {
          for (int sf : {1, 2}) {
            if (slot_layout(tag).transc) {
              TranscKind need = sf == 1 ? rule.t1 : rule.t2;
              if (!j.transc || j.transc->kind != need) continue;
            }
            long nphi = 0;
            for (std::size_t slot = 0; slot < rule.shift.size(); ++slot) {
              Rat e = j.factors[assignments[ai][slot]].exponent;
              e += Rat(sf == 1 ? rule.shift[slot] : -rule.shift[slot]);
              nphi += opts.window.dist(e);
            }
            if (nphi < phi)
              cands.push_back(Candidate{phi - nphi, ri, ai, sf, &rule, &assignments[ai]});
          }
        }
      }
      std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        if (a.decrease != b.decrease) return a.decrease > b.decrease;
        if (a.rule_idx != b.rule_idx) return a.rule_idx < b.rule_idx;
        if (a.asg_idx != b.asg_idx) return a.asg_idx < b.asg_idx;
        return a.solve_for < b.solve_for;
      });

      bool stepped = false;
      for (const Candidate& cand : cands) {
        auto step = try_candidate(j, *cand.rule, *cand.asg, cand.solve_for);
        if (!step) continue;
        if (++steps > opts.max_steps)
          fail(ErrorCode::MaxStepsExceeded,
               "more than " + std::to_string(opts.max_steps) + " steps");
        for (const AlgTerm& g : step->alg_contribution) push_alg(item.coeff, g);
        if (!step->next_vanishes)
          work.push_front(WorkItem{item.coeff * step->scale, step->next});
        result.trace.push_back(std::move(*step));
        stepped = true;
        break;
      }
      if (!stepped) {
        std::string why = "no applicable relation decreases the potential at exponents " +
                          exponents_of(j) + " (case " + prof.case_label + ")";
        if (j.transc && j.transc->kind != TranscKind::Exp && cands.empty())
          why += "; cos/sin integrands beyond the paired relations need the "
                 "complex-exponential split";
        obstruct(item.coeff, j, why);
      }
    }
  }
};

}  // namespace

namespace {

/// Canonical presentation: monic residual cofactors with the scalar in the
/// coefficient, duplicate residual integrands merged, and every algebraic
/// term carrying a monic multiplier.
void canonicalize(ReductionResult& r) {
  std::vector<std::pair<Rat, Integrand>> merged;
  for (auto& [coeff, ig] : r.residuals) {
    Rat lead = ig.cofactor.leading();
    Rat c = coeff * lead;
    ig.cofactor = ig.cofactor * (Rat(1) / lead);
    bool found = false;
    for (auto& [mc, mig] : merged) {
      if (mig == ig) {
        mc += c;
        found = true;
        break;
      }
    }
    if (!found) merged.emplace_back(c, std::move(ig));
  }
  std::erase_if(merged, [](const auto& p) { return p.first.is_zero(); });
  r.residuals = std::move(merged);

  for (AlgTerm& g : r.algebraic) {
    Rat lead = g.multiplier.leading();
    g.weight *= lead;
    g.multiplier = g.multiplier * (Rat(1) / lead);
  }
}

}  // namespace

ReductionResult reduce(const Integrand& input, const ReduceOptions& opts, const Catalog& cat) {
  Integrand start = normalize(input);
  classify(start);  // rejects unsupported shapes up front
  if (opts.window.hi - opts.window.lo < Rat(1))
    fail(ErrorCode::Internal, "window must span at least one unit");
  Reducer red(cat, opts);
  red.run(start);
  canonicalize(red.result);
  return red.result;
}

}  // namespace recur
