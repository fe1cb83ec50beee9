#include "recur/verify.hpp"

#include <algorithm>

#include "recur/errors.hpp"

namespace recur {

namespace {

int component_of(const std::optional<TranscFactor>& t) {
  if (!t) return 0;
  switch (t->kind) {
    case TranscKind::Exp: return 0;
    case TranscKind::Cos: return 1;
    case TranscKind::Sin: return 2;
  }
  return 0;
}

const char* component_name(int c) {
  switch (c) {
    case 1: return "cos";
    case 2: return "sin";
    default: return "poly";
  }
}

}  // namespace

std::vector<DerivTerm> differentiate_algterm(const AlgTerm& g) {
  // d/dx [w*M*prod p_i^e_i * T]
  //   = w*[M' * prod p_i + M * sum_i e_i p_i' prod_{j!=i} p_j] * prod p^(e-1) * T
  //   + transcendental contribution (b*M for exp; the partner kind for cos/sin).
  Poly all = Poly::one();
  for (const PowerFactor& f : g.factors) all *= f.base;
  Poly main = g.multiplier.derivative() * all;
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    Poly others = Poly::one();
    for (std::size_t j = 0; j < g.factors.size(); ++j)
      if (j != i) others *= g.factors[j].base;
    main += g.multiplier * g.factors[i].base.derivative() * others * g.factors[i].exponent;
  }
  std::vector<PowerFactor> shifted = g.factors;
  for (PowerFactor& f : shifted) f.exponent -= Rat(1);

  std::vector<DerivTerm> out;
  out.push_back(DerivTerm{main * g.weight, shifted, g.transc});
  if (g.transc) {
    const Rat b = g.transc->arg.coeff(1);
    Poly extra = g.multiplier * all * b * g.weight;
    switch (g.transc->kind) {
      case TranscKind::Exp:
        out[0].coeff += extra;
        break;
      case TranscKind::Cos:
        out.push_back(DerivTerm{-extra, shifted, TranscFactor{TranscKind::Sin, g.transc->arg}});
        break;
      case TranscKind::Sin:
        out.push_back(DerivTerm{extra, shifted, TranscFactor{TranscKind::Cos, g.transc->arg}});
        break;
    }
  }
  return out;
}

void ResidualAccumulator::add(const Poly& coeff, const std::vector<PowerFactor>& factors,
                              const std::optional<TranscFactor>& transc) {
  if (coeff.is_zero()) return;
  Term t;
  t.coeff = coeff;
  for (const PowerFactor& f : factors) {
    if (f.exponent.is_zero()) continue;
    bool merged = false;
    for (auto& [b, e] : t.powers) {
      if (b == f.base) {
        e += f.exponent;
        merged = true;
        break;
      }
    }
    if (!merged) t.powers.emplace_back(f.base, f.exponent);
  }
  std::erase_if(t.powers, [](const auto& p) { return p.second.is_zero(); });
  t.component = component_of(transc);
  terms_.push_back(std::move(t));
}

void ResidualAccumulator::add_integrand(const Rat& coeff, const Integrand& i) {
  add(i.cofactor * coeff, i.factors, i.transc);
}

void ResidualAccumulator::add_algterm_derivative(const AlgTerm& g) {
  for (const DerivTerm& d : differentiate_algterm(g)) add(d.coeff, d.factors, d.transc);
}

Residual ResidualAccumulator::finish() const {
  // Componentwise-minimal exponent per distinct base, a term without the
  // base counting as exponent zero; each term is then a polynomial multiple
  // of the common power product.
  std::vector<std::pair<Poly, Rat>> floor_exp;
  for (const Term& t : terms_) {
    for (const auto& [base, e] : t.powers) {
      bool seen = false;
      for (const auto& [b, unused] : floor_exp) seen = seen || b == base;
      if (!seen) floor_exp.emplace_back(base, Rat(0));
    }
  }
  for (auto& [base, floor] : floor_exp) {
    bool first = true;
    for (const Term& t : terms_) {
      Rat e(0);
      for (const auto& [b, be] : t.powers)
        if (b == base) e = be;
      if (first || e < floor) floor = e;
      first = false;
    }
  }

  // Shared power ladders keep deep reductions (offsets in the hundreds)
  // affordable: base^k is computed once per base and level.
  std::vector<std::vector<Poly>> ladders(floor_exp.size());
  for (std::size_t bi = 0; bi < floor_exp.size(); ++bi)
    ladders[bi].push_back(Poly::one());
  auto power_of = [&](std::size_t bi, long k) -> const Poly& {
    auto& ladder = ladders[bi];
    while (static_cast<long>(ladder.size()) <= k)
      ladder.push_back(ladder.back() * floor_exp[bi].first);
    return ladder[static_cast<std::size_t>(k)];
  };

  Poly numerators[3];
  for (const Term& t : terms_) {
    Poly part = t.coeff;
    for (std::size_t bi = 0; bi < floor_exp.size(); ++bi) {
      const auto& [base, floor] = floor_exp[bi];
      Rat e(0);
      for (const auto& [b, be] : t.powers)
        if (b == base) e = be;
      Rat diff = e - floor;
      if (!diff.is_integer() || diff.is_negative())
        fail(ErrorCode::Internal, "non-integral exponent offset in residual");
      long k = diff.to_long();
      if (k > 0) part *= power_of(bi, k);
    }
    numerators[t.component] += part;
  }

  Residual r;
  bool any_trig = false;
  for (const Term& t : terms_) any_trig = any_trig || t.component != 0;
  if (any_trig) {
    r.numerators.emplace_back(component_name(1), numerators[1]);
    r.numerators.emplace_back(component_name(2), numerators[2]);
    if (!numerators[0].is_zero())
      fail(ErrorCode::Internal, "mixed plain and trigonometric components");
  } else {
    r.numerators.emplace_back(component_name(0), numerators[0]);
  }
  return r;
}

Residual relation_residual(const RelationInstance& inst) {
  ResidualAccumulator acc;
  acc.add_integrand(inst.k1, inst.i1);
  acc.add_integrand(Rat(1), inst.i2);
  for (const AlgTerm& g : inst.alg) acc.add_algterm_derivative(g);
  return acc.finish();
}

VerifyReport verify_result(const Integrand& original, const ReductionResult& r) {
  ResidualAccumulator acc;
  for (const AlgTerm& g : r.algebraic) acc.add_algterm_derivative(g);
  for (const auto& [coeff, ig] : r.residuals) acc.add_integrand(coeff, ig);
  acc.add_integrand(Rat(-1), original);
  Residual res = acc.finish();
  return VerifyReport{res.ok(), std::move(res)};
}

Residual step_residual(const Integrand& current, const Step& step) {
  ResidualAccumulator acc;
  for (const AlgTerm& g : step.alg_contribution) acc.add_algterm_derivative(g);
  if (!step.next_vanishes) acc.add_integrand(step.scale, step.next);
  acc.add_integrand(Rat(-1), current);
  return acc.finish();
}

}  // namespace recur
