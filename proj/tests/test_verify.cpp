#include <doctest.h>

#include <random>

#include "recur/engine.hpp"
#include "recur/parse.hpp"
#include "recur/selftest.hpp"
#include "recur/verify.hpp"
#include "testutil.hpp"

using namespace recur;
using testutil::I;
using testutil::P;

TEST_CASE("differentiate 2x(1+x^2)^(-1) -> (2-2x^2)(1+x^2)^(-2)") {
  AlgTerm g;
  g.multiplier = P("2*x");
  g.factors = {{P("1 + x^2"), Rat(-1)}};
  auto d = differentiate_algterm(g);
  REQUIRE(d.size() == 1);
  CHECK(d[0].coeff == P("2 - 2*x^2"));
  REQUIRE(d[0].factors.size() == 1);
  CHECK(d[0].factors[0].exponent == Rat(-2));
}

TEST_CASE("differentiate exp(x)(1+x) -> exp(x)(2+x)") {
  AlgTerm g;
  g.multiplier = P("1 + x");
  g.transc = TranscFactor{TranscKind::Exp, P("x")};
  auto d = differentiate_algterm(g);
  REQUIRE(d.size() == 1);
  CHECK(d[0].coeff == P("2 + x"));
}

TEST_CASE("differentiate a power product matches the product rule shape") {
  // d/dx [(a+bx)^(m+1) (c+dx)^(n+1)]: coefficient over the product at (m,n)
  AlgTerm g;
  g.factors = {{P("1 + 2*x"), Rat(3, 2)}, {P("5 + 7*x"), Rat(1, 2)}};
  auto d = differentiate_algterm(g);
  REQUIRE(d.size() == 1);
  // (3/2)*2*(5+7x) + (1/2)*7*(1+2x)
  CHECK(d[0].coeff == P("5 + 7*x") * Rat(3) + P("1 + 2*x") * Rat(7, 2));
  CHECK(d[0].factors[0].exponent == Rat(1, 2));
  CHECK(d[0].factors[1].exponent == Rat(-1, 2));
}

TEST_CASE("cos terms differentiate into both kinds") {
  AlgTerm g;
  g.multiplier = P("x");
  g.transc = TranscFactor{TranscKind::Cos, P("1 + 2*x")};
  auto d = differentiate_algterm(g);
  REQUIRE(d.size() == 2);
  CHECK(d[0].transc->kind == TranscKind::Cos);
  CHECK(d[0].coeff == P("1"));
  CHECK(d[1].transc->kind == TranscKind::Sin);
  CHECK(d[1].coeff == P("-2*x"));
}

TEST_CASE("relation residual vanishes for rule 1.1 and flags a sign flip") {
  Integrand i = I("(1 + x^2)^1");
  RelationInstance inst = instantiate(*Catalog::builtin().find("1.1"), i);
  CHECK(relation_residual(inst).ok());

  RelationInstance broken = inst;
  for (AlgTerm& g : broken.alg) g.weight = -g.weight;
  CHECK(!relation_residual(broken).ok());

  RelationInstance wrong_k = inst;
  wrong_k.k1 += Rat(1);
  CHECK(!relation_residual(wrong_k).ok());
}

TEST_CASE("verify_result approves correct reductions and rejects perturbations") {
  Integrand input = I("(1 + x^2)^(-3)");
  ReductionResult r = reduce(input, ReduceOptions{});
  VerifyReport rep = verify_result(input, r);
  CHECK(rep.ok);

  // empty reduction of a terminal input
  Integrand term = I("(1 + x)^(-1/2) * (2 + x)^(-1/2)");
  ReductionResult rt = reduce(term, ReduceOptions{});
  CHECK(rt.trace.empty());
  CHECK(verify_result(term, rt).ok);

  // perturb one algebraic weight by 1
  ReductionResult bad = r;
  REQUIRE(!bad.algebraic.empty());
  bad.algebraic[0].weight += Rat(1);
  CHECK(!verify_result(input, bad).ok);

  // perturb a residual coefficient
  ReductionResult bad2 = r;
  REQUIRE(!bad2.residuals.empty());
  bad2.residuals[0].first += Rat(1, 7);
  CHECK(!verify_result(input, bad2).ok);
}

TEST_CASE("derivative agrees with central finite differences on smooth points") {
  // exact rational h; integer exponents keep every evaluation rational
  std::mt19937_64 rng(99);
  const Rat h(1, 1000000);
  const Rat tol(1, 100000000);
  int checked = 0;
  for (std::uint64_t s = 0; s < 40; ++s) {
    Integrand ig = sample_integrand_for_case(FormTag::LQ, "6A", CofShape::AB,
                                             TranscKind::Exp, 1000 + s);
    AlgTerm g;
    g.multiplier = ig.cofactor;
    g.factors = ig.factors;
    std::uniform_int_distribution<int> ipow(-3, 3);
    for (auto& f : g.factors) f.exponent = Rat(ipow(rng));

    auto eval_term = [&](const Rat& x0) -> std::optional<Rat> {
      Rat acc = g.weight * g.multiplier.eval(x0);
      for (const auto& f : g.factors) {
        Rat base = f.base.eval(x0);
        if (base.is_zero() && f.exponent.is_negative()) return std::nullopt;
        acc = acc * base.pow(f.exponent.to_long());
      }
      return acc;
    };
    std::uniform_int_distribution<int> xd(-8, 8);
    Rat x0(xd(rng), 3);
    auto lo = eval_term(x0 - h), hi = eval_term(x0 + h), at = eval_term(x0);
    if (!lo || !hi || !at) continue;

    // exact derivative at x0 from the symbolic decomposition
    Rat deriv(0);
    bool pole = false;
    for (const DerivTerm& d : differentiate_algterm(g)) {
      Rat acc = d.coeff.eval(x0);
      for (const auto& f : d.factors) {
        Rat base = f.base.eval(x0);
        if (base.is_zero() && f.exponent.is_negative()) pole = true;
        if (pole) break;
        acc = acc * base.pow(f.exponent.to_long());
      }
      if (pole) break;
      deriv += acc;
    }
    if (pole) continue;

    Rat fd = (*hi - *lo) / (Rat(2) * h);
    Rat err = abs(fd - deriv);
    CHECK(err < tol * (Rat(1) + abs(deriv)));
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("selftest oracle: spot rules pass, tampered catalog fails") {
  const Catalog& cat = Catalog::builtin();
  SelftestReport r = selftest_catalog(cat, 5, 42, {"3C.1", "8B.1", "11D.4", "12A.1"});
  CHECK(r.ok());
  CHECK(r.total == 4);

  // negative control: corrupt one coefficient template and watch it burn
  std::string text = cat.export_text();
  auto pos = text.find("k1 (n + 1)*(4*a*c - b^2)");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 24, "k1 (n + 2)*(4*a*c - b^2)");
  Catalog tampered = Catalog::load(text);
  SelftestReport bad = selftest_catalog(tampered, 5, 42, {"1.1"});
  CHECK(!bad.ok());
}

TEST_CASE("degenerate relations really need their confluence variety") {
  // Relabel the double-root cubic relation as nondegenerate and drop its
  // vanishing condition; on distinct-root cubics its identity must break.
  std::string text = Catalog::builtin().export_text();
  auto rule_pos = text.find("rule 2B.1 case 2B");
  REQUIRE(rule_pos != std::string::npos);
  text.replace(rule_pos, 17, "rule 2B.1 case 2A");
  auto vanish_pos = text.find("vanish ra*rc - rb^2\n", rule_pos);
  REQUIRE(vanish_pos != std::string::npos);
  text.erase(vanish_pos, 20);
  Catalog relabeled = Catalog::load(text);
  SelftestReport r = selftest_catalog(relabeled, 5, 3, {"2B.1"});
  CHECK(!r.ok());
}
