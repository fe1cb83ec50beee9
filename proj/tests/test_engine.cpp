#include <doctest.h>

#include "recur/engine.hpp"
#include "recur/errors.hpp"
#include "recur/parse.hpp"
#include "recur/printer.hpp"
#include "recur/verify.hpp"
#include "testutil.hpp"

using namespace recur;
using testutil::I;
using testutil::P;

TEST_CASE("window distance") {
  Window w;  // (-1, 0]
  CHECK(w.dist(Rat(0)) == 0);
  CHECK(w.dist(Rat(-1, 2)) == 0);
  CHECK(w.dist(Rat(-1)) == 1);
  CHECK(w.dist(Rat(-2)) == 2);
  CHECK(w.dist(Rat(1, 2)) == 1);
  CHECK(w.dist(Rat(5, 2)) == 3);
  CHECK(w.dist(Rat(3)) == 3);
  Window shifted{Rat(0), Rat(1)};
  CHECK(shifted.dist(Rat(0)) == 1);
  CHECK(shifted.dist(Rat(1, 2)) == 0);
}

TEST_CASE("apply_step solves rule 1.1 for the lower exponent") {
  Integrand i = I("(1 + x^2)^(-2)");
  RelationInstance inst = instantiate(*Catalog::builtin().find("1.1"), i);
  Step s = apply_step(inst, 1);
  // INT((1+x^2)^(-2)) = 1/2 x (1+x^2)^(-1) + 1/2 INT((1+x^2)^(-1))
  CHECK(s.scale * s.next.cofactor.coeff(0) == Rat(1, 2));
  REQUIRE(s.alg_contribution.size() == 1);
  CHECK(s.alg_contribution[0].weight * s.alg_contribution[0].multiplier == P("1/2*x"));
  CHECK(step_residual(i, s).ok());
}

TEST_CASE("solve one way then the other returns with cancelling algebra") {
  Integrand i = I("(1 + x^2)^(-2)");
  RelationInstance inst = instantiate(*Catalog::builtin().find("1.1"), i);
  Step fwd = apply_step(inst, 1);
  Step back = apply_step(inst, 2);
  // composition: scale_fwd * scale_back = 1 and algebra cancels exactly
  CHECK(fwd.scale * back.scale == Rat(1));
  Rat cancelled = fwd.alg_contribution[0].weight +
                  fwd.scale * back.alg_contribution[0].weight;
  CHECK(cancelled.is_zero());
}

TEST_CASE("solved-for coefficient vanishes at the exceptional exponent") {
  Integrand j;
  j.factors = {{P("1 + x"), Rat(-1)}, {P("2 + x"), Rat(1, 2)}};
  RelationInstance inst = instantiate(*Catalog::builtin().find("4.1"), j, {0, 1});
  CHECK(inst.k1.is_zero());  // (m+1)(ad-bc) with m = -1
  CHECK_THROWS_WITH_AS(apply_step(inst, 1),
                       doctest::Contains("solved-coefficient-zero"), Error);
  CHECK_THROWS_WITH_AS(apply_step(inst, 2),
                       doctest::Contains("solved-coefficient-zero"), Error);
}

TEST_CASE("absorb_cofactor expands in the linear factor's shifted basis") {
  Integrand i = I("(3 + x) * (1 + x)^2 * (2 + 3*x + x^2)^(-1/2)");
  auto parts = absorb_cofactor(i);
  REQUIRE(parts.size() == 2);
  // 3 + x = (1+x) + 2
  CHECK(parts[0].first == Rat(2));
  CHECK(parts[0].second.factors[0].exponent == Rat(2));
  CHECK(parts[1].first == Rat(1));
  CHECK(parts[1].second.factors[0].exponent == Rat(3));
  for (const auto& [c, part] : parts) CHECK(part.cofactor == Poly::one());

  // degree-2 cofactors expand recursively into three summands
  Integrand q = I("(3 + x + x^2) * (1 + x)^2 * (2 + x)^(1/2)");
  auto qparts = absorb_cofactor(q);
  CHECK(qparts.size() == 3);
  // reconstruction: sum of c_k (1+x)^k = cofactor
  Poly sum;
  for (std::size_t k = 0; k < qparts.size(); ++k)
    sum += Poly(qparts[k].first) * P("1 + x").pow(static_cast<unsigned>(
               (qparts[k].second.factors[0].exponent - Rat(2)).to_long()));
  CHECK(sum == P("3 + x + x^2"));

  CHECK_THROWS_WITH_AS(absorb_cofactor(I("(3 + x) * (1 + x^3)^(1/2)")),
                       doctest::Contains("no-linear-factor"), Error);
}

TEST_CASE("reduce: two steps down the quadratic power ladder") {
  Integrand input = I("(1 + x^2)^(-3)");
  ReductionResult r = reduce(input, ReduceOptions{});
  CHECK(r.status == ReduceStatus::Obstructed);  // -1 is the logarithmic terminal
  REQUIRE(r.algebraic.size() == 2);
  CHECK(r.algebraic[0].weight == Rat(1, 4));
  CHECK(r.algebraic[0].multiplier == P("x"));
  CHECK(r.algebraic[0].factors[0].exponent == Rat(-2));
  CHECK(r.algebraic[1].weight == Rat(3, 8));
  CHECK(r.algebraic[1].multiplier == P("x"));
  CHECK(r.algebraic[1].factors[0].exponent == Rat(-1));
  REQUIRE(r.residuals.size() == 1);
  CHECK(r.residuals[0].first == Rat(3, 8));
  CHECK(r.residuals[0].second == I("(1 + x^2)^(-1)"));
  CHECK(r.trace.size() == 2);
  CHECK(verify_result(input, r).ok);
}

TEST_CASE("reduce: terminal input yields an empty trace") {
  Integrand input = I("(1 + x)^(-1/2) * (2 + x)^(-1/2)");
  ReductionResult r = reduce(input, ReduceOptions{});
  CHECK(r.status == ReduceStatus::Terminal);
  CHECK(r.trace.empty());
  CHECK(r.algebraic.empty());
  REQUIRE(r.residuals.size() == 1);
  CHECK(r.residuals[0].first == Rat(1));
  CHECK(r.residuals[0].second == input);
}

TEST_CASE("reduce: the two-quadratic worked example, bit for bit") {
  Integrand input = I("(1 - x + 3*x^2) * (1 + x + x^2)^(-2) * (1 - x + x^2)^(-1/2)");
  ReductionResult r = reduce(input, ReduceOptions{});
  // algebraic part (1+x)(1-x+x^2)^(1/2)(1+x+x^2)^(-1)
  REQUIRE(r.algebraic.size() == 1);
  const AlgTerm& g = r.algebraic[0];
  CHECK(g.weight * g.multiplier == P("1 + x"));
  REQUIRE(g.factors.size() == 2);
  CHECK(g.factors[0].base == P("1 - x + x^2"));
  CHECK(g.factors[0].exponent == Rat(1, 2));
  CHECK(g.factors[1].base == P("1 + x + x^2"));
  CHECK(g.factors[1].exponent == Rat(-1));
  // residual 1/2 INT((3 - x)(1+x+x^2)^(-1)(1-x+x^2)^(-1/2))
  REQUIRE(r.residuals.size() == 1);
  CHECK(Poly(r.residuals[0].first) * r.residuals[0].second.cofactor ==
        P("3/2 - 1/2*x"));
  CHECK(r.residuals[0].second.factors[0].base == P("1 - x + x^2"));
  CHECK(r.residuals[0].second.factors[0].exponent == Rat(-1, 2));
  CHECK(r.residuals[0].second.factors[1].base == P("1 + x + x^2"));
  CHECK(r.residuals[0].second.factors[1].exponent == Rat(-1));
  CHECK(verify_result(input, r).ok);
}

TEST_CASE("reduce results reconstruct across forms and directions") {
  const char* inputs[] = {
      "(1 + x^2)^3",
      "(2 - 3*x + x^3)^(5/2)",
      "(1 + x + x^3 + x^4)^(1/2)",
      "(1 + x)^(5/2) * (3 + x)^(-7/2)",
      "exp(1 + 2*x) * (3 + x)^2",
      "(2 + x) * (1 + x)^(-3) * (1 + x + x^2)^(5/2)",
      "cos(1 + x) * (4 + 4*x + x^2)^(-2)",
      "sin(x) * (1 + 2*x + x^2)^2",
      "(1 - x + 3*x^2) * (1 + x + x^2)^(-2) * (1 - x + x^2)^(-5/2)",
      "(1 + x)^2 * (2 + x)^(3/2) * (3 + x)^(-5/2)",
      "exp(x) * (1 + x)^3 * (2 + x)^(-2)",
      "(1 + x)^2 * (2 + x)^(-1/2) * (1 + x + x^2)^(3/2)",
      "(1 + x)^(3/2) * (2 + x)^(1/3) * (3 + x)^(1/4) * (4 + x)^(-9/5)",
      "(3 + x) * (1 + x)^(1/2) * (2 + 3*x + x^2)^(-3/2)",
      "(1 - 2*x + x^2)^(1/2) * (4 - 4*x + x^2)^(3/2)",
  };
  for (const char* text : inputs) {
    CAPTURE(text);
    Integrand input = I(text);
    ReductionResult r = reduce(input, ReduceOptions{});
    CHECK(verify_result(input, r).ok);
    for (const auto& [coeff, ig] : r.residuals) {
      if (r.status == ReduceStatus::Terminal) {
        for (const PowerFactor& f : ig.factors)
          CHECK(ReduceOptions{}.window.contains(f.exponent));
      }
    }
  }
}

TEST_CASE("reduce with a shifted window") {
  ReduceOptions opts;
  opts.window = Window{Rat(0), Rat(1)};
  Integrand input = I("(1 + x)^(5/2) * (3 + x)^(-3/2)");
  ReductionResult r = reduce(input, opts);
  CHECK(verify_result(input, r).ok);
  for (const auto& [coeff, ig] : r.residuals)
    for (const PowerFactor& f : ig.factors)
      CHECK((r.status == ReduceStatus::Obstructed || opts.window.contains(f.exponent)));
}

TEST_CASE("max steps is enforced") {
  ReduceOptions opts;
  opts.max_steps = 3;
  CHECK_THROWS_WITH_AS(reduce(I("(1 + x^2)^(-9)"), opts),
                       doctest::Contains("max-steps-exceeded"), Error);
}

TEST_CASE("step count is bounded by the initial potential on single-chain runs") {
  // No positive integer exponents on multi-factor forms: no factor ever hits
  // zero, so no cofactor absorption splits the reduction into branches.
  Window w;
  const char* inputs[] = {
      "(1 + x)^(7/2) * (2 + x)^(-4)",
      "(1 + x^2)^(-6)",
      "(1 + x^2)^6",
      "(1 + x)^(-3) * (2 + x)^(9/2) * (3 + x)^(1/2)",
      "(2 - 3*x + x^3)^(7/2)",
  };
  for (const char* text : inputs) {
    CAPTURE(text);
    Integrand input = I(text);
    ReductionResult r = reduce(input, ReduceOptions{});
    CHECK(verify_result(input, r).ok);
    CHECK(static_cast<long>(r.trace.size()) <= potential(normalize(input), w));
  }
}

TEST_CASE("branching reductions stay exact even past the single-chain bound") {
  // Dropping a factor strands a linear cofactor on a pure-rule form; the
  // absorption split costs extra steps but the reconstruction stays exact.
  Integrand input = I("(1 + x)^3 * (2 + x)^3 * (3 + x)^(1/2)");
  ReductionResult r = reduce(input, ReduceOptions{});
  CHECK(r.status == ReduceStatus::Terminal);
  CHECK(verify_result(input, r).ok);
}
