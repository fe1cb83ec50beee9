#include <doctest.h>

#include <random>

#include "recur/engine.hpp"
#include "recur/errors.hpp"
#include "recur/parse.hpp"
#include "recur/printer.hpp"
#include "recur/selftest.hpp"
#include "recur/verify.hpp"
#include "testutil.hpp"

using namespace recur;
using testutil::I;
using testutil::P;

TEST_CASE("the two-quadratic example string parses to its QQ shape") {
  Integrand i = I("(1 - x + 3*x^2) * (1 + x + x^2)^(-2) * (1 - x + x^2)^(-1/2)");
  CHECK(i.cofactor == P("1 - x + 3*x^2"));
  REQUIRE(i.factors.size() == 2);
  CHECK(classify(i).tag == FormTag::QQ);
}

TEST_CASE("transcendental and monomial factors") {
  Integrand e = I("exp(1 + 2*x) * (3 + x)^(-5/2)");
  REQUIRE(e.transc);
  CHECK(e.transc->kind == TranscKind::Exp);
  CHECK(e.transc->arg == P("1 + 2*x"));

  Integrand m = I("x^(1/2) * (1 + x)^(-1)");
  REQUIRE(m.factors.size() == 2);
  CHECK(m.factors[0].base == P("x"));

  Integrand c = I("3 * x * (1 + x^2)^(-2)");
  CHECK(c.cofactor == P("3*x"));
}

TEST_CASE("scalar literals, signs, and constant bases fold into the cofactor") {
  CHECK(I("1/2 * (1 + x^2)^(-1)").cofactor == P("1/2"));
  CHECK(I("-3 * (1 + x^2)^(-1)").cofactor == P("-3"));
  CHECK(I("(2)^2 * (1 + x^2)^(-1)").cofactor == P("4"));
  CHECK(I("(4)^(1/2) * (1 + x^2)^(-1)").cofactor == P("2"));
  CHECK_THROWS_WITH_AS(I("(2)^(1/2) * (1 + x^2)^(-1)"),
                       doctest::Contains("unsupported-form"), Error);
}

TEST_CASE("syntax errors carry a position and an expectation") {
  CHECK_THROWS_WITH_AS(I("(1 + x"), doctest::Contains("expected ')'"), Error);
  CHECK_THROWS_WITH_AS(I("(1 + x) ^ -2"), doctest::Contains("parenthesized"), Error);
  CHECK_THROWS_WITH_AS(I("(1 + y)^2"), doctest::Contains("'x'"), Error);
  CHECK_THROWS_WITH_AS(I(""), doctest::Contains("factor"), Error);
  CHECK_THROWS_WITH_AS(I("(1 + x)^2 (2 + x)"), doctest::Contains("'*'"), Error);
}

TEST_CASE("symbolic exponents are rejected") {
  CHECK_THROWS_WITH_AS(I("(1 + x)^n"), doctest::Contains("symbolic-exponent"), Error);
  CHECK_THROWS_WITH_AS(I("(1 + x)^(n)"), doctest::Contains("symbolic-exponent"), Error);
}

TEST_CASE("alternate variable names") {
  Integrand i = parse_expr("(1 + t + t^2)^(-2)", "t");
  CHECK(classify(i).tag == FormTag::Q2);
  CHECK(print_expr(i, "t") == "(1 + t + t^2)^(-2)");
  CHECK_THROWS_AS(parse_expr("(1 + x)^2", "t"), Error);
}

TEST_CASE("zero integrands are rejected") {
  CHECK_THROWS_WITH_AS(I("0 * (1 + x^2)^(-1)"), doctest::Contains("zero integrand"),
                       Error);
}

TEST_CASE("print round-trips the worked example string") {
  std::string text = "(1 - x + 3*x^2) * (1 - x + x^2)^(-1/2) * (1 + x + x^2)^(-2)";
  Integrand i = I(text);
  CHECK(print_expr(i) == text);
  CHECK(I(print_expr(i)) == i);
}

TEST_CASE("result JSON round-trips and stays verifiable") {
  Integrand input = I("(1 + x^2)^(-3)");
  ReductionResult r = reduce(input, ReduceOptions{});
  std::string js = serialize_result(input, r);
  // all scalars are exact rational strings
  CHECK(js.find("\"weight\": \"1/4\"") != std::string::npos);
  CHECK(js.find("\"weight\": \"3/8\"") != std::string::npos);
  CHECK(js.find("\"coefficient\": \"3/8\"") != std::string::npos);
  CHECK(js.find("\"status\": \"obstructed\"") != std::string::npos);
  CHECK(js.find("\"rule\": \"1.1\"") != std::string::npos);

  ReductionResult back = load_result(js);
  CHECK(back.status == r.status);
  REQUIRE(back.algebraic.size() == r.algebraic.size());
  REQUIRE(back.residuals.size() == r.residuals.size());
  CHECK(verify_result(input, back).ok);

  // a terminal input serializes with an empty trace and unit coefficient
  Integrand term = I("(1 + x)^(-1/2) * (2 + x)^(-1/2)");
  std::string tjs = serialize_result(term, reduce(term, ReduceOptions{}));
  CHECK(tjs.find("\"trace\": []") != std::string::npos);
  CHECK(tjs.find("\"coefficient\": \"1\"") != std::string::npos);
}

TEST_CASE("parse(print()) is the identity on a generated corpus") {
  // all form classes, both degenerate and not, random exponents and cofactors
  const struct {
    FormTag form;
    const char* case_label;
    CofShape cof;
  } shapes[] = {
      {FormTag::Q2, "1", CofShape::None},     {FormTag::C3, "2A", CofShape::AB},
      {FormTag::C3, "2B", CofShape::None},    {FormTag::Q4, "3A", CofShape::ABC},
      {FormTag::Q4, "3C-2", CofShape::None},  {FormTag::LL, "4", CofShape::None},
      {FormTag::EL, "5", CofShape::None},     {FormTag::LQ, "6A", CofShape::AB},
      {FormTag::LQ, "6B-1", CofShape::None},  {FormTag::EQ, "7A", CofShape::AB},
      {FormTag::EQ, "7B", CofShape::None},    {FormTag::QQ, "8A", CofShape::ABC},
      {FormTag::QQ, "8C", CofShape::AB},      {FormTag::LLL, "9A", CofShape::AB},
      {FormTag::LLL, "9B", CofShape::None},   {FormTag::ELL, "10A", CofShape::AB},
      {FormTag::ELL, "10B", CofShape::None},  {FormTag::LLQ, "11A", CofShape::ABC},
      {FormTag::LLQ, "11E-3", CofShape::None}, {FormTag::LLLL, "12A", CofShape::ABC},
      {FormTag::LLLL, "12B", CofShape::AB},
  };
  const TranscKind kinds[] = {TranscKind::Exp, TranscKind::Cos, TranscKind::Sin};
  int count = 0;
  for (std::uint64_t seed = 0; count < 1000; ++seed) {
    const auto& shape = shapes[seed % (sizeof(shapes) / sizeof(shapes[0]))];
    Integrand ig = sample_integrand_for_case(shape.form, shape.case_label, shape.cof,
                                             kinds[seed % 3], 5000 + seed);
    Integrand n;
    try {
      n = normalize(ig);
    } catch (const Error&) {
      continue;  // the random pair happened to merge or be refused
    }
    if (n.factors.size() != ig.factors.size()) continue;
    std::string text = print_expr(n);
    CAPTURE(text);
    Integrand back = parse_expr(text);
    CHECK(back == n);
    ++count;
  }
  CHECK(count == 1000);
}
