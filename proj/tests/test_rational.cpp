#include <doctest.h>

#include <random>

#include "recur/rational.hpp"

using recur::Rat;

namespace {

Rat rand_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 12);
  return Rat(num(rng), den(rng));
}

}  // namespace

TEST_CASE("normalization keeps lowest terms and positive denominator") {
  Rat r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rat(0, 7).den() == 1);
  CHECK(Rat(0, 7).is_zero());
  // idempotent: rebuilding from num/den changes nothing
  Rat again = Rat::from_mpz(r.num(), r.den());
  CHECK(again == r);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    Rat a = rand_rat(rng), b = rand_rat(rng), c = rand_rat(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    if (!c.is_zero()) CHECK((a / c) * c == a);
  }
}

TEST_CASE("parse and print round-trip") {
  CHECK(Rat::parse("3/4") == Rat(3, 4));
  CHECK(Rat::parse("-7") == Rat(-7));
  CHECK(Rat::parse("-6/4") == Rat(-3, 2));
  CHECK(!Rat::parse("x"));
  CHECK(!Rat::parse("1/0"));
  CHECK(!Rat::parse(""));
  CHECK(Rat(-3, 2).str() == "-3/2");
  CHECK(Rat(5).str() == "5");
}

TEST_CASE("floor and ceil") {
  CHECK(Rat(-3, 2).floor() == -2);
  CHECK(Rat(-3, 2).ceil() == -1);
  CHECK(Rat(3, 2).floor() == 1);
  CHECK(Rat(3, 2).ceil() == 2);
  CHECK(Rat(-2).floor() == -2);
  CHECK(Rat(-2).ceil() == -2);
}

TEST_CASE("rational powers") {
  CHECK(Rat(2, 3).pow(3) == Rat(8, 27));
  CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
  CHECK(Rat(4).pow_rat(Rat(1, 2)) == Rat(2));
  CHECK(Rat(8, 27).pow_rat(Rat(2, 3)) == Rat(4, 9));
  CHECK(!Rat(2).pow_rat(Rat(1, 2)));          // irrational
  CHECK(!Rat(-4).pow_rat(Rat(1, 2)));         // negative base, fractional power
  CHECK(Rat(-2).pow_rat(Rat(3)) == Rat(-8));  // integer power of a negative
  CHECK(Rat(9, 4).pow_rat(Rat(-1, 2)) == Rat(2, 3));
}
