#include <doctest.h>

#include <random>

#include "recur/errors.hpp"
#include "recur/poly.hpp"

using recur::Error;
using recur::ErrorCode;
using recur::Poly;
using recur::Rat;

namespace {

Poly rand_poly(std::mt19937_64& rng, int maxdeg) {
  std::uniform_int_distribution<int> deg(0, maxdeg);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rat> cs(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& c : cs) c = Rat(coeff(rng), den(rng));
  return Poly(std::move(cs));
}

}  // namespace

TEST_CASE("ring arithmetic basics") {
  Poly one_plus_x{Rat(1), Rat(1)};
  Poly one_minus_x{Rat(1), Rat(-1)};
  CHECK(one_plus_x * one_minus_x == Poly{Rat(1), Rat(0), Rat(-1)});
  CHECK(Poly{Rat(1), Rat(2)} + Poly{Rat(3), Rat(4)} == Poly{Rat(4), Rat(6)});

  auto [q, r] = Poly::divrem(Poly{Rat(2), Rat(3), Rat(1)}, one_plus_x);
  CHECK(q == Poly{Rat(2), Rat(1)});
  CHECK(r.is_zero());
}

TEST_CASE("divrem reconstruction on random pairs") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    Poly p = rand_poly(rng, 6);
    Poly q = rand_poly(rng, 4);
    if (q.is_zero()) continue;
    auto [quot, rem] = Poly::divrem(p, q);
    CHECK(p == q * quot + rem);
    CHECK(rem.degree() < q.degree());
  }
  CHECK_THROWS_AS(Poly::divrem(Poly::one(), Poly::zero()), Error);
}

TEST_CASE("derivative: power rule, linearity, product rule") {
  CHECK(Poly{Rat(1), Rat(1), Rat(1)}.derivative() == Poly{Rat(1), Rat(2)});
  CHECK(Poly(Rat(5)).derivative().is_zero());
  CHECK(Poly{Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)}.derivative() ==
        Poly{Rat(0), Rat(0), Rat(0), Rat(4)});

  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    Poly p = rand_poly(rng, 5), q = rand_poly(rng, 5);
    CHECK((p + q).derivative() == p.derivative() + q.derivative());
    CHECK((p * q).derivative() == p.derivative() * q + p * q.derivative());
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  Poly p{Rat(1), Rat(1), Rat(1)};
  CHECK(p.eval(Rat(2)) == Rat(7));
  CHECK(p.eval(Rat(0)) == p.coeff(0));
  CHECK(Poly{Rat(1), Rat(-1)}.eval(Rat(1)) == Rat(0));

  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    Poly p2 = rand_poly(rng, 5), q2 = rand_poly(rng, 5);
    Rat x0(std::uniform_int_distribution<int>(-20, 20)(rng), 3);
    CHECK((p2 * q2).eval(x0) == p2.eval(x0) * q2.eval(x0));
    CHECK((p2 + q2).eval(x0) == p2.eval(x0) + q2.eval(x0));
  }
}

TEST_CASE("monic gcd") {
  Poly x2m1{Rat(-1), Rat(0), Rat(1)};
  Poly xm1{Rat(-1), Rat(1)};
  CHECK(Poly::gcd(x2m1, xm1) == xm1);
  // gcd(p, 0) = monic(p)
  Poly p{Rat(2), Rat(4)};
  CHECK(Poly::gcd(p, Poly::zero()) == Poly{Rat(1, 2), Rat(1)});
  // coprime quadratics (worked by hand: remainder chain ends at a constant)
  CHECK(Poly::gcd(Poly{Rat(1), Rat(1), Rat(1)}, Poly{Rat(1), Rat(-1), Rat(1)}) ==
        Poly::one());
  CHECK_THROWS_AS(Poly::gcd(Poly::zero(), Poly::zero()), Error);
}

TEST_CASE("antiderivative inverts derivative") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 100; ++i) {
    Poly p = rand_poly(rng, 6);
    CHECK(p.antiderivative().derivative() == p);
  }
}

TEST_CASE("proportionality detection") {
  Poly p{Rat(1), Rat(1)};
  Poly q{Rat(2), Rat(2)};
  CHECK(q.ratio_to(p) == Rat(2));
  CHECK(p.ratio_to(q) == Rat(1, 2));
  CHECK(!Poly{Rat(1), Rat(2)}.ratio_to(p));
  CHECK(!Poly{Rat(1), Rat(1), Rat(1)}.ratio_to(p));
}
