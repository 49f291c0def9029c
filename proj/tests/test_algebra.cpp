#include "doctest.h"
#include "seqcm/polynomial.hpp"
#include "test_helpers.hpp"

using namespace seqcm;

static RingPtr Rxy() { return make_ring({"x", "y"}); }
static RingPtr Rxyz() { return make_ring({"x", "y", "z"}); }

TEST_CASE("rational helpers") {
  CHECK(rat(6, 4) == rat(3, 2));
  CHECK(rat_to_string(rat(-6, 4)) == "-3/2");
  CHECK(rat_from_string("7/21") == rat(1, 3));
  CHECK(is_integer(rat(8, 4)));
  CHECK_THROWS(rat(1, 0));
}

TEST_CASE("polynomial arithmetic basics") {
  auto R = Rxyz();
  auto x = Polynomial::variable(R, 0);
  auto y = Polynomial::variable(R, 1);
  auto z = Polynomial::variable(R, 2);

  CHECK((x + y) + (-y) == x);
  CHECK((x + z) * (x - z) == x * x - z * z);

  auto xy = x * y;
  REQUIRE(xy.nterms() == 1);
  CHECK(xy.leading_term().coeff == 1);
  CHECK(xy.leading_term().mono.e == std::vector<int>{1, 1, 0});

  CHECK((x - x).is_zero());
  CHECK(x.is_homogeneous());
  CHECK_FALSE((x * x + y).is_homogeneous());
}

TEST_CASE("polynomial ring axioms on random inputs") {
  auto R = Rxyz();
  std::mt19937_64 rng(42);
  for (int it = 0; it < 60; ++it) {
    auto a = testing::random_polynomial(rng, R, 5, 4);
    auto b = testing::random_polynomial(rng, R, 5, 4);
    auto c = testing::random_polynomial(rng, R, 5, 4);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("grevlex and lex comparisons") {
  Monomial x2({2, 0}), xy({1, 1}), y2({0, 2}), x({1, 0}), y3({0, 3});
  CHECK(cmp_mono(x2, xy, BaseOrder::Grevlex) > 0);
  CHECK(cmp_mono(xy, y2, BaseOrder::Grevlex) > 0);
  CHECK(cmp_mono(x, y3, BaseOrder::Lex) > 0);
  CHECK(cmp_mono(y3, x, BaseOrder::Grevlex) > 0);  // degree wins in grevlex
  CHECK(cmp_mono(xy, xy, BaseOrder::Grevlex) == 0);
}

TEST_CASE("order multiplicativity: a < b implies ac < bc") {
  std::mt19937_64 rng(7);
  for (BaseOrder ord : {BaseOrder::Grevlex, BaseOrder::Lex}) {
    for (int it = 0; it < 300; ++it) {
      Monomial a = testing::random_monomial(rng, 3, 5);
      Monomial b = testing::random_monomial(rng, 3, 5);
      Monomial c = testing::random_monomial(rng, 3, 5);
      int ab = cmp_mono(a, b, ord);
      CHECK(cmp_mono(a * c, b * c, ord) == ab);
    }
  }
}

TEST_CASE("substitute_powers") {
  auto R = Rxy();
  auto x = Polynomial::variable(R, 0);
  auto y = Polynomial::variable(R, 1);
  CHECK((x + y).substitute_powers({2, 1}) == x * x + y);
  std::mt19937_64 rng(3);
  auto f = testing::random_polynomial(rng, R, 4, 3);
  CHECK(f.substitute_powers({1, 1}) == f);
  CHECK((x * y).substitute_powers({3, 1}) == x * x * x * y);
}

TEST_CASE("printing is canonical and parsing round-trips") {
  auto R = Rxyz();
  auto x = Polynomial::variable(R, 0);
  auto y = Polynomial::variable(R, 1);
  auto z = Polynomial::variable(R, 2);

  auto f = x * x * y - z.scaled(rat(3, 2)) + Polynomial::constant(R, Rational(1));
  CHECK(f.to_string() == "x^2*y - 3/2*z + 1");
  CHECK(Polynomial::zero(R).to_string() == "0");
  CHECK((-x).to_string() == "-x");

  CHECK(parse_polynomial(R, "x^2*y - 3/2*z + 1") == f);
  CHECK(parse_polynomial(R, "  - x ") == -x);
  CHECK(parse_polynomial(R, "2*x") == x.scaled(Rational(2)));

  std::mt19937_64 rng(11);
  for (int it = 0; it < 80; ++it) {
    auto g = testing::random_polynomial(rng, R, 6, 5);
    CHECK(parse_polynomial(R, g.to_string()) == g);
  }
}

TEST_CASE("parser diagnostics") {
  auto R = Rxy();
  CHECK_THROWS_AS(parse_polynomial(R, "x + w"), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial(R, "x *"), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial(R, ""), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial(R, "x + + "), std::invalid_argument);
}
