#include <doctest.h>

#include <random>

#include "knotmosaic/laurent.hpp"

using namespace knotmosaic;

namespace {

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-5, 5), exp(-6, 6), len(0, 5);
  LaurentPoly p;
  for (int i = len(rng); i > 0; --i) p.add_term(coef(rng), exp(rng));
  return p;
}

LaurentPoly t(int e, long long c = 1) { return LaurentPoly::monomial(c, e); }

}  // namespace

TEST_SUITE("laurent") {
  TEST_CASE("zero terms are dropped") {
    LaurentPoly p = t(2) + t(-1);
    p.add_term(-1, 2);
    CHECK(p == t(-1));
    CHECK((p - p).is_zero());
    CHECK(LaurentPoly(0).is_zero());
  }

  TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(11);
    for (int i = 0; i < 300; ++i) {
      const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == LaurentPoly{});
      CHECK(-(-a) == a);
      CHECK(a * LaurentPoly(1) == a);
    }
  }

  TEST_CASE("exact division inverts multiplication") {
    std::mt19937 rng(3);
    for (int i = 0; i < 200; ++i) {
      const LaurentPoly a = random_poly(rng);
      LaurentPoly b = random_poly(rng);
      if (b.is_zero()) b = t(1);
      CHECK((a * b).divide_exact(b) == a);
    }
    CHECK_THROWS_AS((t(2) + t(0)).divide_exact(t(1) + t(0)), std::domain_error);
    CHECK_THROWS_AS(t(1).divide_exact(LaurentPoly{}), std::domain_error);
  }

  TEST_CASE("substitution and evaluation") {
    const LaurentPoly p = t(-2, 3) + t(1) - t(0, 4);
    CHECK(p.substitute_power(-1) == t(2, 3) + t(-1) - t(0, 4));
    CHECK(p.substitute_power(2) == t(-4, 3) + t(2) - t(0, 4));
    CHECK(p.evaluate(1) == 0);
    CHECK(p.coefficient_sum() == 0);
    const LaurentPoly q = t(0) - t(1) + t(2);
    CHECK(q.evaluate(-1) == 3);
    CHECK(q.evaluate(2) == 3);
  }

  TEST_CASE("normalization and symmetry") {
    const LaurentPoly p = -(t(3) - t(4) + t(5));
    CHECK(p.normalized() == t(0) - t(1) + t(2));
    CHECK(p.normalized().is_palindromic());
    CHECK_FALSE((t(0) + t(1, 2)).is_palindromic());
    CHECK(LaurentPoly{}.normalized().is_zero());
  }

  TEST_CASE("text round trip") {
    const LaurentPoly p = t(4) + t(12) - t(16);
    CHECK(p.to_string("q") == "1*q^4 + 1*q^12 - 1*q^16");
    CHECK(LaurentPoly::parse(p.to_string("q"), "q") == p);
    CHECK(LaurentPoly{}.to_string("t") == "0");
    CHECK(LaurentPoly::parse("0", "t").is_zero());
    std::mt19937 rng(5);
    for (int i = 0; i < 200; ++i) {
      const LaurentPoly a = random_poly(rng);
      CHECK(LaurentPoly::parse(a.to_string("t"), "t") == a);
    }
    CHECK_THROWS_AS(LaurentPoly::parse("1*x^2", "t"), std::invalid_argument);
    CHECK_THROWS_AS(LaurentPoly::parse("1*t^", "t"), std::invalid_argument);
  }

  TEST_CASE("big coefficients") {
    LaurentPoly p = t(1, 1000000007) + t(0, 3);
    LaurentPoly acc(1);
    for (int i = 0; i < 8; ++i) acc = acc * p;
    CHECK(acc.leading_coefficient() > BigInt(1) << 200);
    for (int i = 0; i < 8; ++i) acc = acc.divide_exact(p);
    CHECK(acc == LaurentPoly(1));
  }
}
