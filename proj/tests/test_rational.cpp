#include "doctest.h"
#include "quatpoly/errors.hpp"
#include "quatpoly/rational.hpp"

using namespace quatpoly;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational(" -4 ") == Rational(-4));
  CHECK(parse_rational("+7/-14") == Rational(-1, 2));
  CHECK(to_fraction_string(Rational(5)) == "5/1");
  CHECK(to_fraction_string(make_rational(-3, 9)) == "-1/3");
  CHECK(to_string(make_rational(-3, 9)) == "-1/3");
  CHECK(to_string(make_rational(8, 4)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), DivisionByZero);
  CHECK_THROWS_AS(parse_rational("1.5"), SyntaxError);
  CHECK_THROWS_AS(parse_rational(""), SyntaxError);
}

TEST_CASE("exact square roots") {
  CHECK(exact_sqrt(Integer(144)).value() == 12);
  CHECK_FALSE(exact_sqrt(Integer(-4)).has_value());
  CHECK(exact_sqrt(Rational(9, 25)).value() == Rational(3, 5));
  CHECK_FALSE(exact_sqrt(Rational(2, 9)).has_value());
}

TEST_CASE("integer factorization") {
  auto f = factor_integer(Integer(-360));
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::make_pair(Integer(2), 3));
  CHECK(f[1] == std::make_pair(Integer(3), 2));
  CHECK(f[2] == std::make_pair(Integer(5), 1));
  // product of two primes beyond the trial-division range
  Integer big = Integer("1000000007") * Integer("998244353");
  auto g = factor_integer(big);
  REQUIRE(g.size() == 2);
  CHECK(g[0].first == Integer("998244353"));
  CHECK(g[1].first == Integer("1000000007"));
  CHECK(factor_integer(Integer(1)).empty());
}

TEST_CASE("squarefree part and valuations") {
  CHECK(squarefree_part(Rational(12)) == 3);
  CHECK(squarefree_part(Rational(-18, 5)) == -10);
  CHECK(squarefree_part(Rational(1, 4)) == 1);
  CHECK(valuation(Integer(48), Integer(2)) == 4);
  CHECK(valuation(Rational(5, 27), Integer(3)) == -3);
}

TEST_CASE("square roots modulo primes agree with brute force") {
  for (long p : {3L, 5L, 7L, 13L, 17L, 41L, 97L}) {
    for (long a = 0; a < p; ++a) {
      bool residue = false;
      for (long x = 0; x < p; ++x)
        if ((x * x) % p == a) residue = true;
      auto r = sqrt_mod_prime(Integer(a), Integer(p));
      CHECK(r.has_value() == residue);
      if (r) {
        Integer sq = (*r * *r - a) % p;
        CHECK(sq == 0);
      }
      if (a != 0) CHECK(legendre(Integer(a), Integer(p)) == (residue ? 1 : -1));
    }
  }
  auto r = sqrt_mod_squarefree(Integer(-1), Integer(5 * 13 * 17));
  REQUIRE(r.has_value());
  CHECK((*r * *r + 1) % (5 * 13 * 17) == 0);
  CHECK_FALSE(sqrt_mod_squarefree(Integer(2), Integer(15)).has_value());
}
