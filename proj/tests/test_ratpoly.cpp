#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"
#include "quatpoly/errors.hpp"
#include "quatpoly/ratpoly.hpp"

using namespace quatpoly;

namespace {

RatPoly P(std::initializer_list<long> c) { return make_ratpoly(c); }

// Determinant of the Sylvester matrix by Gaussian elimination over Q.
Rational sylvester_resultant(const RatPoly& a, const RatPoly& b) {
  const int m = a.degree(), n = b.degree();
  const int size = m + n;
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, 0));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[r][r + i] = a[m - i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[n + r][r + i] = b[n - i];
  Rational det = 1;
  for (int c = 0; c < size; ++c) {
    int piv = c;
    while (piv < size && is_zero(s[piv][c])) ++piv;
    if (piv == size) return 0;
    if (piv != c) {
      std::swap(s[piv], s[c]);
      det = -det;
    }
    det *= s[c][c];
    for (int r = c + 1; r < size; ++r) {
      if (is_zero(s[r][c])) continue;
      Rational f = s[r][c] / s[c][c];
      for (int k = c; k < size; ++k) s[r][k] -= f * s[c][k];
    }
  }
  return det;
}

// Sign variations of the coefficient sequence.
int variations(const RatPoly& p) {
  int count = 0, last = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    int s = sgn(p[i]);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// Roots in the open interval (a, b) via Descartes' rule on the Moebius
// transform (1+x)^n p((a + b x)/(1 + x)), bisecting until the bound is 0 or 1.
int roots_in_interval(const RatPoly& p, const Rational& a, const Rational& b) {
  const int n = p.degree();
  RatPoly num = RatPoly::constant(b) * RatPoly::x() + RatPoly::constant(a);
  RatPoly den = RatPoly::x() + RatPoly::constant(1);
  RatPoly t;
  for (int i = 0; i <= n; ++i) {
    RatPoly term = RatPoly::constant(p[i]) * pow(num, i) * pow(den, n - i);
    t = t + term;
  }
  int v = variations(t);
  if (v <= 1) return v;
  Rational mid = (a + b) / 2;
  int at_mid = is_zero(p(mid)) ? 1 : 0;
  return roots_in_interval(p, a, mid) + at_mid + roots_in_interval(p, mid, b);
}

int bisection_real_roots(const RatPoly& p) {
  // Cauchy bound
  Rational bound = 0;
  for (int i = 0; i < p.degree(); ++i) bound = std::max(bound, Rational(abs(p[i] / p.leading())));
  bound += 1;
  return roots_in_interval(p, -bound, bound);
}

RatPoly random_poly(std::mt19937_64& rng, int degree, int height) {
  std::uniform_int_distribution<long> coef(-height, height);
  std::vector<Rational> c(degree + 1);
  for (auto& v : c) v = coef(rng);
  if (is_zero(c.back())) c.back() = 1;
  return RatPoly(c);
}

}  // namespace

TEST_CASE("gcd") {
  CHECK(rp_gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
  CHECK(rp_gcd(P({1, 0, 1}), P({1, 0, 1})) == P({1, 0, 1}));
  CHECK(rp_gcd(P({0, 0, 3}), RatPoly()) == P({0, 0, 1}));
  CHECK_THROWS_AS(rp_gcd(RatPoly(), RatPoly()), DegenerateInput);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    RatPoly a = random_poly(rng, 1 + trial % 5, 6);
    RatPoly b = random_poly(rng, 1 + trial % 4, 6);
    RatPoly c = random_poly(rng, 1 + trial % 3, 4).monic();
    RatPoly g = rp_gcd(a, b);
    CHECK((a % g).is_zero());
    CHECK((b % g).is_zero());
    CHECK(rp_gcd(a * c, b * c) == c * g);
  }
}

TEST_CASE("resultant and discriminant against the Sylvester determinant") {
  CHECK(rp_discriminant(P({1, 0, 1})) == -4);
  CHECK(rp_discriminant(P({-2, 0, 1})) == 8);
  RatPoly central = P({6, 16, 11, 0, 1});
  Rational syl = sylvester_resultant(central, central.derivative());
  CHECK(rp_discriminant(central) == syl);  // sign factor +1 for n = 4, lc = 1
  CHECK(rp_discriminant(central) == Rational(203872));
  CHECK_THROWS_AS(rp_discriminant(P({5})), DegenerateInput);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    RatPoly a = random_poly(rng, 1 + trial % 6, 9);
    RatPoly b = random_poly(rng, 1 + (trial / 6) % 5, 9);
    CHECK(rp_resultant(a, b) == sylvester_resultant(a, b));
  }
}

TEST_CASE("squarefree decomposition") {
  RatPoly f = P({1, 1}) * pow(P({-2, 0, 1}), 2) * pow(P({0, 1}), 3);
  auto d = rp_squarefree_decomposition(RatPoly::constant(5) * f);
  REQUIRE(d.size() == 3);
  CHECK(d[0] == std::make_pair(P({1, 1}), 1));
  CHECK(d[1] == std::make_pair(P({-2, 0, 1}), 2));
  CHECK(d[2] == std::make_pair(P({0, 1}), 3));
  CHECK(rp_is_squarefree(P({1, 0, 1})));
  CHECK_FALSE(rp_is_squarefree(f));
}

TEST_CASE("Sturm real-root counts") {
  CHECK(rp_real_root_count(P({1, 0, 1})) == 0);
  CHECK(rp_real_root_count(P({-2, 0, 1})) == 2);
  CHECK(rp_real_root_count(P({-2, 0, 0, 1})) == 1);
  CHECK_THROWS_AS(rp_real_root_count(P({1, 2, 1})), NotSquarefree);

  std::mt19937_64 rng(2024);
  int checked = 0;
  while (checked < 1000) {
    RatPoly p = random_poly(rng, 3 + checked % 2, 10);
    if (!rp_is_squarefree(p)) continue;
    CHECK(rp_real_root_count(p) == bisection_real_roots(p));
    ++checked;
  }
}

TEST_CASE("factorization over Q") {
  auto f = rp_factor(P({-1, 0, 0, 0, 1}));
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0].first == P({-1, 1}));
  CHECK(f.factors[1].first == P({1, 1}));
  CHECK(f.factors[2].first == P({1, 0, 1}));

  // norm of the central-free part of the degree-8 example
  RatPoly n = P({1, 0, 1}) * P({5, -4, 1}) * P({5, 0, -3, 0, 1});
  auto g = rp_factor(n);
  REQUIRE(g.factors.size() == 3);
  CHECK(g.content == 1);
  CHECK(g.factors[0] == std::make_pair(P({1, 0, 1}), 1));
  CHECK(g.factors[1] == std::make_pair(P({5, -4, 1}), 1));
  CHECK(g.factors[2] == std::make_pair(P({5, 0, -3, 0, 1}), 1));

  CHECK(rp_is_irreducible(P({6, 16, 11, 0, 1})));
  CHECK(rp_is_irreducible(P({-2, 0, 0, 1})));
  CHECK_FALSE(rp_is_irreducible(P({4, 0, 0, 0, 1})));  // (x^2+2x+2)(x^2-2x+2)
  CHECK_THROWS_AS(rp_factor(RatPoly()), DegenerateInput);

  auto c = rp_factor(RatPoly::constant(Rational(-3, 4)));
  CHECK(c.content == Rational(-3, 4));
  CHECK(c.factors.empty());
}

TEST_CASE("monic integer quartic without quadratic or linear factors") {
  // x^4 + 11x^2 + 16x + 6: rational roots must divide 6; a quadratic split
  // (x^2+ax+b)(x^2-ax+c) needs bc = 6, a(c-b) = 16, b + c - a^2 = 11.
  RatPoly p = P({6, 16, 11, 0, 1});
  for (long r : {1L, -1L, 2L, -2L, 3L, -3L, 6L, -6L}) CHECK_FALSE(is_zero(p(Rational(r))));
  bool splits = false;
  for (long b : {1L, -1L, 2L, -2L, 3L, -3L, 6L, -6L}) {
    long c = 6 / b;
    for (long a = -16; a <= 16; ++a)
      if (a * (c - b) == 16 && b + c - a * a == 11) splits = true;
  }
  CHECK_FALSE(splits);
  CHECK(rp_factor(p).factors.size() == 1);
}

TEST_CASE("planted factorizations are recovered") {
  const std::vector<RatPoly> irreducibles = {
      P({-3, 1}),        P({2, 1}),          P({1, 0, 1}),     P({-2, 0, 1}),
      P({1, 1, 1}),      P({-2, 0, 0, 1}),   P({1, 1, 0, 1}),  P({1, 0, 0, 0, 1}),
      P({5, 0, -3, 0, 1}), P({6, 16, 11, 0, 1}), P({5, -4, 1}), P({3, 0, 0, 0, 0, 1, 0}),
      P({-1, -1, 0, 0, 0, 1}), P({2, 0, 0, 0, 0, 0, 1}), P({1, 1, 1, 1, 1}),
  };
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    std::map<int, int> planted;
    RatPoly product = RatPoly::constant(make_rational(static_cast<long>(rng() % 7) + 1, 3));
    const int count = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < count; ++k) {
      int idx = static_cast<int>(rng() % irreducibles.size());
      ++planted[idx];
      product = product * irreducibles[idx];
    }
    auto f = rp_factor(product);
    CHECK(f.expand() == product);
    std::vector<std::pair<RatPoly, int>> expected;
    for (auto [idx, mult] : planted) expected.emplace_back(irreducibles[idx].monic(), mult);
    std::sort(expected.begin(), expected.end(),
              [](const auto& a, const auto& b) { return ratpoly_less(a.first, b.first); });
    CHECK(f.factors == expected);
  }

  // products of random linear and quadratic integer factors
  std::uniform_int_distribution<long> coef(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    RatPoly product = RatPoly::constant(1);
    std::map<std::vector<Rational>, int> planted;
    for (int k = 0; k < 4; ++k) {
      RatPoly q;
      if (rng() % 2 == 0) {
        q = P({coef(rng), 1});
      } else {
        long b = coef(rng), c = coef(rng);
        if (exact_sqrt(Integer(b * b - 4 * c))) continue;
        q = P({c, b, 1});
      }
      ++planted[q.coeffs()];
      product = product * q;
    }
    auto f = rp_factor(product);
    CHECK(f.expand() == product);
    REQUIRE(f.factors.size() == planted.size());
    for (const auto& [poly, mult] : f.factors) CHECK(planted[poly.coeffs()] == mult);
  }
}
