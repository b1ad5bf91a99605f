#include <random>

#include <doctest.h>

#include "fixtures.hpp"
#include "quatpoly/certificate.hpp"
#include "quatpoly/quaternion.hpp"

using namespace quatpoly;
using fixtures::quat;

namespace {

Quaternion random_quaternion(const QuaternionAlgebra& A, std::mt19937_64& rng, long h = 6) {
  std::uniform_int_distribution<long> d(-h, h), den(1, 3);
  auto r = [&] { return make_rational(d(rng), den(rng)); };
  return Quaternion(A, r(), r(), r(), r());
}

Quaternion random_unit(const QuaternionAlgebra& A, std::mt19937_64& rng) {
  for (;;) {
    Quaternion g = random_quaternion(A, rng, 4);
    if (!is_zero(g)) return g;
  }
}

}  // namespace

TEST_CASE("algebra construction rejects split and degenerate parameters") {
  CHECK_NOTHROW(QuaternionAlgebra(-1, -1));
  CHECK_NOTHROW(QuaternionAlgebra(-1, -3));
  CHECK_THROWS_AS(QuaternionAlgebra(1, 1), SplitAlgebra);
  CHECK_THROWS_AS(QuaternionAlgebra(-1, 2), SplitAlgebra);
  CHECK_THROWS_AS(QuaternionAlgebra(0, 1), DegenerateInput);
  QuaternionAlgebra split = QuaternionAlgebra::unchecked(1, 1);
  CHECK_FALSE(split.is_division());
  CHECK(QuaternionAlgebra(-1, -1) == QuaternionAlgebra(-1, -1));
  CHECK(QuaternionAlgebra(-1, -1) != QuaternionAlgebra(-1, -3));
}

TEST_CASE("basis relations") {
  auto A = fixtures::hamilton();
  const auto i = Quaternion::basis(A, 1), j = Quaternion::basis(A, 2), k = Quaternion::basis(A, 3);
  CHECK(i * j == k);
  CHECK(j * i == -k);
  CHECK((i + j) * (i + j) == Quaternion::scalar(A, -2));
  CHECK(i * i == Quaternion::scalar(A, -1));
  CHECK(k * k == Quaternion::scalar(A, -1));

  QuaternionAlgebra B(-2, -5);
  const auto bi = Quaternion::basis(B, 1), bj = Quaternion::basis(B, 2), bk = Quaternion::basis(B, 3);
  CHECK(bi * bi == Quaternion::scalar(B, -2));
  CHECK(bj * bj == Quaternion::scalar(B, -5));
  CHECK(bk * bk == Quaternion::scalar(B, -10));
  CHECK(bj * bk == Quaternion::scalar(B, 5) * bi);
  CHECK(bk * bi == Quaternion::scalar(B, 2) * bj);
  CHECK_THROWS_AS(i * bi, AlgebraMismatch);
}

TEST_CASE("inverse") {
  auto A = fixtures::hamilton();
  CHECK(q_inv(Quaternion::basis(A, 1)) == -Quaternion::basis(A, 1));
  CHECK(q_inv(quat(A, 1, 0, 0, 1)) == Quaternion(A, make_rational(1, 2), 0, 0, make_rational(-1, 2)));
  CHECK(q_inv(Quaternion(Rational(2))) == Quaternion(make_rational(1, 2)));
  CHECK_THROWS_AS(q_inv(Quaternion::scalar(A, 0)), DivisionByZero);
}

TEST_CASE("inverse over a number field reports zero divisors") {
  auto A = fixtures::hamilton();
  NumberField L(make_ratpoly({2, 0, 1}));  // sqrt(-2) = i + j
  const NFElement s = NFElement::generator(L);
  const NFElement one(L, RatPoly::constant(1)), zero(L, RatPoly());
  // sqrt(-2) - (i + j) has norm -2 - (-1)(1) - (-1)(1) = 0
  LQuaternion z(A, s, -one, -one, zero);
  CHECK(is_zero(z.norm()));
  try {
    (void)q_inv(z);
    FAIL("expected ZeroDivisorEncountered");
  } catch (const ZeroDivisorEncountered& e) {
    CHECK(certificate_norm(-1, -1, L.minpoly(), e.witness()).is_zero());
  }
  LQuaternion u(A, one, s, zero, zero);  // norm 1 + s^2 = -1
  CHECK(u * q_inv(u) == LQuaternion(one));
  CHECK_THROWS_AS(q_inv(LQuaternion(A, zero, zero, zero, zero)), DivisionByZero);
}

TEST_CASE("characteristic polynomial") {
  auto A = fixtures::hamilton();
  CHECK(charpoly(Quaternion::basis(A, 1)).to_ratpoly() == make_ratpoly({1, 0, 1}));
  CHECK(charpoly(quat(A, 2, 0, 1, 0)).to_ratpoly() == make_ratpoly({5, -4, 1}));
  CHECK(charpoly(Quaternion::scalar(A, 3)).to_ratpoly() == make_ratpoly({9, -6, 1}));
  std::mt19937_64 rng(11);
  for (int n = 0; n < 200; ++n) {
    Quaternion a = random_quaternion(A, rng);
    CharPoly c = charpoly(a);
    // Cayley-Hamilton
    CHECK(is_zero(a * a - Quaternion(c.trace) * a + Quaternion(c.norm)));
  }
}

TEST_CASE("conjugacy") {
  auto A = fixtures::hamilton();
  const auto i = Quaternion::basis(A, 1), j = Quaternion::basis(A, 2);
  CHECK(is_conjugate(i, j));
  CHECK_FALSE(is_conjugate(i, Quaternion::scalar(A, 2) * i));
  CHECK(is_conjugate(Quaternion::scalar(A, 3), Quaternion::scalar(A, 3)));
  CHECK_FALSE(is_conjugate(Quaternion::scalar(A, 3), quat(A, 3, 0, 0, 1)));
  CHECK_THROWS_AS(is_conjugate(i, Quaternion::basis(QuaternionAlgebra(-1, -3), 1)), AlgebraMismatch);

  for (const auto& B : {A, QuaternionAlgebra(-1, -3), QuaternionAlgebra(3, -7)}) {
    std::mt19937_64 rng(5);
    std::vector<Quaternion> sample;
    for (int n = 0; n < 40; ++n) {
      std::uniform_int_distribution<long> d(-1, 1);
      sample.push_back(Quaternion(B, d(rng), d(rng), d(rng), d(rng)));
    }
    for (const auto& a : sample) {
      CHECK(is_conjugate(a, a));
      for (const auto& b : sample) {
        CHECK(is_conjugate(a, b) == is_conjugate(b, a));
        if (!is_conjugate(a, b)) continue;
        for (const auto& c : sample)
          if (is_conjugate(b, c)) CHECK(is_conjugate(a, c));
      }
    }
    for (int n = 0; n < 100; ++n) {
      Quaternion a = random_quaternion(B, rng), g = random_unit(B, rng);
      CHECK(is_conjugate(a, g * a * q_inv(g)));
    }
  }
}

TEST_CASE("randomized algebra identities") {
  for (const auto& A : {fixtures::hamilton(), QuaternionAlgebra(-1, -3), QuaternionAlgebra(2, 5)}) {
    std::mt19937_64 rng(2024);
    for (int n = 0; n < 1000; ++n) {
      Quaternion a = random_quaternion(A, rng), b = random_quaternion(A, rng);
      CHECK((a * b).norm() == a.norm() * b.norm());
      CHECK((a + b).trace() == a.trace() + b.trace());
      CHECK((a * b).conj() == b.conj() * a.conj());
      CHECK(a.conj().conj() == a);
      CHECK(a * a.conj() == Quaternion::scalar(A, a.norm()));
      if (!is_zero(a)) {
        CHECK(a * q_inv(a) == Quaternion::scalar(A, 1));
        CHECK(q_inv(a) * a == Quaternion::scalar(A, 1));
      }
    }
  }
}

TEST_CASE("central products commute") {
  // b = c conj(a) gives a b = c N(a), central
  auto A = QuaternionAlgebra(-1, -3);
  std::mt19937_64 rng(99);
  for (int n = 0; n < 300; ++n) {
    Quaternion a = random_unit(A, rng);
    std::uniform_int_distribution<long> d(1, 9);
    Quaternion b = Quaternion::scalar(A, make_rational(d(rng), d(rng))) * a.conj();
    Quaternion ab = a * b;
    REQUIRE(ab.is_central());
    CHECK(ab == b * a);
    CHECK(Quaternion(a.norm()) * b == ab * a.conj());
  }
}

TEST_CASE("quadratic embeddings") {
  auto A = fixtures::hamilton();
  CHECK(embed_quadratic(A, -1) * embed_quadratic(A, -1) == Quaternion::scalar(A, -1));
  Quaternion e2 = embed_quadratic(A, -2);
  CHECK(e2 * e2 == Quaternion::scalar(A, -2));
  CHECK(is_conjugate(e2, quat(A, 0, 1, 1, 0)));
  CHECK_THROWS_AS(embed_quadratic(A, 2), EmbeddingObstructed);
  CHECK_THROWS_AS(embed_quadratic(A, 4), DegenerateInput);
  for (const auto& B : {A, QuaternionAlgebra(-1, -3), QuaternionAlgebra(3, -7), QuaternionAlgebra(-2, 5)}) {
    for (long d = -40; d <= 40; ++d) {
      if (d == 0 || exact_sqrt(Rational(d)) || squarefree_part(Rational(d)) != d) continue;
      if (!quadratic_field_splits(B.alpha(), B.beta(), d)) {
        CHECK_THROWS_AS(embed_quadratic(B, d), EmbeddingObstructed);
        continue;
      }
      Quaternion e = embed_quadratic(B, d);
      CHECK(is_zero(e[0]));
      CHECK(e * e == Quaternion::scalar(B, d));
    }
  }
}

TEST_CASE("printing") {
  auto A = fixtures::hamilton();
  CHECK(to_string(quat(A, -2, 1, -1, -2)) == "-2 + i - j - 2k");
  CHECK(to_string(Quaternion(A, 0, make_rational(3, 2), 0, 0)) == "3/2*i");
  CHECK(to_string(Quaternion::scalar(A, 0)) == "0");
  CHECK(to_string(Quaternion::scalar(A, make_rational(-5, 7))) == "-5/7");
}

TEST_CASE("certificate files round-trip") {
  CertificateRecord r{-1, -1, fixtures::quartic_example(), fixtures::quartic_certificate()};
  const std::string text = certificate_to_json(r);
  auto back = certificates_from_json(text);
  REQUIRE(back.size() == 1);
  CHECK(back[0] == r);
  CHECK(certificate_to_json(back[0]) == text);

  auto two = certificates_from_json("[" + text + "," + text + "]");
  CHECK(two.size() == 2);

  auto loose = certificates_from_json(
      R"({"alpha": -1, "beta": "-3", "minpoly": [1, 0, 1], "q0": ["1/2"], "q1": [], "q2": [0, "7/3"], "q3": []})");
  CHECK(loose[0].beta == -3);
  CHECK(loose[0].certificate.q[0] == RatPoly::constant(make_rational(1, 2)));
  CHECK(loose[0].certificate.q[2] == RatPoly({Rational(0), make_rational(7, 3)}));

  CHECK_THROWS_AS(certificates_from_json("{"), InvalidCertificate);
  CHECK_THROWS_AS(certificates_from_json(R"({"alpha": -1})"), InvalidCertificate);
  CHECK_THROWS_AS(certificates_from_json(R"({"alpha": "x", "beta": 1, "minpoly": [], "q0": [], "q1": [], "q2": [], "q3": []})"),
                  InvalidCertificate);

  CertificateStore store;
  store.add(r);
  CHECK(store.find(-1, -1, fixtures::quartic_example()) == r.certificate);
  CHECK_FALSE(store.find(-1, -3, fixtures::quartic_example()));
}
