#pragma once

#include <array>
#include <initializer_list>
#include <vector>

#include "quatpoly/qpoly.hpp"

namespace fixtures {

using namespace quatpoly;

inline Quaternion quat(const QuaternionAlgebra& A, long t, long x, long y, long z) {
  return Quaternion(A, Rational(t), Rational(x), Rational(y), Rational(z));
}

/// Coefficient 4-tuples, lowest degree first.
inline QPoly qpoly(const QuaternionAlgebra& A, std::initializer_list<std::array<long, 4>> rows) {
  std::vector<Quaternion> c;
  for (const auto& r : rows) c.push_back(quat(A, r[0], r[1], r[2], r[3]));
  return QPoly(A, std::move(c));
}

inline QuaternionAlgebra hamilton() { return QuaternionAlgebra(-1, -1); }

/// The degree-8 polynomial with leading coefficient 1 + k and central part
/// x^4 + 11x^2 + 16x + 6.
inline QPoly degree8_example(const QuaternionAlgebra& A) {
  return qpoly(A, {{18, -36, -12, -6},
                   {48, -90, -2, 8},
                   {21, -50, 58, 53},
                   {-44, 17, 49, 32},
                   {-45, 10, -18, -27},
                   {-6, 12, -6, -2},
                   {9, 0, 0, 11},
                   {-2, 1, -1, -2},
                   {1, 0, 0, 1}});
}

inline RatPoly quartic_example() { return make_ratpoly({6, 16, 11, 0, 1}); }

/// Known zero divisor for the quartic over (-1, -1 / Q).
inline ZeroDivisorCertificate quartic_certificate() {
  ZeroDivisorCertificate c;
  c.q[0] = RatPoly();
  c.q[1] = make_ratpoly({154, 211, -12, 19});
  c.q[2] = make_ratpoly({97, 136, -11, 13});
  c.q[3] = make_ratpoly({53});
  return c;
}

/// x^2 - (3i - j + k) x - 2i + j - k.
inline QPoly quartic_factor(const QuaternionAlgebra& A) {
  return qpoly(A, {{0, -2, 1, -1}, {0, -3, 1, -1}, {1, 0, 0, 0}});
}

}  // namespace fixtures
