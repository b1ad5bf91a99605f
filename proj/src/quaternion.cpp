#include "quatpoly/quaternion.hpp"

namespace quatpoly {

QuaternionAlgebra::QuaternionAlgebra(const Rational& alpha, const Rational& beta) {
  *this = unchecked(alpha, beta);
  if (!is_division()) throw SplitAlgebra(to_string() + " is split: it is isomorphic to M_2(Q)");
}

QuaternionAlgebra QuaternionAlgebra::unchecked(const Rational& alpha, const Rational& beta) {
  if (is_zero(alpha) || is_zero(beta)) throw DegenerateInput("quaternion algebra parameters must be nonzero");
  QuaternionAlgebra A;
  A.d_ = std::make_shared<const Data>(Data{alpha, beta, alpha * beta, quatpoly::is_division(alpha, beta)});
  return A;
}

std::string QuaternionAlgebra::to_string() const {
  return "(" + quatpoly::to_string(alpha()) + ", " + quatpoly::to_string(beta()) + " / Q)";
}

RatPoly CharPoly::to_ratpoly() const { return RatPoly({norm, -trace, Rational(1)}); }

CharPoly charpoly(const Quaternion& a) { return {a.trace(), a.norm()}; }

bool is_conjugate(const Quaternion& a, const Quaternion& b) {
  if (a.algebra() && b.algebra() && *a.algebra() != *b.algebra())
    throw AlgebraMismatch("conjugacy test across different algebras");
  if (a.is_central() || b.is_central()) return a == b;
  return charpoly(a) == charpoly(b);
}

Quaternion embed_quadratic(const QuaternionAlgebra& A, const Integer& d) {
  if (exact_sqrt(Rational(d))) throw DegenerateInput(d.get_str() + " is a square");
  if (!quadratic_field_splits(A.alpha(), A.beta(), d))
    throw EmbeddingObstructed("Q(sqrt " + d.get_str() + ") does not embed in " + A.to_string());
  auto v = represent_pure(A.alpha(), A.beta(), Rational(d));
  if (!v) throw InternalInvariantViolation("splitting field with no pure square root of " + d.get_str());
  return Quaternion(A, 0, (*v)[0], (*v)[1], (*v)[2]);
}

std::string to_string(const Quaternion& q) {
  static const char* const kBasis[] = {"", "i", "j", "k"};
  std::string out;
  for (std::size_t b = 0; b < 4; ++b) {
    const Rational& c = q[b];
    if (is_zero(c)) continue;
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (b == 0) {
      out += to_string(mag);
    } else if (mag != 1) {
      out += to_string(mag);
      if (mag.get_den() != 1) out += "*";
      out += kBasis[b];
    } else {
      out += kBasis[b];
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace quatpoly
