#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>

#include "quatpoly/errors.hpp"
#include "quatpoly/numberfield.hpp"
#include "quatpoly/quadform.hpp"
#include "quatpoly/rational.hpp"
#include "quatpoly/ratpoly.hpp"

namespace quatpoly {

/// The quaternion algebra (alpha, beta / Q): i^2 = alpha, j^2 = beta,
/// ij = k = -ji. A cheap shared handle; copies compare equal.
class QuaternionAlgebra {
 public:
  /// Throws DegenerateInput for a zero parameter and SplitAlgebra when the
  /// algebra is isomorphic to M_2(Q).
  QuaternionAlgebra(const Rational& alpha, const Rational& beta);

  /// No division check; only for reporting split algebras.
  static QuaternionAlgebra unchecked(const Rational& alpha, const Rational& beta);

  const Rational& alpha() const { return d_->alpha; }
  const Rational& beta() const { return d_->beta; }
  const Rational& alpha_beta() const { return d_->alpha_beta; }
  bool is_division() const { return d_->division; }

  /// "(alpha, beta / Q)".
  std::string to_string() const;

  friend bool operator==(const QuaternionAlgebra& a, const QuaternionAlgebra& b) {
    return a.d_ == b.d_ || (a.alpha() == b.alpha() && a.beta() == b.beta());
  }
  friend bool operator!=(const QuaternionAlgebra& a, const QuaternionAlgebra& b) { return !(a == b); }

 private:
  struct Data {
    Rational alpha, beta, alpha_beta;
    bool division;
  };
  QuaternionAlgebra() = default;
  std::shared_ptr<const Data> d_;
};

/// Raised when an element of the algebra over L with vanishing norm is
/// inverted; the element itself is a zero divisor and is kept as a witness.
class ZeroDivisorEncountered : public Error {
 public:
  ZeroDivisorEncountered(const std::string& what, ZeroDivisorCertificate witness)
      : Error(what), witness_(std::move(witness)) {}
  const ZeroDivisorCertificate& witness() const { return witness_; }

 private:
  ZeroDivisorCertificate witness_;
};

namespace detail {
inline RatPoly base_as_poly(const Rational& c) { return RatPoly::constant(c); }
inline RatPoly base_as_poly(const NFElement& c) { return c.poly(); }
}  // namespace detail

/// t + x i + y j + z k with coordinates in F (Rational, or NFElement for the
/// algebra tensored with a number field). A quaternion built from a bare
/// scalar has no algebra attached; it is central and adopts the algebra of
/// whatever it is combined with.
template <class F>
class QuaternionT {
 public:
  QuaternionT() = default;
  QuaternionT(const F& scalar) : c_{scalar, F(), F(), F()} {}
  QuaternionT(const QuaternionAlgebra& A, const F& t, const F& x, const F& y, const F& z)
      : algebra_(A), c_{t, x, y, z} {}

  static QuaternionT scalar(const QuaternionAlgebra& A, const F& t) { return {A, t, F(), F(), F()}; }
  /// Basis element 1, i, j or k for index 0..3.
  static QuaternionT basis(const QuaternionAlgebra& A, int index) {
    QuaternionT q(A, F(), F(), F(), F());
    q.c_[static_cast<std::size_t>(index)] = F(Rational(1));
    return q;
  }

  const std::optional<QuaternionAlgebra>& algebra() const { return algebra_; }
  const F& operator[](std::size_t i) const { return c_[i]; }
  const std::array<F, 4>& coords() const { return c_; }

  bool is_central() const { return is_zero(c_[1]) && is_zero(c_[2]) && is_zero(c_[3]); }

  QuaternionT conj() const { return with_coords(c_[0], -c_[1], -c_[2], -c_[3]); }

  F trace() const { return c_[0] + c_[0]; }

  /// t^2 - alpha x^2 - beta y^2 + alpha beta z^2.
  F norm() const {
    F n = c_[0] * c_[0];
    if (is_central()) return n;
    const QuaternionAlgebra& A = *algebra_;
    return n - F(A.alpha()) * c_[1] * c_[1] - F(A.beta()) * c_[2] * c_[2] + F(A.alpha_beta()) * c_[3] * c_[3];
  }

  QuaternionT operator-() const { return with_coords(-c_[0], -c_[1], -c_[2], -c_[3]); }

  friend QuaternionT operator+(const QuaternionT& a, const QuaternionT& b) {
    QuaternionT r;
    r.algebra_ = common_algebra(a, b);
    for (std::size_t i = 0; i < 4; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }
  friend QuaternionT operator-(const QuaternionT& a, const QuaternionT& b) {
    QuaternionT r;
    r.algebra_ = common_algebra(a, b);
    for (std::size_t i = 0; i < 4; ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }
  friend QuaternionT operator*(const QuaternionT& a, const QuaternionT& b) {
    QuaternionT r;
    r.algebra_ = common_algebra(a, b);
    const auto& x = a.c_;
    const auto& y = b.c_;
    if (a.is_central()) {
      for (std::size_t i = 0; i < 4; ++i) r.c_[i] = x[0] * y[i];
      return r;
    }
    if (b.is_central()) {
      for (std::size_t i = 0; i < 4; ++i) r.c_[i] = x[i] * y[0];
      return r;
    }
    const F al(r.algebra_->alpha()), be(r.algebra_->beta()), ab(r.algebra_->alpha_beta());
    r.c_[0] = x[0] * y[0] + al * x[1] * y[1] + be * x[2] * y[2] - ab * x[3] * y[3];
    r.c_[1] = x[0] * y[1] + x[1] * y[0] - be * x[2] * y[3] + be * x[3] * y[2];
    r.c_[2] = x[0] * y[2] + x[2] * y[0] + al * x[1] * y[3] - al * x[3] * y[1];
    r.c_[3] = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1];
    return r;
  }

  friend bool operator==(const QuaternionT& a, const QuaternionT& b) {
    if (a.algebra_ && b.algebra_ && *a.algebra_ != *b.algebra_) return false;
    return a.c_ == b.c_;
  }
  friend bool operator!=(const QuaternionT& a, const QuaternionT& b) { return !(a == b); }

 private:
  static std::optional<QuaternionAlgebra> common_algebra(const QuaternionT& a, const QuaternionT& b) {
    if (!a.algebra_) return b.algebra_;
    if (!b.algebra_) return a.algebra_;
    if (*a.algebra_ != *b.algebra_)
      throw AlgebraMismatch("quaternions from " + a.algebra_->to_string() + " and " + b.algebra_->to_string());
    return a.algebra_;
  }

  QuaternionT with_coords(F t, F x, F y, F z) const {
    QuaternionT r;
    r.algebra_ = algebra_;
    r.c_ = {std::move(t), std::move(x), std::move(y), std::move(z)};
    return r;
  }

  std::optional<QuaternionAlgebra> algebra_;
  std::array<F, 4> c_{};
};

using Quaternion = QuaternionT<Rational>;
/// Elements of the algebra tensored with a number field L.
using LQuaternion = QuaternionT<NFElement>;

template <class F>
bool is_zero(const QuaternionT<F>& q) {
  for (const auto& c : q.coords())
    if (!is_zero(c)) return false;
  return true;
}

/// conj(a) / N(a). Throws DivisionByZero for zero, and
/// ZeroDivisorEncountered for a nonzero element of vanishing norm.
template <class F>
QuaternionT<F> q_inv(const QuaternionT<F>& a) {
  const F n = a.norm();
  if (is_zero(n)) {
    if (is_zero(a)) throw DivisionByZero("inverse of the zero quaternion");
    ZeroDivisorCertificate w;
    for (std::size_t i = 0; i < 4; ++i) w.q[i] = detail::base_as_poly(a[i]);
    throw ZeroDivisorEncountered("quaternion of norm zero has no inverse", std::move(w));
  }
  const F inv = F(Rational(1)) / n;
  return QuaternionT<F>(inv) * a.conj();
}

/// x^2 - trace x + norm.
struct CharPoly {
  Rational trace, norm;
  RatPoly to_ratpoly() const;
  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

CharPoly charpoly(const Quaternion& a);

/// Conjugacy by Dickson's criterion: central elements are alone in their
/// class, non-central ones are conjugate iff trace and norm agree.
bool is_conjugate(const Quaternion& a, const Quaternion& b);

/// A pure quaternion squaring to d. Throws EmbeddingObstructed when
/// Q(sqrt d) does not split A, and DegenerateInput when d is a square.
Quaternion embed_quadratic(const QuaternionAlgebra& A, const Integer& d);

/// "-2 + i - j - 2k"; fractions are written "3/2*i".
std::string to_string(const Quaternion& q);

}  // namespace quatpoly
