#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "quatpoly/place.hpp"
#include "quatpoly/ratpoly.hpp"

namespace quatpoly {

/// (e, f) of one prime of the maximal order above a rational place. For the
/// infinite place a real embedding is (1, 1) and a complex pair is (2, 1).
struct LocalFactor {
  int e = 1;
  int f = 1;
  int local_degree() const { return e * f; }
  friend bool operator==(const LocalFactor&, const LocalFactor&) = default;
};

struct SplittingType {
  Place place = Place::infinite();
  std::vector<LocalFactor> factors;
};

/// L = Q[x]/(minpoly), minpoly monic irreducible. A cheap shared handle:
/// copies refer to the same field and share its caches.
class NumberField {
 public:
  /// Throws PreconditionViolation unless minpoly is monic and irreducible.
  explicit NumberField(const RatPoly& minpoly);
  /// Skips the irreducibility check; the caller guarantees it.
  static NumberField unchecked(const RatPoly& minpoly);

  const RatPoly& minpoly() const;
  int degree() const;

  friend bool operator==(const NumberField& a, const NumberField& b);
  friend bool operator!=(const NumberField& a, const NumberField& b) { return !(a == b); }

 private:
  struct Impl;
  NumberField() = default;
  std::shared_ptr<Impl> impl_;

  friend class NFElement;
  friend SplittingType nf_local_splitting(const NumberField& L, const Place& place);
};

/// Element of a number field, stored as a polynomial in the generator of
/// degree < [L:Q]. An element without a field is a rational constant; it
/// adopts the field of whatever it is combined with.
class NFElement {
 public:
  NFElement() = default;
  NFElement(const Rational& c);
  NFElement(const NumberField& L, const RatPoly& value);
  static NFElement generator(const NumberField& L);

  bool has_field() const { return field_.has_value(); }
  /// Throws PreconditionViolation for a field-free constant.
  const NumberField& field() const;
  /// Representative polynomial, reduced modulo the minimal polynomial.
  const RatPoly& poly() const { return value_; }
  /// Coordinates on 1, theta, ..., theta^(n-1); n = 1 without a field.
  std::vector<Rational> coords() const;

  bool is_rational() const { return value_.degree() <= 0; }
  Rational constant_term() const { return value_.coeff(0); }

  NFElement operator-() const;
  friend NFElement operator+(const NFElement& a, const NFElement& b);
  friend NFElement operator-(const NFElement& a, const NFElement& b);
  friend NFElement operator*(const NFElement& a, const NFElement& b);
  /// Throws DivisionByZero.
  friend NFElement operator/(const NFElement& a, const NFElement& b);
  friend bool operator==(const NFElement& a, const NFElement& b) { return a.value_ == b.value_; }
  friend bool operator!=(const NFElement& a, const NFElement& b) { return !(a == b); }

 private:
  static std::optional<NumberField> common_field(const NFElement& a, const NFElement& b);

  std::optional<NumberField> field_;
  RatPoly value_;
};

inline bool is_zero(const NFElement& a) { return a.poly().is_zero(); }

using NFPoly = Poly<NFElement>;

/// Inverse by extended Euclid against the minimal polynomial.
/// Throws DivisionByZero.
NFElement nf_inv(const NFElement& a);

/// s in L with s^2 = d, or nullopt when d is not a square in L.
/// Throws DegenerateInput for d = 0.
std::optional<NFElement> nf_sqrt(const Rational& d, const NumberField& L);

/// s with s^2 = g for g in L, or nullopt. Throws DegenerateInput for g = 0
/// or a field-free g.
std::optional<NFElement> nf_sqrt_element(const NFElement& g);

/// Norm from L to Q.
Rational nf_norm(const NFElement& a);

/// Norm to Q[y] of a polynomial over L: the product of its conjugates.
RatPoly nf_norm_poly(const NFPoly& g, const NumberField& L);

/// Squarefree d != 1 with Q(sqrt d) inside L, ordered by |d| with the
/// positive value first. Empty for odd degree.
std::vector<Integer> nf_quadratic_subfields(const NumberField& L);

SplittingType nf_local_splitting(const NumberField& L, const Place& place);

/// Whether (alpha, beta / Q) tensor L is a matrix algebra over L.
/// Throws SplitAlgebra when (alpha, beta / Q) itself splits.
bool nf_splits_quaternion(const Rational& alpha, const Rational& beta, const NumberField& L);

/// Q(sqrt d) as Q[t]/(t^2 - d). Throws DegenerateInput when d is a square.
NumberField quadratic_field(const Integer& d);

/// Monic irreducible factors over Q(sqrt d) of a monic irreducible p in Q[x],
/// ordered as the matching norm factors over Q. The coefficient field is
/// quadratic_field(d). Throws DegenerateInput when d is a square.
std::vector<NFPoly> nf_factor_over_quadratic(const RatPoly& p, const Integer& d);

/// Lift of a rational polynomial to L[y].
NFPoly nf_lift(const RatPoly& p, const NumberField& L);

}  // namespace quatpoly
