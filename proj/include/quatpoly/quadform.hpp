#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "quatpoly/numberfield.hpp"
#include "quatpoly/place.hpp"
#include "quatpoly/ratpoly.hpp"

namespace quatpoly {

/// Diagonal quadratic form <a_1, ..., a_n>, all entries nonzero.
using DiagonalForm = std::vector<Rational>;

/// A set of places of Q; for a ramification set the size is even.
struct PlaceSet {
  std::vector<Integer> finite_primes;  // ascending
  bool infinite = false;

  bool empty() const { return finite_primes.empty() && !infinite; }
  std::size_t size() const { return finite_primes.size() + (infinite ? 1 : 0); }
  bool contains(const Place& v) const;
  std::vector<Place> places() const;
};

/// (a, b)_v in {+1, -1}. Throws DegenerateInput when a or b is zero.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

/// Places where (alpha, beta / Q) ramifies.
PlaceSet ramified_places(const Rational& alpha, const Rational& beta);

bool is_division(const Rational& alpha, const Rational& beta);

/// Whether Q(sqrt d) splits (alpha, beta / Q), decided by the local rule:
/// no ramified place of the algebra may split in Q(sqrt d).
bool quadratic_field_splits(const Rational& alpha, const Rational& beta, const Integer& d);

/// A place where the form has no nontrivial zero.
struct Anisotropic {
  Place place;
};

/// A primitive integer zero of the form, or a local obstruction.
using IsotropyResult = std::variant<std::vector<Integer>, Anisotropic>;

/// Throws DegenerateInput unless the form has length 3 and no zero entry.
IsotropyResult ternary_isotropic(const DiagonalForm& f);

/// Throws DegenerateInput unless the form has length 4 and no zero entry.
IsotropyResult quaternary_isotropic(const DiagonalForm& f);

/// (x, y, z) with alpha x^2 + beta y^2 - alpha beta z^2 = d, i.e. the pure
/// quaternion x i + y j + z k squares to d; nullopt when d is not
/// represented. Requires a division algebra.
std::optional<std::array<Rational, 3>> represent_pure(const Rational& alpha, const Rational& beta,
                                                      const Rational& d);

/// Coordinates (q0, q1, q2, q3) of an element of (alpha, beta / L) with
/// vanishing reduced norm, L = Q[x]/(p), as polynomials of degree < deg p.
struct ZeroDivisorCertificate {
  std::array<RatPoly, 4> q;
  friend bool operator==(const ZeroDivisorCertificate&, const ZeroDivisorCertificate&) = default;
};

/// q0^2 - alpha q1^2 - beta q2^2 + alpha beta q3^2 modulo p.
RatPoly certificate_norm(const Rational& alpha, const Rational& beta, const RatPoly& p,
                         const ZeroDivisorCertificate& c);

struct ZeroDivisorOptions {
  std::uint64_t seed = 0;
  /// Largest coordinate height tried by the bounded search; 0 disables it.
  int max_height = 2;
  /// Random samples drawn per height.
  int samples_per_height = 2000;
};

/// A zero divisor of (alpha, beta / Q) tensor L. Tries the supplied
/// certificate, then a quadratic subfield of L splitting the algebra, then a
/// seeded search of bounded height. Throws InvalidCertificate or
/// SearchExhausted.
ZeroDivisorCertificate find_zero_divisor(const Rational& alpha, const Rational& beta, const NumberField& L,
                                         const std::optional<ZeroDivisorCertificate>& cert,
                                         const ZeroDivisorOptions& options = {});

}  // namespace quatpoly
