#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quatpoly/poly.hpp"
#include "quatpoly/rational.hpp"

namespace quatpoly {

/// Polynomial over Q.
using RatPoly = Poly<Rational>;

/// content * prod(factor_i ^ multiplicity_i) reproduces the input exactly.
/// Factors are monic, irreducible over Q, pairwise distinct and sorted by
/// `ratpoly_less`.
struct RatFactorization {
  Rational content;
  std::vector<std::pair<RatPoly, int>> factors;

  RatPoly expand() const;
};

/// Total order: degree first, then the coefficient sequence lowest degree
/// first, compared lexicographically.
bool ratpoly_less(const RatPoly& a, const RatPoly& b);

RatPoly make_ratpoly(std::initializer_list<long> coeffs_low_first);

/// Monic gcd; throws DegenerateInput when both arguments are zero.
RatPoly rp_gcd(const RatPoly& a, const RatPoly& b);

Rational rp_resultant(const RatPoly& a, const RatPoly& b);

/// (-1)^(n(n-1)/2) Res(p, p') / lc(p).
Rational rp_discriminant(const RatPoly& p);

bool rp_is_squarefree(const RatPoly& p);

/// Yun's algorithm on the monic part: pairs (s_i, i) with p = lc * prod s_i^i,
/// every s_i monic squarefree and nonconstant.
std::vector<std::pair<RatPoly, int>> rp_squarefree_decomposition(const RatPoly& p);

/// Number of distinct real roots (Sturm). Throws NotSquarefree.
int rp_real_root_count(const RatPoly& p);

/// Complete factorization over Q. Throws DegenerateInput on zero.
RatFactorization rp_factor(const RatPoly& p);

bool rp_is_irreducible(const RatPoly& p);

/// Splits p = c * P with P in Z[x] primitive and lc(P) > 0.
std::pair<Rational, std::vector<Integer>> rp_primitive_part(const RatPoly& p);

RatPoly rp_from_integers(const std::vector<Integer>& coeffs);

/// Human-readable form in x, descending powers, e.g. "x^4 + 11*x^2 - 3/2".
std::string rp_to_string(const RatPoly& p, char var = 'x');

}  // namespace quatpoly
