#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace quatpoly {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den = 1);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Always "num/den", the bit-exact serialization form.
std::string to_fraction_string(const Rational& q);

/// "num" when the denominator is one, otherwise "num/den".
std::string to_string(const Rational& q);

/// Accepts "n", "-n", "+n" and "n/d" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

/// Exact integer square root, if `n` is a perfect square.
std::optional<Integer> exact_sqrt(const Integer& n);
std::optional<Rational> exact_sqrt(const Rational& q);

/// Prime factorization of |n| (n != 0), primes ascending.
std::vector<std::pair<Integer, int>> factor_integer(const Integer& n);

bool is_probable_prime(const Integer& n);

/// The squarefree integer in the square class of q (q != 0). Sign kept.
Integer squarefree_part(const Rational& q);

/// p-adic valuation; p must be prime and the argument nonzero.
int valuation(const Integer& n, const Integer& p);
int valuation(const Rational& q, const Integer& p);

/// Legendre symbol (a/p) for odd prime p.
int legendre(const Integer& a, const Integer& p);

/// A square root of a modulo an odd prime p (Tonelli-Shanks), or nullopt
/// when a is a non-residue. a = 0 gives 0.
std::optional<Integer> sqrt_mod_prime(const Integer& a, const Integer& p);

/// x with x^2 = a (mod m) for squarefree m != 0, combining prime roots by CRT.
std::optional<Integer> sqrt_mod_squarefree(const Integer& a, const Integer& m);

/// Least common multiple of the denominators.
Integer common_denominator(const std::vector<Rational>& values);

/// Primes ascending starting at 2; used for deterministic prime walks.
Integer next_prime(const Integer& n);

}  // namespace quatpoly
