#pragma once

// Arithmetic over Z/pZ (word-size primes) and over Z/mZ with big moduli.
// Internal to the library: used by the Zassenhaus factorizer and by the
// maximal-order computations.

#include <cstdint>
#include <vector>

#include "quatpoly/rational.hpp"

namespace quatpoly::detail {

/// Prime field with p < 2^63.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p) : p_(p) {}
  std::uint64_t p() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t reduce(const Integer& a) const;
  /// Reduction of a rational whose denominator is prime to p.
  std::uint64_t reduce(const Rational& a) const;

 private:
  std::uint64_t p_;
};

/// Polynomial over F_p, lowest degree first, no trailing zeros.
using ModPoly = std::vector<std::uint64_t>;

void mp_trim(ModPoly& a);
int mp_degree(const ModPoly& a);
ModPoly mp_add(const PrimeField& f, const ModPoly& a, const ModPoly& b);
ModPoly mp_sub(const PrimeField& f, const ModPoly& a, const ModPoly& b);
ModPoly mp_mul(const PrimeField& f, const ModPoly& a, const ModPoly& b);
ModPoly mp_scale(const PrimeField& f, const ModPoly& a, std::uint64_t s);
void mp_divmod(const PrimeField& f, const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r);
ModPoly mp_rem(const PrimeField& f, const ModPoly& a, const ModPoly& b);
ModPoly mp_monic(const PrimeField& f, const ModPoly& a);
ModPoly mp_gcd(const PrimeField& f, ModPoly a, ModPoly b);
/// (g, s, t) with s*a + t*b = g monic.
void mp_ext_gcd(const PrimeField& f, const ModPoly& a, const ModPoly& b, ModPoly& g, ModPoly& s,
                ModPoly& t);
ModPoly mp_powmod(const PrimeField& f, const ModPoly& base, const Integer& e, const ModPoly& m);
ModPoly mp_derivative(const PrimeField& f, const ModPoly& a);

/// Monic irreducible factors of a monic squarefree polynomial over F_p,
/// sorted by (degree, coefficients). Deterministic for fixed input.
std::vector<ModPoly> mp_factor_squarefree(const PrimeField& f, const ModPoly& a);

/// Roots in F_p of a monic squarefree polynomial, ascending.
std::vector<std::uint64_t> mp_roots(const PrimeField& f, const ModPoly& a);

/// Dense matrix over F_p, row-major.
struct ModMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint64_t> data;

  ModMatrix() = default;
  ModMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  std::uint64_t& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  std::uint64_t at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Reduced row echelon form in place; returns the pivot columns, one per
/// nonzero row (the nonzero rows come first).
std::vector<std::size_t> mm_rref(const PrimeField& f, ModMatrix& m);
/// Basis of { v : M v = 0 } (column vectors of length M.cols).
std::vector<std::vector<std::uint64_t>> mm_kernel(const PrimeField& f, ModMatrix m);
std::size_t mm_rank(const PrimeField& f, ModMatrix m);

// ---- big-modulus integer polynomials (Hensel lifting) ----

using ZPoly = std::vector<Integer>;

void zp_trim(ZPoly& a);
/// Symmetric residue in (-m/2, m/2].
Integer symmetric_mod(const Integer& a, const Integer& m);
ZPoly zp_mod(const ZPoly& a, const Integer& m);
ZPoly zp_mul(const ZPoly& a, const ZPoly& b, const Integer& m);
ZPoly zp_add(const ZPoly& a, const ZPoly& b, const Integer& m);
ZPoly zp_sub(const ZPoly& a, const ZPoly& b, const Integer& m);
/// Division by a monic polynomial modulo m.
void zp_divmod_monic(const ZPoly& a, const ZPoly& b, const Integer& m, ZPoly& q, ZPoly& r);

/// Lifts f = lc * prod(factors) (mod p), factors monic and pairwise coprime
/// mod p, to monic factors modulo `target` (a power of p) or beyond; returns
/// the lifted factors and writes the modulus actually reached.
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<ModPoly>& factors, std::uint64_t p,
                               const Integer& target, Integer& reached);

}  // namespace quatpoly::detail
