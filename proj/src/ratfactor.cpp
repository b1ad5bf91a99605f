// Factorization over Q: squarefree decomposition, then Zassenhaus
// (factor mod a good prime, Hensel lift, exhaustive recombination).

#include <algorithm>
#include <optional>

#include "quatpoly/detail/modular.hpp"
#include "quatpoly/errors.hpp"
#include "quatpoly/ratpoly.hpp"

namespace quatpoly {

namespace {

using detail::ModPoly;
using detail::PrimeField;
using detail::ZPoly;

// Number of candidate good primes compared; the one giving the fewest
// modular factors wins (ties go to the smaller prime).
constexpr int kPrimeTrials = 3;

ModPoly reduce_mod(const PrimeField& f, const ZPoly& a) {
  ModPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.reduce(a[i]);
  detail::mp_trim(r);
  return r;
}

// Exact division of integer polynomials; nullopt if b does not divide a.
std::optional<ZPoly> exact_divide(const ZPoly& a, const ZPoly& b) {
  if (a.size() < b.size()) return std::nullopt;
  ZPoly rem = a;
  const std::size_t db = b.size() - 1;
  ZPoly quo(a.size() - db, Integer(0));
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    if (mpz_divisible_p(rem[k].get_mpz_t(), b.back().get_mpz_t()) == 0) return std::nullopt;
    Integer t;
    mpz_divexact(t.get_mpz_t(), rem[k].get_mpz_t(), b.back().get_mpz_t());
    quo[k - db] = t;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= t * b[j];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (rem[i] != 0) return std::nullopt;
  detail::zp_trim(quo);
  return quo;
}

ZPoly primitive(ZPoly a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (a.back() < 0) g = -g;
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return a;
}

// Landau-Mignotte style bound: any factor of f has coefficients of absolute
// value at most 2^deg(f) * ||f||_2.
Integer factor_coefficient_bound(const ZPoly& f) {
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Integer two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, f.size() - 1);
  return two_pow * root;
}

struct PrimeChoice {
  std::uint64_t p = 0;
  std::vector<ModPoly> factors;
};

PrimeChoice choose_prime(const ZPoly& f) {
  Rational disc = rp_discriminant(rp_from_integers(f));
  Integer lc_disc = f.back() * disc.get_num();
  PrimeChoice best;
  int found = 0;
  for (std::uint64_t p = 3; found < kPrimeTrials; p = next_prime(Integer(static_cast<unsigned long>(p))).get_ui()) {
    if (mpz_divisible_ui_p(lc_disc.get_mpz_t(), p) != 0) continue;
    PrimeField field(p);
    auto factors = detail::mp_factor_squarefree(field, reduce_mod(field, f));
    ++found;
    if (best.p == 0 || factors.size() < best.factors.size()) best = {p, std::move(factors)};
    if (best.factors.size() == 1) break;
  }
  return best;
}

// Advance a k-combination of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// f primitive, squarefree, lc > 0, deg >= 2, f(0) != 0.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  auto choice = choose_prime(f);
  if (choice.factors.size() <= 1) return {f};

  const Integer bound = factor_coefficient_bound(f);
  const Integer target = 2 * abs(f.back()) * bound + 1;
  Integer modulus;
  std::vector<ZPoly> lifted = detail::hensel_lift(f, choice.factors, choice.p, target, modulus);

  std::vector<ZPoly> result;
  ZPoly rest = f;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    do {
      const Integer& b = rest.back();
      // trailing coefficient test
      Integer tc = b;
      for (auto i : idx) tc = detail::symmetric_mod(Integer(tc * lifted[i][0]), modulus);
      if (tc == 0) continue;
      Integer bt = b * rest[0];
      if (mpz_divisible_p(bt.get_mpz_t(), tc.get_mpz_t()) == 0) continue;

      ZPoly g{b};
      for (auto i : idx) g = detail::zp_mul(g, lifted[i], modulus);
      for (auto& c : g) c = detail::symmetric_mod(c, modulus);
      detail::zp_trim(g);
      g = primitive(std::move(g));
      auto quotient = exact_divide(rest, g);
      if (!quotient) continue;

      result.push_back(g);
      rest = std::move(*quotient);
      std::vector<ZPoly> remaining;
      for (std::size_t i = 0, k = 0; i < lifted.size(); ++i) {
        if (k < idx.size() && idx[k] == i) {
          ++k;
          continue;
        }
        remaining.push_back(std::move(lifted[i]));
      }
      lifted = std::move(remaining);
      found = true;
      break;
    } while (next_combination(idx, lifted.size()));
    if (!found) ++s;
  }
  if (rest.size() > 1) result.push_back(primitive(rest));
  return result;
}

// Monic irreducible factors of a monic squarefree polynomial.
std::vector<RatPoly> factor_squarefree(const RatPoly& s) {
  if (s.degree() <= 1) return {s};
  auto [content, ints] = rp_primitive_part(s);
  std::vector<RatPoly> out;
  if (ints[0] == 0) {
    out.push_back(RatPoly::x());
    ints.erase(ints.begin());
  }
  if (ints.size() == 2) {
    out.push_back(rp_from_integers(ints).monic());
  } else if (ints.size() > 2) {
    for (const auto& g : zassenhaus(ints)) out.push_back(rp_from_integers(g).monic());
  }
  return out;
}

}  // namespace

RatFactorization rp_factor(const RatPoly& p) {
  if (p.is_zero()) throw DegenerateInput("rp_factor of the zero polynomial");
  RatFactorization out;
  out.content = p.leading();
  for (const auto& [s, mult] : rp_squarefree_decomposition(p)) {
    for (auto& g : factor_squarefree(s)) out.factors.emplace_back(std::move(g), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return ratpoly_less(a.first, b.first); });
  return out;
}

}  // namespace quatpoly
