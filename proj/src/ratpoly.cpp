#include "quatpoly/ratpoly.hpp"

#include <algorithm>

#include "quatpoly/errors.hpp"

namespace quatpoly {

RatPoly RatFactorization::expand() const {
  RatPoly r = RatPoly::constant(content);
  for (const auto& [f, m] : factors) r = r * pow(f, static_cast<unsigned>(m));
  return r;
}

bool ratpoly_less(const RatPoly& a, const RatPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

RatPoly make_ratpoly(std::initializer_list<long> coeffs_low_first) {
  std::vector<Rational> v;
  for (long c : coeffs_low_first) v.emplace_back(c);
  return RatPoly(std::move(v));
}

RatPoly rp_gcd(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() && b.is_zero()) throw DegenerateInput("rp_gcd of two zero polynomials");
  return gcd(a, b);
}

Rational rp_resultant(const RatPoly& a_in, const RatPoly& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) return 0;
  RatPoly a = a_in, b = b_in;
  Rational acc = 1;
  // Invariant: Res(a_in, b_in) = acc * Res(a, b).
  for (;;) {
    const int m = a.degree(), n = b.degree();
    if (n == 0) {
      Rational r = acc;
      for (int i = 0; i < m; ++i) r *= b[0];
      return r;
    }
    if (m == 0) {
      Rational r = acc;
      for (int i = 0; i < n; ++i) r *= a[0];
      return r;
    }
    // Res(a,b) = (-1)^{mn} Res(b,a) = (-1)^{mn} lc(b)^{m - deg r} Res(b, r)
    RatPoly r = divmod(a, b).second;
    if (r.is_zero()) return 0;
    if ((m % 2 == 1) && (n % 2 == 1)) acc = -acc;
    for (int i = 0; i < m - r.degree(); ++i) acc *= b.leading();
    a = std::move(b);
    b = std::move(r);
  }
}

Rational rp_discriminant(const RatPoly& p) {
  if (p.degree() < 1) throw DegenerateInput("discriminant of a constant polynomial");
  const long n = p.degree();
  Rational res = rp_resultant(p, p.derivative());
  Rational d = res / p.leading();
  if (((n * (n - 1)) / 2) % 2 == 1) d = -d;
  return d;
}

bool rp_is_squarefree(const RatPoly& p) {
  if (p.degree() < 1) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

std::vector<std::pair<RatPoly, int>> rp_squarefree_decomposition(const RatPoly& p) {
  if (p.is_zero()) throw DegenerateInput("squarefree decomposition of zero");
  std::vector<std::pair<RatPoly, int>> out;
  if (p.degree() == 0) return out;
  RatPoly f = p.monic();
  RatPoly df = f.derivative();
  RatPoly a = gcd(f, df);
  RatPoly b = exact_quotient(f, a);
  RatPoly c = exact_quotient(df, a);
  RatPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    RatPoly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = exact_quotient(b, g);
    c = exact_quotient(d, g);
    d = c - b.derivative();
  }
  return out;
}

int rp_real_root_count(const RatPoly& p) {
  if (p.degree() < 1) throw DegenerateInput("real root count of a constant polynomial");
  if (!rp_is_squarefree(p)) throw NotSquarefree("real root count needs a squarefree polynomial");
  std::vector<RatPoly> seq{p, p.derivative()};
  while (seq.back().degree() > 0) {
    RatPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  auto variations = [&](bool at_plus_infinity) {
    int count = 0, last = 0;
    for (const auto& s : seq) {
      int sign = sgn(s.leading());
      if (!at_plus_infinity && s.degree() % 2 == 1) sign = -sign;
      if (last != 0 && sign != last) ++count;
      last = sign;
    }
    return count;
  };
  return variations(false) - variations(true);
}

std::pair<Rational, std::vector<Integer>> rp_primitive_part(const RatPoly& p) {
  if (p.is_zero()) throw DegenerateInput("primitive part of zero");
  Integer den = common_denominator(p.coeffs());
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    Rational scaled = c * den;
    ints.push_back(scaled.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  if (sgn(p.leading()) < 0) g = -g;
  for (auto& v : ints) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return {make_rational(g, den), std::move(ints)};
}

RatPoly rp_from_integers(const std::vector<Integer>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.emplace_back(c);
  return RatPoly(std::move(v));
}

bool rp_is_irreducible(const RatPoly& p) {
  if (p.degree() < 1) return false;
  auto f = rp_factor(p);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

std::string rp_to_string(const RatPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p[static_cast<std::size_t>(i)];
    if (is_zero(c)) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    bool unit = mag == 1;
    if (i == 0 || !unit) out += to_string(mag);
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace quatpoly
