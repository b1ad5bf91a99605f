#include "quatpoly/rational.hpp"

#include <algorithm>
#include <cctype>

#include "quatpoly/errors.hpp"

namespace quatpoly {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return to_fraction_string(q);
}

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw SyntaxError("empty integer in '" + std::string(whole) + "'", 0);
  std::size_t i = 0;
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    ++i;
  }
  if (i == s.size()) throw SyntaxError("missing digits in '" + std::string(whole) + "'", i);
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw SyntaxError("bad digit in '" + std::string(whole) + "'", k);
  }
  Integer v(std::string(s.substr(i)), 10);
  return negative ? Integer(-v) : v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
  Integer num = parse_integer(trim(s.substr(0, slash)), text);
  Integer den = parse_integer(trim(s.substr(slash + 1)), text);
  return make_rational(num, den);
}

std::optional<Integer> exact_sqrt(const Integer& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  auto n = exact_sqrt(q.get_num());
  if (!n) return std::nullopt;
  auto d = exact_sqrt(q.get_den());
  if (!d) return std::nullopt;
  return make_rational(*n, *d);
}

bool is_probable_prime(const Integer& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

namespace {

Integer gcd_int(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Pollard-Brent; n composite, odd, not a perfect power of a small prime.
Integer pollard_brent(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 64;
    auto f = [&](const Integer& v) {
      Integer w = v * v + c;
      mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
      return w;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Integer diff = x - y;
          q = q * abs(diff);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        g = gcd_int(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        Integer diff = x - ys;
        g = gcd_int(abs(diff), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out.push_back(n);
    return;
  }
  Integer d = pollard_brent(n);
  factor_into(d, out);
  factor_into(Integer(n / d), out);
}

}  // namespace

std::vector<std::pair<Integer, int>> factor_integer(const Integer& n_in) {
  if (n_in == 0) throw DegenerateInput("factor_integer of zero");
  Integer n = abs(n_in);
  std::vector<Integer> primes;
  for (unsigned long p = 2; p < 10000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      primes.emplace_back(p);
      n /= p;
    }
  }
  if (n > 1) factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Integer, int>> result;
  for (const auto& p : primes) {
    if (!result.empty() && result.back().first == p)
      ++result.back().second;
    else
      result.emplace_back(p, 1);
  }
  return result;
}

Integer squarefree_part(const Rational& q) {
  if (sgn(q) == 0) throw DegenerateInput("squarefree part of zero");
  Integer n = q.get_num() * q.get_den();
  Integer result = sgn(n) < 0 ? -1 : 1;
  for (const auto& [p, e] : factor_integer(n)) {
    if (e % 2 == 1) result *= p;
  }
  return result;
}

int valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw DegenerateInput("valuation of zero");
  Integer m = n;
  int v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t()) != 0) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

int valuation(const Rational& q, const Integer& p) {
  return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

int legendre(const Integer& a, const Integer& p) {
  return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

namespace {

Integer powmod(const Integer& b, const Integer& e, const Integer& m) {
  Integer r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

std::optional<Integer> sqrt_mod_prime(const Integer& a_in, const Integer& p) {
  Integer a = mod(a_in, p);
  if (a == 0) return Integer(0);
  if (p == 2) return a;
  if (legendre(a, p) != 1) return std::nullopt;
  if (mod(p, 4) == 3) return powmod(a, Integer((p + 1) / 4), p);

  // p - 1 = q * 2^s with q odd
  Integer q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t()) != 0) {
    q /= 2;
    ++s;
  }
  Integer z = 2;
  while (legendre(z, p) != -1) ++z;

  Integer c = powmod(z, q, p);
  Integer x = powmod(a, Integer((q + 1) / 2), p);
  Integer t = powmod(a, q, p);
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    Integer t2 = t;
    while (t2 != 1) {
      t2 = mod(Integer(t2 * t2), p);
      ++i;
    }
    Integer b = c;
    for (unsigned long k = 0; k + i + 1 < m; ++k) b = mod(Integer(b * b), p);
    x = mod(Integer(x * b), p);
    c = mod(Integer(b * b), p);
    t = mod(Integer(t * c), p);
    m = i;
  }
  return x;
}

std::optional<Integer> sqrt_mod_squarefree(const Integer& a, const Integer& m_in) {
  Integer m = abs(m_in);
  if (m == 0) throw DegenerateInput("sqrt modulo zero");
  if (m == 1) return Integer(0);
  Integer x = 0, modulus = 1;
  for (const auto& [p, e] : factor_integer(m)) {
    if (e != 1) throw PreconditionViolation("sqrt_mod_squarefree: modulus not squarefree");
    auto r = sqrt_mod_prime(a, p);
    if (!r) return std::nullopt;
    // combine x (mod modulus) with r (mod p)
    Integer inv;
    mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), p.get_mpz_t());
    Integer k = mod(Integer((*r - x) * inv), p);
    x += k * modulus;
    modulus *= p;
  }
  return mod(x, modulus);
}

Integer common_denominator(const std::vector<Rational>& values) {
  Integer l = 1;
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

Integer next_prime(const Integer& n) {
  Integer r;
  mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace quatpoly
