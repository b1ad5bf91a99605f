#include "quatpoly/quadform.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "quatpoly/errors.hpp"

namespace quatpoly {

bool PlaceSet::contains(const Place& v) const {
  if (v.is_infinite()) return infinite;
  return std::binary_search(finite_primes.begin(), finite_primes.end(), v.prime());
}

std::vector<Place> PlaceSet::places() const {
  std::vector<Place> out;
  for (const auto& p : finite_primes) out.push_back(Place::finite(p));
  if (infinite) out.push_back(Place::infinite());
  return out;
}

// ---- Hilbert symbols ----

namespace {

// An integer in the square class of q.
Integer integral_class(const Rational& q) { return q.get_num() * q.get_den(); }

// n = p^v * u with p not dividing u.
int split_off(Integer& n, const Integer& p) {
  int v = 0;
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0) {
    mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

int mod8(const Integer& u) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), u.get_mpz_t(), 8);
  return static_cast<int>(r.get_si());
}

// (u - 1)/2 and (u^2 - 1)/8 modulo 2 for odd u
int eps2(const Integer& u) { return mod8(u) % 4 == 3 ? 1 : 0; }
int omega2(const Integer& u) {
  int r = mod8(u);
  return (r == 3 || r == 5) ? 1 : 0;
}

// Primes dividing any of the values, plus 2.
std::vector<Integer> bad_primes(const std::vector<Integer>& values) {
  std::set<Integer> primes{Integer(2)};
  for (const auto& v : values) {
    if (v == 0) continue;
    for (const auto& [p, e] : factor_integer(v)) primes.insert(p);
  }
  return {primes.begin(), primes.end()};
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
  if (is_zero(a) || is_zero(b)) throw DegenerateInput("Hilbert symbol of zero");
  if (v.is_infinite()) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
  const Integer& p = v.prime();
  Integer u = integral_class(a), w = integral_class(b);
  const int va = split_off(u, p), vb = split_off(w, p);
  if (p == 2) {
    int e = eps2(u) * eps2(w) + va * omega2(w) + vb * omega2(u);
    return e % 2 == 0 ? 1 : -1;
  }
  int sign = 1;
  if (va % 2 == 1 && vb % 2 == 1) {
    // (-1)^{ab (p-1)/2}
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), p.get_mpz_t(), 4);
    if (r == 3) sign = -sign;
  }
  if (vb % 2 == 1) sign *= legendre(u, p);
  if (va % 2 == 1) sign *= legendre(w, p);
  return sign;
}

PlaceSet ramified_places(const Rational& alpha, const Rational& beta) {
  if (is_zero(alpha) || is_zero(beta)) throw DegenerateInput("quaternion algebra with a zero parameter");
  PlaceSet out;
  for (const auto& p : bad_primes({integral_class(alpha), integral_class(beta)}))
    if (hilbert_symbol(alpha, beta, Place::finite(p)) == -1) out.finite_primes.push_back(p);
  out.infinite = hilbert_symbol(alpha, beta, Place::infinite()) == -1;
  return out;
}

bool is_division(const Rational& alpha, const Rational& beta) { return !ramified_places(alpha, beta).empty(); }

namespace {

// Whether d is a square in Q_v.
bool is_local_square(const Integer& d, const Place& v) {
  if (v.is_infinite()) return d > 0;
  const Integer& p = v.prime();
  Integer u = d;
  if (split_off(u, p) % 2 != 0) return false;
  if (p == 2) return mod8(u) == 1;
  return legendre(u, p) == 1;
}

}  // namespace

bool quadratic_field_splits(const Rational& alpha, const Rational& beta, const Integer& d) {
  if (exact_sqrt(Rational(d))) throw DegenerateInput("Q(sqrt " + d.get_str() + ") is not a quadratic field");
  for (const auto& v : ramified_places(alpha, beta).places())
    if (is_local_square(d, v)) return false;
  return true;
}

// ---- isotropic vectors ----

namespace {

std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v) {
  std::vector<Rational> scaled = v;
  Integer den = common_denominator(v);
  Integer g = 0;
  std::vector<Integer> out;
  for (auto& x : scaled) {
    Rational y = x * den;
    out.push_back(y.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g == 0) throw InternalInvariantViolation("zero vector where an isotropic vector was expected");
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

Rational evaluate_form(const DiagonalForm& f, const std::vector<Integer>& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * v[i] * v[i];
  return s;
}

// Value order 0, 1, -1, 2, -2, ...
long value_at(long index) { return index % 2 == 1 ? (index + 1) / 2 : -(index / 2); }

// Small zero of f: coordinates drawn from the value order with the first
// coordinate varying fastest; heights grow one step at a time.
std::optional<std::vector<Integer>> small_search(const DiagonalForm& f, long max_height) {
  const std::size_t n = f.size();
  for (long h = 1; h <= max_height; ++h) {
    const long limit = 2 * h + 1;  // indices 0 .. 2h
    std::vector<long> idx(n, 0);
    for (;;) {
      bool has_height = false;
      for (long i : idx)
        if (i >= 2 * h - 1) has_height = true;
      if (has_height) {
        std::vector<Integer> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = value_at(idx[i]);
        if (is_zero(evaluate_form(f, v))) return v;
      }
      std::size_t pos = 0;
      while (pos < n && ++idx[pos] == limit) idx[pos++] = 0;
      if (pos == n) break;
    }
  }
  return std::nullopt;
}

void require_form(const DiagonalForm& f, std::size_t n) {
  if (f.size() != n) throw DegenerateInput("diagonal form of the wrong length");
  for (const auto& a : f)
    if (is_zero(a)) throw DegenerateInput("diagonal form with a zero coefficient");
}

// Place where z^2 = A x^2 + B y^2 has no nontrivial solution, if any.
std::optional<Place> conic_obstruction(const Rational& A, const Rational& B) {
  if (hilbert_symbol(A, B, Place::infinite()) == -1) return Place::infinite();
  for (const auto& p : bad_primes({integral_class(A), integral_class(B)}))
    if (hilbert_symbol(A, B, Place::finite(p)) == -1) return Place::finite(p);
  return std::nullopt;
}

struct ConicPoint {
  Rational x, y, z;
};

// Solution of z^2 = a x^2 + b y^2 for squarefree integers a, b that is
// locally solvable everywhere (Legendre descent).
ConicPoint legendre_descent(const Integer& a, const Integer& b) {
  if (a == 1) return {1, 0, 1};
  if (b == 1) return {0, 1, 1};
  if (a == -b) return {1, 1, 0};
  if (abs(a) > abs(b)) {
    ConicPoint s = legendre_descent(b, a);
    return {s.y, s.x, s.z};
  }
  // |a| <= |b|, |b| >= 2
  Integer mod = abs(b);
  auto root = sqrt_mod_squarefree(a, mod);
  if (!root) throw InternalInvariantViolation("Legendre descent: a is not a square modulo b");
  Integer t = *root;
  if (2 * t > mod) t -= mod;
  Integer q = t * t - a;
  // q = b * k^2 * m with m squarefree
  mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), b.get_mpz_t());
  if (q == 0) {
    // t^2 = a: impossible for squarefree a other than 1
    throw InternalInvariantViolation("Legendre descent reached a square");
  }
  Integer m = squarefree_part(Rational(q));
  Integer k2 = q / m;
  Integer k = *exact_sqrt(k2);
  ConicPoint s = legendre_descent(a, m);
  // (t + sqrt a)(z' + x' sqrt a) has norm b (k m y')^2
  return {t * s.x + s.z, Rational(k * m) * s.y, t * s.z + a * s.x};
}

// Zero of <a1, a2, a3> with integer entries, which must be isotropic.
std::vector<Integer> solve_ternary(const Integer& a1, const Integer& a2, const Integer& a3) {
  // (a3 z)^2 = A x^2 + B y^2 with A = -a1 a3, B = -a2 a3
  Integer A = -a1 * a3, B = -a2 * a3;
  Integer sa = squarefree_part(Rational(A)), sb = squarefree_part(Rational(B));
  Integer ra = *exact_sqrt(Integer(A / sa)), rb = *exact_sqrt(Integer(B / sb));
  ConicPoint s = legendre_descent(sa, sb);
  // sa X^2 = A (X / ra)^2
  Rational x = s.x / ra, y = s.y / rb, z = s.z / a3;
  return primitive_integer_vector({x, y, z});
}

struct IntegralForm {
  std::vector<Integer> coeffs;
  std::vector<Integer> scale;  // x_i = scale_i * y_i
};

IntegralForm integral_form(const DiagonalForm& f) {
  IntegralForm g;
  for (const auto& a : f) {
    g.coeffs.push_back(integral_class(a));
    g.scale.push_back(a.get_den());
  }
  return g;
}

std::vector<Integer> back_to_form(const IntegralForm& g, const std::vector<Integer>& y) {
  std::vector<Rational> x;
  for (std::size_t i = 0; i < y.size(); ++i) x.emplace_back(g.scale[i] * y[i]);
  return primitive_integer_vector(x);
}

constexpr long kSmallSearchHeight = 3;

// Local isotropy of a quaternary form at v: anisotropic exactly when the
// discriminant is a local square and the Hasse invariant is -(-1,-1)_v.
bool quaternary_locally_isotropic(const std::vector<Integer>& a, const Place& v) {
  if (v.is_infinite()) {
    bool pos = false, neg = false;
    for (const auto& x : a) (x > 0 ? pos : neg) = true;
    return pos && neg;
  }
  Integer d = a[0] * a[1] * a[2] * a[3];
  if (!is_local_square(d, v)) return true;
  int hasse = 1;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) hasse *= hilbert_symbol(Rational(a[i]), Rational(a[j]), v);
  return hasse == hilbert_symbol(Rational(-1), Rational(-1), v);
}

bool ternary_locally_isotropic_everywhere(const Integer& a1, const Integer& a2, const Integer& a3) {
  return !conic_obstruction(Rational(-a1 * a3), Rational(-a2 * a3)).has_value();
}

}  // namespace

IsotropyResult ternary_isotropic(const DiagonalForm& f) {
  require_form(f, 3);
  if (auto v = conic_obstruction(-f[0] * f[2], -f[1] * f[2])) return Anisotropic{*v};
  if (auto v = small_search(f, kSmallSearchHeight)) return primitive_integer_vector({(*v)[0], (*v)[1], (*v)[2]});
  IntegralForm g = integral_form(f);
  return back_to_form(g, solve_ternary(g.coeffs[0], g.coeffs[1], g.coeffs[2]));
}

IsotropyResult quaternary_isotropic(const DiagonalForm& f) {
  require_form(f, 4);
  IntegralForm g = integral_form(f);
  const auto& a = g.coeffs;
  if (!quaternary_locally_isotropic(a, Place::infinite())) return Anisotropic{Place::infinite()};
  for (const auto& p : bad_primes(a))
    if (!quaternary_locally_isotropic(a, Place::finite(p))) return Anisotropic{Place::finite(p)};

  if (auto v = small_search(f, kSmallSearchHeight))
    return primitive_integer_vector({(*v)[0], (*v)[1], (*v)[2], (*v)[3]});

  // <a1, a2> and <a3, a4> represent a common value t
  for (long n = 1; n <= 20000; ++n) {
    const Integer t = value_at(n);
    if (!ternary_locally_isotropic_everywhere(a[0], a[1], -t)) continue;
    if (!ternary_locally_isotropic_everywhere(a[2], a[3], t)) continue;
    auto u = solve_ternary(a[0], a[1], -t);  // a1 x1^2 + a2 x2^2 = t w^2
    auto w = solve_ternary(a[2], a[3], t);   // a3 x3^2 + a4 x4^2 = -t z^2
    std::vector<Integer> y;
    if (u[2] == 0) {
      y = {u[0], u[1], 0, 0};
    } else if (w[2] == 0) {
      y = {0, 0, w[0], w[1]};
    } else {
      y = {u[0] * w[2], u[1] * w[2], w[0] * u[2], w[1] * u[2]};
    }
    return back_to_form(g, y);
  }
  throw SearchExhausted("no common represented value found for a locally isotropic quaternary form");
}

std::optional<std::array<Rational, 3>> represent_pure(const Rational& alpha, const Rational& beta,
                                                      const Rational& d) {
  if (is_zero(d)) throw DegenerateInput("represent_pure of zero");
  auto r = quaternary_isotropic({alpha, beta, -alpha * beta, -d});
  if (std::holds_alternative<Anisotropic>(r)) return std::nullopt;
  const auto& v = std::get<std::vector<Integer>>(r);
  if (v[3] == 0) throw PreconditionViolation("pure norm form is isotropic: the algebra is split");
  return std::array<Rational, 3>{make_rational(v[0], v[3]), make_rational(v[1], v[3]), make_rational(v[2], v[3])};
}

}  // namespace quatpoly
