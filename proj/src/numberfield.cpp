#include "quatpoly/numberfield.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "quatpoly/detail/round2.hpp"
#include "quatpoly/errors.hpp"
#include "quatpoly/quadform.hpp"

namespace quatpoly {

struct NumberField::Impl {
  RatPoly minpoly;

  // write-once per key, guarded by the mutex
  std::mutex cache_mutex;
  std::map<Integer, SplittingType> splitting_cache;
};

NumberField::NumberField(const RatPoly& minpoly) {
  if (minpoly.degree() < 1 || !minpoly.is_monic())
    throw PreconditionViolation("number field needs a monic nonconstant minimal polynomial");
  if (!rp_is_irreducible(minpoly))
    throw PreconditionViolation("minimal polynomial " + rp_to_string(minpoly) + " is reducible");
  impl_ = std::make_shared<Impl>();
  impl_->minpoly = minpoly;
}

NumberField NumberField::unchecked(const RatPoly& minpoly) {
  NumberField L;
  L.impl_ = std::make_shared<Impl>();
  L.impl_->minpoly = minpoly;
  return L;
}

const RatPoly& NumberField::minpoly() const { return impl_->minpoly; }
int NumberField::degree() const { return impl_->minpoly.degree(); }

bool operator==(const NumberField& a, const NumberField& b) {
  return a.impl_ == b.impl_ || a.minpoly() == b.minpoly();
}

// ---- elements ----

NFElement::NFElement(const Rational& c) : value_(RatPoly::constant(c)) {}

NFElement::NFElement(const NumberField& L, const RatPoly& value)
    : field_(L), value_(value.degree() >= L.degree() ? value % L.minpoly() : value) {}

NFElement NFElement::generator(const NumberField& L) { return NFElement(L, RatPoly::x()); }

const NumberField& NFElement::field() const {
  if (!field_) throw PreconditionViolation("rational constant has no number field");
  return *field_;
}

std::vector<Rational> NFElement::coords() const {
  const std::size_t n = field_ ? static_cast<std::size_t>(field_->degree()) : 1;
  std::vector<Rational> c(n);
  for (std::size_t i = 0; i < value_.size(); ++i) c[i] = value_[i];
  return c;
}

std::optional<NumberField> NFElement::common_field(const NFElement& a, const NFElement& b) {
  if (!a.field_) return b.field_;
  if (!b.field_) return a.field_;
  if (*a.field_ != *b.field_) throw AlgebraMismatch("elements of different number fields");
  return a.field_;
}

NFElement NFElement::operator-() const {
  NFElement r = *this;
  r.value_ = -value_;
  return r;
}

NFElement operator+(const NFElement& a, const NFElement& b) {
  NFElement r;
  r.field_ = NFElement::common_field(a, b);
  r.value_ = a.value_ + b.value_;
  return r;
}

NFElement operator-(const NFElement& a, const NFElement& b) {
  NFElement r;
  r.field_ = NFElement::common_field(a, b);
  r.value_ = a.value_ - b.value_;
  return r;
}

NFElement operator*(const NFElement& a, const NFElement& b) {
  NFElement r;
  r.field_ = NFElement::common_field(a, b);
  r.value_ = a.value_ * b.value_;
  if (r.field_ && r.value_.degree() >= r.field_->degree()) r.value_ = r.value_ % r.field_->minpoly();
  return r;
}

NFElement operator/(const NFElement& a, const NFElement& b) { return a * nf_inv(b); }

NFElement nf_inv(const NFElement& a) {
  if (is_zero(a)) throw DivisionByZero("inverse of zero in a number field");
  if (a.is_rational()) {
    return a.has_field() ? NFElement(a.field(), RatPoly::constant(1 / a.constant_term()))
                         : NFElement(Rational(1 / a.constant_term()));
  }
  const NumberField& L = a.field();
  auto eg = ext_gcd(a.poly(), L.minpoly());
  // minpoly irreducible, so the gcd is 1 and s*a = 1 mod minpoly
  if (eg.g.degree() != 0) throw InternalInvariantViolation("element shares a factor with the minimal polynomial");
  return NFElement(L, eg.s);
}

NFPoly nf_lift(const RatPoly& p, const NumberField& L) {
  std::vector<NFElement> c;
  c.reserve(p.size());
  for (const auto& v : p.coeffs()) c.emplace_back(L, RatPoly::constant(v));
  return NFPoly(std::move(c));
}

// ---- norms ----

namespace {

// Newton interpolation through (i, values[i]), i = 0..n.
RatPoly interpolate_at_integers(const std::vector<Rational>& values) {
  const std::size_t n = values.size();
  std::vector<Rational> dd = values;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(level));
  RatPoly result;
  RatPoly basis = RatPoly::constant(1);
  for (std::size_t i = 0; i < n; ++i) {
    result += RatPoly::constant(dd[i]) * basis;
    basis = basis * RatPoly({Rational(-static_cast<long>(i)), Rational(1)});
  }
  return result;
}

}  // namespace

RatPoly nf_norm_poly(const NFPoly& g, const NumberField& L) {
  if (g.is_zero()) return {};
  const int n = L.degree();
  const int bound = n * g.degree();
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(bound) + 1);
  for (int y = 0; y <= bound; ++y) {
    // g(x, y) as a polynomial in the generator x; Res_x(minpoly, .) is the
    // product over the conjugates because minpoly is monic
    RatPoly h;
    Rational power = 1;
    for (std::size_t j = 0; j < g.size(); ++j) {
      h += RatPoly::constant(power) * g[j].poly();
      power *= y;
    }
    values.push_back(h.is_zero() ? Rational(0) : rp_resultant(L.minpoly(), h));
  }
  return interpolate_at_integers(values);
}

// ---- square roots and quadratic subfields ----

Rational nf_norm(const NFElement& a) {
  if (!a.has_field()) return a.constant_term();
  if (is_zero(a)) return 0;
  return rp_resultant(a.field().minpoly(), a.poly());
}

std::optional<NFElement> nf_sqrt_element(const NFElement& g) {
  if (is_zero(g)) throw DegenerateInput("square root of zero requested");
  const NumberField& L = g.field();
  const int n = L.degree();
  if (g.is_rational()) {
    if (auto r = exact_sqrt(g.constant_term())) return NFElement(L, RatPoly::constant(*r));
    if (n % 2 == 1) return std::nullopt;  // Q(sqrt d) has degree 2
  }
  if (!exact_sqrt(nf_norm(g))) return std::nullopt;
  const NFElement theta = NFElement::generator(L);
  const NFElement one(L, RatPoly::constant(1));
  for (long k = 0;; ++k) {
    // G(y) = (y - k theta)^2 - g
    const NFElement shift = NFElement(Rational(k)) * theta;
    NFPoly G({shift * shift - g, NFElement(Rational(-2)) * shift, one});
    RatPoly norm = nf_norm_poly(G, L);
    if (!rp_is_squarefree(norm)) continue;
    for (const auto& [h, mult] : rp_factor(norm).factors) {
      if (h.degree() != n) continue;
      NFPoly common = gcd(G, nf_lift(h, L));
      if (common.degree() != 1) continue;
      NFElement s = -common[0] - shift;
      if (s * s != g) throw InternalInvariantViolation("Trager square root check failed");
      return s;
    }
    return std::nullopt;
  }
}

std::optional<NFElement> nf_sqrt(const Rational& d, const NumberField& L) {
  if (is_zero(d)) throw DegenerateInput("square root of zero requested");
  return nf_sqrt_element(NFElement(L, RatPoly::constant(d)));
}

std::vector<Integer> nf_quadratic_subfields(const NumberField& L) {
  std::vector<Integer> out;
  if (L.degree() % 2 == 1) return out;
  const RatPoly& m = L.minpoly();
  Rational disc = rp_discriminant(m);
  Integer support = 2 * disc.get_num() * disc.get_den() * common_denominator(m.coeffs());
  std::vector<Integer> primes;
  for (const auto& [p, e] : factor_integer(support)) primes.push_back(p);

  std::vector<Integer> candidates;
  const std::size_t count = std::size_t{1} << primes.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    Integer d = 1;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (mask & (std::size_t{1} << i)) d *= primes[i];
    if (d != 1) candidates.push_back(d);
    candidates.push_back(-d);
  }
  std::sort(candidates.begin(), candidates.end(), [](const Integer& a, const Integer& b) {
    int c = cmp(abs(a), abs(b));
    if (c != 0) return c < 0;
    return a > b;
  });
  for (const auto& d : candidates)
    if (nf_sqrt(Rational(d), L)) out.push_back(d);
  return out;
}

NumberField quadratic_field(const Integer& d) {
  if (exact_sqrt(Rational(d))) throw DegenerateInput("Q(sqrt " + d.get_str() + ") is not a quadratic field");
  return NumberField::unchecked(RatPoly({Rational(-d), Rational(0), Rational(1)}));
}

// ---- local splitting ----

SplittingType nf_local_splitting(const NumberField& L, const Place& place) {
  SplittingType out;
  out.place = place;
  if (place.is_infinite()) {
    const int real = rp_real_root_count(L.minpoly());
    for (int i = 0; i < real; ++i) out.factors.push_back({1, 1});
    for (int i = 0; i < (L.degree() - real) / 2; ++i) out.factors.push_back({2, 1});
    return out;
  }
  auto& impl = *L.impl_;
  {
    std::lock_guard<std::mutex> lock(impl.cache_mutex);
    auto it = impl.splitting_cache.find(place.prime());
    if (it != impl.splitting_cache.end()) return it->second;
  }
  out.factors = detail::prime_decomposition(L.minpoly(), place.prime());
  std::lock_guard<std::mutex> lock(impl.cache_mutex);
  return impl.splitting_cache.emplace(place.prime(), out).first->second;
}

bool nf_splits_quaternion(const Rational& alpha, const Rational& beta, const NumberField& L) {
  PlaceSet ramified = ramified_places(alpha, beta);
  if (ramified.empty()) throw SplitAlgebra("(" + to_string(alpha) + ", " + to_string(beta) + ") is split over Q");
  auto all_even = [&](const Place& v) {
    for (const auto& w : nf_local_splitting(L, v).factors)
      if (w.local_degree() % 2 != 0) return false;
    return true;
  };
  if (ramified.infinite && !all_even(Place::infinite())) return false;
  for (const auto& p : ramified.finite_primes)
    if (!all_even(Place::finite(p))) return false;
  return true;
}

// ---- Trager factorization over Q(sqrt d) ----

std::vector<NFPoly> nf_factor_over_quadratic(const RatPoly& p, const Integer& d) {
  NumberField K = quadratic_field(d);
  const NFElement t = NFElement::generator(K);
  const NFPoly lifted = nf_lift(p, K);
  for (long k = 0;; ++k) {
    const NFElement shift = NFElement(Rational(k)) * t;
    // G(y) = p(y - k t)
    NFPoly G = compose(lifted, NFPoly({-shift, NFElement(K, RatPoly::constant(1))}));
    RatPoly norm = nf_norm_poly(G, K);
    if (!rp_is_squarefree(norm)) continue;
    std::vector<NFPoly> out;
    NFPoly back({shift, NFElement(K, RatPoly::constant(1))});
    for (const auto& [h, mult] : rp_factor(norm).factors) {
      NFPoly g = gcd(G, nf_lift(h, K));
      out.push_back(compose(g, back).monic());
    }
    return out;
  }
}

}  // namespace quatpoly
