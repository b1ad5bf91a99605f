#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "quatpoly/errors.hpp"
#include "quatpoly/rational.hpp"

namespace quatpoly {

namespace detail {
// Free-function lookup that a member named is_zero would otherwise hide.
template <class F>
bool coeff_is_zero(const F& c) {
  return is_zero(c);
}
}  // namespace detail

/// Dense univariate polynomial over a commutative field F, lowest degree
/// first. F must be default-constructible to zero, constructible from a
/// Rational, and provide field arithmetic plus a free `is_zero(const F&)`.
///
/// No trailing zero coefficient is ever stored; the zero polynomial is the
/// empty sequence and has degree -1.
template <class F>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const F& c) { return Poly(std::vector<F>{c}); }
  static Poly monomial(const F& c, std::size_t degree) {
    std::vector<F> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
  }
  /// The polynomial x.
  static Poly x() { return monomial(F(Rational(1)), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  std::size_t size() const { return c_.size(); }

  const F& operator[](std::size_t i) const { return c_[i]; }
  F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F(); }
  const F& leading() const {
    if (c_.empty()) throw DegenerateInput("leading coefficient of zero polynomial");
    return c_.back();
  }
  const std::vector<F>& coeffs() const { return c_; }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly operator-() const {
    std::vector<F> v;
    v.reserve(c_.size());
    for (const auto& a : c_) v.push_back(-a);
    return Poly(std::move(v));
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
  }
  friend Poly operator*(const F& s, const Poly& p) {
    std::vector<F> v;
    v.reserve(p.c_.size());
    for (const auto& a : p.c_) v.push_back(s * a);
    return Poly(std::move(v));
  }
  friend Poly operator*(const Poly& p, const F& s) { return s * p; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Horner evaluation.
  F operator()(const F& x) const {
    F acc{};
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<F> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * F(Rational(static_cast<long>(i)));
    return Poly(std::move(v));
  }

  Poly monic() const {
    if (c_.empty()) return {};
    F inv = F(Rational(1)) / c_.back();
    return inv * *this;
  }

  bool is_monic() const { return !c_.empty() && c_.back() == F(Rational(1)); }

 private:
  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<F> c_;
};

/// Euclidean division a = q*b + r, deg r < deg b.
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<F>{}, a};
  std::vector<F> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<F> quo(rem.size() - db);
  const F inv_lc = F(Rational(1)) / b.leading();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (is_zero(rem[k])) continue;
    F t = rem[k] * inv_lc;
    quo[k - db] = t;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] = rem[k - db + j] - t * b[j];
  }
  rem.resize(db);
  return {Poly<F>(std::move(quo)), Poly<F>(std::move(rem))};
}

template <class F>
Poly<F> operator%(const Poly<F>& a, const Poly<F>& b) {
  return divmod(a, b).second;
}

/// Quotient of an exact division; throws if the remainder is nonzero.
template <class F>
Poly<F> exact_quotient(const Poly<F>& a, const Poly<F>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalInvariantViolation("polynomial division was expected to be exact");
  return q;
}

/// Monic gcd; gcd(0, 0) is the zero polynomial.
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Returns (g, s, t) with s*a + t*b = g, g monic.
template <class F>
struct ExtGcd {
  Poly<F> g, s, t;
};

template <class F>
ExtGcd<F> ext_gcd(const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r0 = a, r1 = b;
  Poly<F> s0 = Poly<F>::constant(F(Rational(1))), s1;
  Poly<F> t0, t1 = Poly<F>::constant(F(Rational(1)));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly<F> s2 = s0 - q * s1;
    Poly<F> t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  F inv = F(Rational(1)) / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

template <class F>
Poly<F> pow(const Poly<F>& p, unsigned e) {
  Poly<F> result = Poly<F>::constant(F(Rational(1)));
  Poly<F> base = p;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

/// p(q(x)) by Horner.
template <class F>
Poly<F> compose(const Poly<F>& p, const Poly<F>& q) {
  Poly<F> acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * q + Poly<F>::constant(p[i]);
  return acc;
}

}  // namespace quatpoly
