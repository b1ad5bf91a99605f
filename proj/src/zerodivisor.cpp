// Zero divisors of (alpha, beta / Q) tensor L, searched in layers.

#include <random>

#include "quatpoly/detail/modular.hpp"
#include "quatpoly/errors.hpp"
#include "quatpoly/quadform.hpp"

namespace quatpoly {

RatPoly certificate_norm(const Rational& alpha, const Rational& beta, const RatPoly& p,
                         const ZeroDivisorCertificate& c) {
  const auto& q = c.q;
  RatPoly n = q[0] * q[0] - RatPoly::constant(alpha) * q[1] * q[1] - RatPoly::constant(beta) * q[2] * q[2] +
              RatPoly::constant(alpha * beta) * q[3] * q[3];
  return n % p;
}

namespace {

bool is_valid_certificate(const Rational& alpha, const Rational& beta, const RatPoly& p,
                          const ZeroDivisorCertificate& c) {
  bool nonzero = false;
  for (const auto& qi : c.q) {
    if (qi.degree() >= p.degree()) return false;
    if (!qi.is_zero()) nonzero = true;
  }
  return nonzero && certificate_norm(alpha, beta, p, c).is_zero();
}

// Layer 2: s - a with s = sqrt(d) in L and a a pure quaternion squaring to d.
std::optional<ZeroDivisorCertificate> from_subfield(const Rational& alpha, const Rational& beta,
                                                    const NumberField& L) {
  for (const auto& d : nf_quadratic_subfields(L)) {
    if (!quadratic_field_splits(alpha, beta, d)) continue;
    auto pure = represent_pure(alpha, beta, Rational(d));
    auto s = nf_sqrt(Rational(d), L);
    if (!pure || !s) throw InternalInvariantViolation("splitting subfield without an embedding");
    ZeroDivisorCertificate c;
    c.q[0] = s->poly();
    for (int i = 0; i < 3; ++i) c.q[i + 1] = RatPoly::constant(-(*pure)[i]);
    return c;
  }
  return std::nullopt;
}

// Residue maps L -> F_l, theta -> r, at primes where they detect squares.
struct ResidueMap {
  detail::PrimeField field;
  std::uint64_t root;
};

std::vector<ResidueMap> residue_maps(const Rational& alpha, const Rational& beta, const RatPoly& m) {
  const Rational disc = rp_discriminant(m);
  const Integer bad = disc.get_num() * disc.get_den() * common_denominator(m.coeffs()) * alpha.get_num() *
                      alpha.get_den() * beta.get_num() * beta.get_den();
  std::vector<ResidueMap> out;
  for (std::uint64_t l = 3; l < 400 && out.size() < 8; l = next_prime(Integer(static_cast<unsigned long>(l))).get_ui()) {
    if (mpz_divisible_ui_p(bad.get_mpz_t(), l) != 0) continue;
    detail::PrimeField F(l);
    detail::ModPoly mm(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) mm[i] = F.reduce(m[i]);
    for (auto r : detail::mp_roots(F, mm)) out.push_back({F, r});
  }
  return out;
}

bool passes_residue_filter(const std::vector<ResidueMap>& maps, const RatPoly& g) {
  for (const auto& rm : maps) {
    const auto& F = rm.field;
    std::uint64_t v = 0;
    for (std::size_t i = g.size(); i-- > 0;) v = F.add(F.mul(v, rm.root), F.reduce(g[i]));
    if (v != 0 && F.pow(v, (F.p() - 1) / 2) != 1) return false;
  }
  return true;
}

// Layer 3: pure zero divisors a1 i + a2 j + a3 k, i.e. beta a2^2 =
// alpha beta a3^2 - alpha a1^2, with a1, a3 of bounded height.
std::optional<ZeroDivisorCertificate> bounded_search(const Rational& alpha, const Rational& beta,
                                                     const NumberField& L, const ZeroDivisorOptions& opt) {
  const int n = L.degree();
  const auto maps = residue_maps(alpha, beta, L.minpoly());
  std::mt19937_64 rng(opt.seed);
  for (int h = 1; h <= opt.max_height; ++h) {
    std::uniform_int_distribution<long> coord(-h, h);
    auto random_element = [&] {
      std::vector<Rational> c(static_cast<std::size_t>(n));
      for (auto& x : c) x = coord(rng);
      return NFElement(L, RatPoly(c));
    };
    for (int sample = 0; sample < opt.samples_per_height; ++sample) {
      NFElement a1 = random_element(), a3 = random_element();
      if (is_zero(a1) && is_zero(a3)) continue;
      NFElement g = (NFElement(alpha * beta) * a3 * a3 - NFElement(alpha) * a1 * a1) / NFElement(beta);
      std::optional<NFElement> a2;
      if (is_zero(g)) {
        a2 = NFElement(L, RatPoly());
      } else {
        if (!passes_residue_filter(maps, g.poly())) continue;
        a2 = nf_sqrt_element(g);
      }
      if (!a2) continue;
      ZeroDivisorCertificate c;
      c.q = {RatPoly(), a1.poly(), a2->poly(), a3.poly()};
      return c;
    }
  }
  return std::nullopt;
}

}  // namespace

ZeroDivisorCertificate find_zero_divisor(const Rational& alpha, const Rational& beta, const NumberField& L,
                                         const std::optional<ZeroDivisorCertificate>& cert,
                                         const ZeroDivisorOptions& options) {
  const RatPoly& p = L.minpoly();
  if (cert) {
    if (!is_valid_certificate(alpha, beta, p, *cert))
      throw InvalidCertificate("certificate norm does not vanish modulo " + rp_to_string(p));
    return *cert;
  }
  std::optional<ZeroDivisorCertificate> found = from_subfield(alpha, beta, L);
  if (!found) found = bounded_search(alpha, beta, L, options);
  if (!found)
    throw SearchExhausted("no zero divisor found up to height " + std::to_string(options.max_height) +
                              "; supply a certificate for " + rp_to_string(p),
                          rp_to_string(p));
  if (!is_valid_certificate(alpha, beta, p, *found))
    throw InternalInvariantViolation("zero divisor search produced an invalid certificate");
  return *found;
}

}  // namespace quatpoly
