// Factorization and root finding over a division quaternion algebra.

#include "quatpoly/errors.hpp"
#include "quatpoly/qpoly.hpp"

namespace quatpoly {

namespace {

QPoly remainder_by_central(const QPoly& p, const RatPoly& q) {
  auto c = p.coords();
  for (auto& ci : c) ci = ci % q;
  return QPoly::from_coords(p.algebra(), c);
}

QPoly divide_by_central(const QPoly& p, const RatPoly& q) {
  auto c = p.coords();
  for (auto& ci : c) ci = exact_quotient(ci, q);
  return QPoly::from_coords(p.algebra(), c);
}

// Divides by the positive rational content of all coordinates.
QPoly remove_content(const QPoly& p) {
  std::vector<Rational> all;
  for (const auto& c : p.coeffs())
    for (const auto& v : c.coords())
      if (!is_zero(v)) all.push_back(v);
  if (all.empty()) return p;
  Integer num = 0;
  for (const auto& v : all) num = gcd(num, Integer(v.get_num()));
  const Integer den = common_denominator(all);
  return p * Quaternion(make_rational(den, num));
}

}  // namespace

Factorization factor_central_irreducible(const RatPoly& p, const QuaternionAlgebra& A,
                                         const std::optional<ZeroDivisorCertificate>& certificate,
                                         const ZeroDivisorOptions& options, ReductionTrace* trace) {
  if (p.degree() < 1 || !p.is_monic())
    throw PreconditionViolation("central factorization needs a monic nonconstant polynomial, got " + rp_to_string(p));
  const Quaternion one = Quaternion::scalar(A, 1);
  if (p.degree() == 1) return {one, {QPoly::central(A, p)}};
  const NumberField L(p);
  if (!nf_splits_quaternion(A.alpha(), A.beta(), L)) return {one, {QPoly::central(A, p)}};
  if (auto s = subfield_factor(p, A)) return {one, {s->first, s->second}};

  const ZeroDivisorCertificate zd = find_zero_divisor(A.alpha(), A.beta(), L, certificate, options);
  QPoly P = QPoly::from_coords(A, zd.q);
  // p q = P conj(P) throughout; deg q drops on every pass
  RatPoly q = exact_quotient(qp_norm(P), p);
  if (trace) trace->q.push_back(q);
  while (q.degree() > 0) {
    const QPoly r = remainder_by_central(P, q);
    P = remove_content(divide_by_central(P * qp_conj(r), q));
    RatPoly next = exact_quotient(qp_norm(P), p);
    if (next.degree() >= q.degree())
      throw InternalInvariantViolation("degree of the extraneous factor did not decrease");
    q = std::move(next);
    if (trace) trace->q.push_back(q);
  }
  QPoly f = P * q_inv(P.leading());
  QPoly fbar = qp_conj(f);
  if (f * fbar != QPoly::central(A, p)) throw InternalInvariantViolation("central factors do not multiply back");
  return {one, {std::move(f), std::move(fbar)}};
}

std::pair<QPoly, QPoly> swap_factors(const QPoly& p, const QPoly& q) {
  if (p.is_zero() || q.is_zero()) throw DegenerateInput("swapping a zero factor");
  const RatPoly np = qp_norm(p), nq = qp_norm(q);
  const auto eg = ext_gcd(np, nq);
  if (eg.g.degree() != 0) throw PreconditionViolation("factor norms are not coprime");
  // s N(p) + t N(q) = 1, so q (conj(q) t) = 1 modulo N(p)
  const QPoly q_star = qp_conj(q) * QPoly::central(p.algebra(), eg.t);
  const QPoly p1 = qp_monic(qp_right_exact_quotient(qp_lclm(p, q_star), q_star));
  const QPoly q1 = qp_right_exact_quotient(p * q, p1);
  if (qp_norm(p1) != np.monic()) throw InternalInvariantViolation("swapped factor has the wrong norm");
  return {q1, p1};
}

Factorization factor(const QPoly& p, const FactorOptions& options) {
  if (p.is_zero()) throw DegenerateInput("factorization of the zero polynomial");
  const QuaternionAlgebra& A = p.algebra();
  if (!A.is_division()) throw SplitAlgebra(A.to_string() + " is split: it is isomorphic to M_2(Q)");
  if (p.degree() == 0) return {p.leading(), {}};

  const BeckDecomposition b = beck_decompose(p);
  Factorization out{b.leading, {}};
  if (b.central.degree() > 0) {
    for (const auto& [r, e] : rp_factor(b.central).factors) {
      std::optional<ZeroDivisorCertificate> cert;
      if (options.certificates) cert = options.certificates->find(A.alpha(), A.beta(), r);
      const Factorization f = factor_central_irreducible(r, A, cert, options.search);
      for (int i = 0; i < e; ++i) out.factors.insert(out.factors.end(), f.factors.begin(), f.factors.end());
    }
  }

  QPoly q = b.central_free;
  if (q.degree() > 0) {
    auto norm_factors = rp_factor(qp_norm(q)).factors;
    std::vector<QPoly> extracted;
    std::size_t k = norm_factors.size();
    while (q.degree() > 0) {
      if (k == 0) throw InternalInvariantViolation("norm factors exhausted before the polynomial");
      auto& [nk, eps] = norm_factors[k - 1];
      // the rightmost factor with norm nk
      QPoly r = qp_gcrd(q, QPoly::central(A, nk));
      if (2 * r.degree() != nk.degree())
        throw InternalInvariantViolation("gcrd with a norm factor has the wrong degree");
      q = qp_right_exact_quotient(q, r);
      extracted.push_back(std::move(r));
      if (--eps == 0) --k;
    }
    out.factors.insert(out.factors.begin(), extracted.rbegin(), extracted.rend());
  }
  return out;
}

RootSet roots(const QPoly& p) {
  if (p.is_zero()) throw DegenerateInput("roots of the zero polynomial");
  RootSet out;
  if (p.degree() == 0) return out;
  const QuaternionAlgebra& A = p.algebra();
  const BeckDecomposition b = beck_decompose(p);

  auto add = [&](const Quaternion& a) {
    if (!is_zero(qp_evaluate(p, a))) throw InternalInvariantViolation("root candidate " + to_string(a) + " is not a root");
    for (const auto& r : out.representatives)
      if (is_conjugate(r, a)) return;
    out.representatives.push_back(a);
  };

  if (b.central.degree() > 0) {
    for (const auto& [r, e] : rp_factor(b.central).factors) {
      if (r.degree() == 1) {
        add(Quaternion::scalar(A, -r[0]));
      } else if (r.degree() == 2) {
        // r = (x - a)(x - conj a) when Q[x]/(r) splits A
        if (auto s = subfield_factor(r, A)) add(-s->first[0]);
      }
    }
  }
  const QPoly& q = b.central_free;
  if (q.degree() > 0) {
    for (const auto& [r, e] : rp_factor(qp_norm(q)).factors) {
      if (r.degree() != 2) continue;
      QPoly g = qp_gcrd(q, QPoly::central(A, r));
      if (g.degree() != 1) throw InternalInvariantViolation("gcrd with a quadratic norm factor is not linear");
      add(-g[0]);
    }
  }
  return out;
}

}  // namespace quatpoly
