#include "quatpoly/qpoly.hpp"

#include "quatpoly/errors.hpp"

namespace quatpoly {

// ---- ring structure ----

QPoly::QPoly(const QuaternionAlgebra& A, std::vector<Quaternion> coeffs) : algebra_(A), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (c.algebra() && *c.algebra() != A)
      throw AlgebraMismatch("coefficient from " + c.algebra()->to_string() + " in a polynomial over " + A.to_string());
  trim();
}

QPoly QPoly::constant(const QuaternionAlgebra& A, const Quaternion& c) { return QPoly(A, {c}); }

QPoly QPoly::x(const QuaternionAlgebra& A) {
  return QPoly(A, {Quaternion(), Quaternion::scalar(A, 1)});
}

QPoly QPoly::linear(const QuaternionAlgebra& A, const Quaternion& a) {
  return QPoly(A, {-a, Quaternion::scalar(A, 1)});
}

QPoly QPoly::central(const QuaternionAlgebra& A, const RatPoly& p) {
  std::vector<Quaternion> c;
  c.reserve(p.size());
  for (const auto& v : p.coeffs()) c.push_back(Quaternion::scalar(A, v));
  return QPoly(A, std::move(c));
}

QPoly QPoly::from_coords(const QuaternionAlgebra& A, const std::array<RatPoly, 4>& p) {
  std::size_t n = 0;
  for (const auto& pi : p) n = std::max(n, pi.size());
  std::vector<Quaternion> c;
  c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) c.emplace_back(A, p[0].coeff(i), p[1].coeff(i), p[2].coeff(i), p[3].coeff(i));
  return QPoly(A, std::move(c));
}

Quaternion QPoly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : Quaternion::scalar(algebra_, 0);
}

const Quaternion& QPoly::leading() const {
  if (c_.empty()) throw DegenerateInput("leading coefficient of the zero polynomial");
  return c_.back();
}

bool QPoly::is_monic() const { return !c_.empty() && c_.back() == Quaternion::scalar(algebra_, 1); }

bool QPoly::is_central() const {
  for (const auto& c : c_)
    if (!c.is_central()) return false;
  return true;
}

RatPoly QPoly::coord(int index) const {
  std::vector<Rational> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(c[static_cast<std::size_t>(index)]);
  return RatPoly(std::move(v));
}

std::array<RatPoly, 4> QPoly::coords() const { return {coord(0), coord(1), coord(2), coord(3)}; }

void QPoly::trim() {
  while (!c_.empty() && quatpoly::is_zero(c_.back())) c_.pop_back();
}

const QuaternionAlgebra& QPoly::common_algebra(const QPoly& a, const QPoly& b) {
  if (a.algebra_ != b.algebra_)
    throw AlgebraMismatch("polynomials over " + a.algebra_.to_string() + " and " + b.algebra_.to_string());
  return a.algebra_;
}

QPoly QPoly::operator-() const {
  std::vector<Quaternion> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(-c);
  return QPoly(algebra_, std::move(v));
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  const QuaternionAlgebra& A = QPoly::common_algebra(a, b);
  std::vector<Quaternion> v(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return QPoly(A, std::move(v));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  const QuaternionAlgebra& A = QPoly::common_algebra(a, b);
  std::vector<Quaternion> v(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return QPoly(A, std::move(v));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  const QuaternionAlgebra& A = QPoly::common_algebra(a, b);
  if (a.is_zero() || b.is_zero()) return QPoly(A);
  std::vector<Quaternion> v(a.size() + b.size() - 1, Quaternion::scalar(A, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) v[i + j] = v[i + j] + a[i] * b[j];
  }
  return QPoly(A, std::move(v));
}

QPoly operator*(const Quaternion& c, const QPoly& p) {
  std::vector<Quaternion> v;
  v.reserve(p.size());
  for (const auto& a : p.coeffs()) v.push_back(c * a);
  return QPoly(p.algebra(), std::move(v));
}

QPoly operator*(const QPoly& p, const Quaternion& c) {
  std::vector<Quaternion> v;
  v.reserve(p.size());
  for (const auto& a : p.coeffs()) v.push_back(a * c);
  return QPoly(p.algebra(), std::move(v));
}

bool operator==(const QPoly& a, const QPoly& b) { return a.algebra_ == b.algebra_ && a.c_ == b.c_; }

QPoly qp_conj(const QPoly& p) {
  std::vector<Quaternion> v;
  v.reserve(p.size());
  for (const auto& a : p.coeffs()) v.push_back(a.conj());
  return QPoly(p.algebra(), std::move(v));
}

RatPoly qp_norm(const QPoly& p) {
  // the norm form over the commutative ring Q[x]
  const QuaternionAlgebra& A = p.algebra();
  const auto c = p.coords();
  return c[0] * c[0] - RatPoly::constant(A.alpha()) * c[1] * c[1] - RatPoly::constant(A.beta()) * c[2] * c[2] +
         RatPoly::constant(A.alpha_beta()) * c[3] * c[3];
}

QPoly qp_monic(const QPoly& p) {
  if (p.is_zero() || p.is_monic()) return p;
  return q_inv(p.leading()) * p;
}

// ---- right Euclidean structure ----

std::pair<QPoly, QPoly> qp_right_divmod(const QPoly& p, const QPoly& d) {
  const QuaternionAlgebra& A = p.algebra();
  if (A != d.algebra()) throw AlgebraMismatch("right division across algebras");
  if (d.is_zero()) throw DivisionByZero("right division by the zero polynomial");
  if (p.degree() < d.degree()) return {QPoly(A), p};
  std::vector<Quaternion> rem = p.coeffs();
  const std::size_t dd = static_cast<std::size_t>(d.degree());
  std::vector<Quaternion> quo(rem.size() - dd, Quaternion::scalar(A, 0));
  const Quaternion inv = q_inv(d.leading());
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (is_zero(rem[k])) continue;
    // subtract t x^(k - dd) d, whose leading coefficient is rem[k]
    const Quaternion t = rem[k] * inv;
    quo[k - dd] = t;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] = rem[k - dd + j] - t * d[j];
  }
  rem.resize(dd);
  return {QPoly(A, std::move(quo)), QPoly(A, std::move(rem))};
}

QPoly qp_right_exact_quotient(const QPoly& p, const QPoly& d) {
  auto [q, r] = qp_right_divmod(p, d);
  if (!r.is_zero()) throw InternalInvariantViolation("right division was expected to be exact");
  return q;
}

namespace {

// Extended right Euclid. On return r0 = u0 p + v0 q is the last nonzero
// remainder and u1 p + v1 q = 0.
struct EuclidState {
  QPoly r0, r1, u0, u1, v0, v1;
};

EuclidState right_euclid(const QPoly& p, const QPoly& q) {
  const QuaternionAlgebra& A = p.algebra();
  const QPoly one = QPoly::constant(A, Quaternion::scalar(A, 1));
  EuclidState s{p, q, one, QPoly(A), QPoly(A), one};
  while (!s.r1.is_zero()) {
    auto [quo, rem] = qp_right_divmod(s.r0, s.r1);
    QPoly u2 = s.u0 - quo * s.u1;
    QPoly v2 = s.v0 - quo * s.v1;
    s.r0 = std::move(s.r1);
    s.r1 = std::move(rem);
    s.u0 = std::move(s.u1);
    s.u1 = std::move(u2);
    s.v0 = std::move(s.v1);
    s.v1 = std::move(v2);
  }
  return s;
}

}  // namespace

GcrdResult qp_gcrd_ext(const QPoly& p, const QPoly& q) {
  if (p.algebra() != q.algebra()) throw AlgebraMismatch("gcrd across algebras");
  if (p.is_zero() && q.is_zero()) throw DegenerateInput("gcrd of two zero polynomials");
  EuclidState s = right_euclid(p, q);
  const Quaternion inv = q_inv(s.r0.leading());
  return {inv * s.r0, inv * s.u0, inv * s.v0};
}

QPoly qp_gcrd(const QPoly& p, const QPoly& q) { return qp_gcrd_ext(p, q).gcrd; }

QPoly qp_lclm(const QPoly& p, const QPoly& q) {
  if (p.algebra() != q.algebra()) throw AlgebraMismatch("lclm across algebras");
  if (p.is_zero() || q.is_zero()) throw DegenerateInput("lclm with a zero polynomial");
  EuclidState s = right_euclid(p, q);
  return qp_monic(s.u1 * p);
}

Quaternion qp_evaluate(const QPoly& p, const Quaternion& a) {
  const QuaternionAlgebra& A = p.algebra();
  Quaternion acc = Quaternion::scalar(A, 0);
  Quaternion power = Quaternion::scalar(A, 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc = acc + p[i] * power;
    if (i + 1 < p.size()) power = power * a;
  }
  return acc;
}

// ---- structure theory ----

BeckDecomposition beck_decompose(const QPoly& p) {
  if (p.is_zero()) throw DegenerateInput("Beck decomposition of the zero polynomial");
  const QuaternionAlgebra& A = p.algebra();
  const Quaternion c = p.leading();
  const QPoly m = q_inv(c) * p;
  auto coords = m.coords();
  RatPoly g;
  for (const auto& ci : coords)
    if (!ci.is_zero()) g = g.is_zero() ? ci.monic() : rp_gcd(g, ci);
  for (auto& ci : coords) ci = exact_quotient(ci, g);
  return {c, QPoly::from_coords(A, coords), g};
}

bool is_irreducible(const QPoly& p) {
  if (p.degree() < 1) throw DegenerateInput("irreducibility of a constant polynomial");
  const QuaternionAlgebra& A = p.algebra();
  const BeckDecomposition b = beck_decompose(p);
  if (b.central_free.degree() == 0) {
    if (!rp_is_irreducible(b.central)) return false;
    // an irreducible central polynomial of odd degree cannot be a norm
    if (b.central.degree() % 2 == 1) return true;
    return !nf_splits_quaternion(A.alpha(), A.beta(), NumberField::unchecked(b.central));
  }
  if (b.central.degree() == 0) return rp_is_irreducible(qp_norm(b.central_free));
  return false;
}

std::optional<std::pair<QPoly, QPoly>> subfield_factor(const RatPoly& p, const QuaternionAlgebra& A) {
  if (p.degree() < 2 || !p.is_monic() || !rp_is_irreducible(p))
    throw PreconditionViolation("subfield factorization needs a monic irreducible polynomial of degree >= 2, got " +
                                rp_to_string(p));
  const NumberField L = NumberField::unchecked(p);
  for (const auto& d : nf_quadratic_subfields(L)) {
    if (!quadratic_field_splits(A.alpha(), A.beta(), d)) continue;
    const auto over_k = nf_factor_over_quadratic(p, d);
    if (over_k.size() < 2) continue;
    // a + b sqrt(d) maps to a + b emb
    const Quaternion emb = embed_quadratic(A, d);
    std::vector<Quaternion> c;
    for (const auto& e : over_k.front().coeffs()) c.push_back(Quaternion::scalar(A, e.poly().coeff(0)) + Quaternion(e.poly().coeff(1)) * emb);
    QPoly q(A, std::move(c));
    QPoly qbar = qp_conj(q);
    if (q * qbar != QPoly::central(A, p)) throw InternalInvariantViolation("subfield factors do not multiply back");
    return std::make_pair(std::move(q), std::move(qbar));
  }
  return std::nullopt;
}

QPoly expand(const QuaternionAlgebra& A, const Factorization& f) {
  QPoly acc = QPoly::constant(A, f.leading);
  for (const auto& g : f.factors) acc = acc * g;
  return acc;
}

}  // namespace quatpoly
