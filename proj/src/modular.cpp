#include "quatpoly/detail/modular.hpp"

#include <algorithm>
#include <random>

#include "quatpoly/errors.hpp"

namespace quatpoly::detail {

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1 % p_;
  a %= p_;
  while (e > 0) {
    if (e & 1U) r = mul(r, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw DivisionByZero("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

std::uint64_t PrimeField::reduce(const Integer& a) const {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), p_);
  return r.get_ui();
}

std::uint64_t PrimeField::reduce(const Rational& a) const {
  std::uint64_t den = reduce(a.get_den());
  return mul(reduce(a.get_num()), inv(den));
}

// ---------------------------------------------------------------- ModPoly

void mp_trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int mp_degree(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

ModPoly mp_add(const PrimeField& f, const ModPoly& a, const ModPoly& b) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = f.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  mp_trim(r);
  return r;
}

ModPoly mp_sub(const PrimeField& f, const ModPoly& a, const ModPoly& b) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = f.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  mp_trim(r);
  return r;
}

ModPoly mp_mul(const PrimeField& f, const ModPoly& a, const ModPoly& b) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  mp_trim(r);
  return r;
}

ModPoly mp_scale(const PrimeField& f, const ModPoly& a, std::uint64_t s) {
  ModPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], s);
  mp_trim(r);
  return r;
}

void mp_divmod(const PrimeField& f, const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r) {
  if (b.empty()) throw DivisionByZero("ModPoly division by zero");
  r = a;
  if (a.size() < b.size()) {
    q.clear();
    return;
  }
  const std::size_t db = b.size() - 1;
  q.assign(a.size() - db, 0);
  const std::uint64_t inv_lc = f.inv(b.back());
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k] == 0) continue;
    std::uint64_t t = f.mul(r[k], inv_lc);
    q[k - db] = t;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] = f.sub(r[k - db + j], f.mul(t, b[j]));
  }
  r.resize(db);
  mp_trim(r);
  mp_trim(q);
}

ModPoly mp_rem(const PrimeField& f, const ModPoly& a, const ModPoly& b) {
  ModPoly q, r;
  mp_divmod(f, a, b, q, r);
  return r;
}

ModPoly mp_monic(const PrimeField& f, const ModPoly& a) {
  if (a.empty()) return a;
  return mp_scale(f, a, f.inv(a.back()));
}

ModPoly mp_gcd(const PrimeField& f, ModPoly a, ModPoly b) {
  while (!b.empty()) {
    ModPoly r = mp_rem(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return mp_monic(f, a);
}

void mp_ext_gcd(const PrimeField& f, const ModPoly& a, const ModPoly& b, ModPoly& g, ModPoly& s,
                ModPoly& t) {
  ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    ModPoly q, r;
    mp_divmod(f, r0, r1, q, r);
    ModPoly s2 = mp_sub(f, s0, mp_mul(f, q, s1));
    ModPoly t2 = mp_sub(f, t0, mp_mul(f, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  std::uint64_t inv = r0.empty() ? 1 : f.inv(r0.back());
  g = mp_scale(f, r0, inv);
  s = mp_scale(f, s0, inv);
  t = mp_scale(f, t0, inv);
}

ModPoly mp_powmod(const PrimeField& f, const ModPoly& base, const Integer& e, const ModPoly& m) {
  ModPoly result{1};
  result = mp_rem(f, result, m);
  ModPoly b = mp_rem(f, base, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mp_rem(f, mp_mul(f, result, result), m);
    if (mpz_tstbit(e.get_mpz_t(), i) != 0) result = mp_rem(f, mp_mul(f, result, b), m);
  }
  return result;
}

ModPoly mp_derivative(const PrimeField& f, const ModPoly& a) {
  if (a.size() <= 1) return {};
  ModPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = f.mul(a[i], i % f.p());
  mp_trim(r);
  return r;
}

namespace {

bool mp_less(const ModPoly& a, const ModPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

ModPoly random_poly(const PrimeField& f, std::size_t below_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, f.p() - 1);
  ModPoly r(below_degree);
  for (auto& c : r) c = dist(rng);
  mp_trim(r);
  return r;
}

// Equal-degree splitting: g is a product of irreducibles of degree d.
void equal_degree_split(const PrimeField& f, const ModPoly& g, int d, std::mt19937_64& rng,
                        std::vector<ModPoly>& out) {
  if (mp_degree(g) == d) {
    out.push_back(g);
    return;
  }
  const std::size_t n = g.size() - 1;
  Integer q = 1;
  for (int i = 0; i < d; ++i) q *= static_cast<unsigned long>(f.p());
  for (;;) {
    ModPoly r = random_poly(f, n, rng);
    if (mp_degree(r) < 1) continue;
    ModPoly w;
    if (f.p() == 2) {
      // trace map r + r^2 + ... + r^(2^(d-1))
      ModPoly term = r;
      w = r;
      for (int i = 1; i < d; ++i) {
        term = mp_rem(f, mp_mul(f, term, term), g);
        w = mp_add(f, w, term);
      }
    } else {
      w = mp_powmod(f, r, Integer((q - 1) / 2), g);
      w = mp_sub(f, w, ModPoly{1});
    }
    ModPoly h = mp_gcd(f, g, w);
    if (mp_degree(h) > 0 && mp_degree(h) < mp_degree(g)) {
      ModPoly quo, rem;
      mp_divmod(f, g, h, quo, rem);
      equal_degree_split(f, h, d, rng, out);
      equal_degree_split(f, mp_monic(f, quo), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<ModPoly> mp_factor_squarefree(const PrimeField& f, const ModPoly& a_in) {
  std::vector<ModPoly> out;
  ModPoly a = mp_monic(f, a_in);
  if (mp_degree(a) < 1) return out;
  std::mt19937_64 rng(0x5eed5eedULL ^ f.p());
  const Integer p = static_cast<unsigned long>(f.p());
  ModPoly x{0, 1};
  ModPoly h = mp_rem(f, x, a);
  for (int d = 1; 2 * d <= mp_degree(a); ++d) {
    h = mp_powmod(f, h, p, a);
    ModPoly g = mp_gcd(f, a, mp_sub(f, h, x));
    if (mp_degree(g) > 0) {
      equal_degree_split(f, g, d, rng, out);
      ModPoly q, r;
      mp_divmod(f, a, g, q, r);
      a = mp_monic(f, q);
      h = mp_rem(f, h, a);
    }
  }
  if (mp_degree(a) > 0) out.push_back(a);
  std::sort(out.begin(), out.end(), mp_less);
  return out;
}

std::vector<std::uint64_t> mp_roots(const PrimeField& f, const ModPoly& a) {
  std::vector<std::uint64_t> roots;
  if (mp_degree(a) < 1) return roots;
  if (f.p() <= 64) {
    for (std::uint64_t c = 0; c < f.p(); ++c) {
      std::uint64_t v = 0;
      for (std::size_t i = a.size(); i-- > 0;) v = f.add(f.mul(v, c), a[i]);
      if (v == 0) roots.push_back(c);
    }
    return roots;
  }
  // restrict to the product of linear factors: gcd(a, x^p - x)
  ModPoly x{0, 1};
  ModPoly xp = mp_powmod(f, x, Integer(static_cast<unsigned long>(f.p())), a);
  ModPoly lin = mp_gcd(f, a, mp_sub(f, xp, x));
  for (const auto& fac : mp_factor_squarefree(f, lin)) roots.push_back(f.neg(fac[0]));
  std::sort(roots.begin(), roots.end());
  return roots;
}

// ---------------------------------------------------------------- matrices

std::vector<std::size_t> mm_rref(const PrimeField& f, ModMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t sel = row;
    while (sel < m.rows && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
    std::uint64_t inv = f.inv(m.at(row, col));
    for (std::size_t j = 0; j < m.cols; ++j) m.at(row, j) = f.mul(m.at(row, j), inv);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      std::uint64_t factor = m.at(i, col);
      for (std::size_t j = 0; j < m.cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<std::uint64_t>> mm_kernel(const PrimeField& f, ModMatrix m) {
  auto pivots = mm_rref(f, m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint64_t> v(m.cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(m.at(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t mm_rank(const PrimeField& f, ModMatrix m) { return mm_rref(f, m).size(); }

// ---------------------------------------------------------------- ZPoly

void zp_trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Integer symmetric_mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

ZPoly zp_mod(const ZPoly& a, const Integer& m) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_mod(r[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
  zp_trim(r);
  return r;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return zp_mod(r, m);
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return zp_mod(r, m);
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return zp_mod(r, m);
}

void zp_divmod_monic(const ZPoly& a, const ZPoly& b, const Integer& m, ZPoly& q, ZPoly& r) {
  r = zp_mod(a, m);
  if (r.size() < b.size()) {
    q.clear();
    return;
  }
  const std::size_t db = b.size() - 1;
  q.assign(r.size() - db, Integer(0));
  for (std::size_t k = r.size(); k-- > db;) {
    Integer t;
    mpz_mod(t.get_mpz_t(), r[k].get_mpz_t(), m.get_mpz_t());
    if (t == 0) continue;
    q[k - db] = t;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= t * b[j];
  }
  r.resize(db);
  r = zp_mod(r, m);
  zp_trim(q);
}

namespace {

ZPoly to_zpoly(const ModPoly& a) {
  ZPoly r;
  for (auto c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

struct HenselState {
  ZPoly g, h, s, t;
};

// One quadratic step: from modulus m to m^2 (von zur Gathen & Gerhard 15.10).
HenselState hensel_step(const ZPoly& f, const HenselState& in, const Integer& m) {
  const Integer m2 = m * m;
  ZPoly e = zp_sub(f, zp_mul(in.g, in.h, m2), m2);
  ZPoly q, r;
  zp_divmod_monic(zp_mul(in.s, e, m2), in.h, m2, q, r);
  HenselState out;
  out.g = zp_add(zp_add(in.g, zp_mul(in.t, e, m2), m2), zp_mul(q, in.g, m2), m2);
  out.h = zp_add(in.h, r, m2);
  ZPoly b = zp_sub(zp_add(zp_mul(in.s, out.g, m2), zp_mul(in.t, out.h, m2), m2), ZPoly{Integer(1)}, m2);
  ZPoly c, d;
  zp_divmod_monic(zp_mul(in.s, b, m2), out.h, m2, c, d);
  out.s = zp_sub(in.s, d, m2);
  out.t = zp_sub(zp_sub(in.t, zp_mul(in.t, b, m2), m2), zp_mul(c, out.g, m2), m2);
  return out;
}

std::vector<ZPoly> lift_rec(const ZPoly& f, const std::vector<ModPoly>& fs, std::size_t lo,
                            std::size_t hi, const PrimeField& field, const Integer& modulus) {
  if (hi - lo == 1) {
    Integer inv;
    mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), modulus.get_mpz_t());
    ZPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i] * inv;
    return {zp_mod(r, modulus)};
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  ModPoly g0{field.reduce(f.back())};
  for (std::size_t i = lo; i < mid; ++i) g0 = mp_mul(field, g0, fs[i]);
  ModPoly h0{1};
  for (std::size_t i = mid; i < hi; ++i) h0 = mp_mul(field, h0, fs[i]);
  ModPoly g, s, t;
  mp_ext_gcd(field, g0, h0, g, s, t);
  if (g != ModPoly{1}) throw InternalInvariantViolation("Hensel lifting: factors not coprime mod p");
  HenselState st{to_zpoly(g0), to_zpoly(h0), to_zpoly(s), to_zpoly(t)};
  Integer m = static_cast<unsigned long>(field.p());
  while (m < modulus) {
    st = hensel_step(f, st, m);
    m *= m;
  }
  auto left = lift_rec(st.g, fs, lo, mid, field, modulus);
  auto right = lift_rec(st.h, fs, mid, hi, field, modulus);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

}  // namespace

std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<ModPoly>& factors, std::uint64_t p,
                               const Integer& target, Integer& reached) {
  PrimeField field(p);
  Integer m = static_cast<unsigned long>(p);
  while (m < target) m *= m;
  reached = m;
  return lift_rec(zp_mod(f, m), factors, 0, factors.size(), field, m);
}

}  // namespace quatpoly::detail
