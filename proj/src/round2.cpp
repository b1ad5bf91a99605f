// p-maximal order by Round 2 and the splitting of p in it.
//
// Orders are Z-lattices given by a basis in the power basis of an integral
// generator alpha = c*theta. Every lattice that occurs contains p*O, so it is
// the lift of an F_p-subspace of O/pO and its triangular basis comes straight
// from a reduced echelon form.

#include <algorithm>

#include "quatpoly/detail/modular.hpp"
#include "quatpoly/detail/round2.hpp"
#include "quatpoly/errors.hpp"

namespace quatpoly::detail {

namespace {

using Vec = std::vector<std::uint64_t>;
using RatMatrix = std::vector<std::vector<Rational>>;
using IntVec = std::vector<Integer>;
// table[i][j] = coordinates of w_i * w_j
using IntTable = std::vector<std::vector<IntVec>>;

RatMatrix rat_inverse(RatMatrix a) {
  const std::size_t n = a.size();
  RatMatrix inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && is_zero(a[piv][c])) ++piv;
    if (piv == n) throw InternalInvariantViolation("order basis is singular");
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    Rational s = 1 / a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] *= s;
      inv[c][j] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || is_zero(a[r][c])) continue;
      Rational f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

struct Order {
  RatMatrix basis;  // rows in the power basis of alpha
  IntTable table;
  IntVec one;
};

Order make_order(RatMatrix basis, const RatPoly& f) {
  const std::size_t n = basis.size();
  RatMatrix inv = rat_inverse(basis);
  auto to_coords = [&](const RatPoly& v) {
    IntVec c(n);
    for (std::size_t k = 0; k < n; ++k) {
      Rational acc = 0;
      for (std::size_t i = 0; i < v.size(); ++i) acc += v[i] * inv[i][k];
      if (acc.get_den() != 1) throw InternalInvariantViolation("lattice is not closed under multiplication");
      c[k] = acc.get_num();
    }
    return c;
  };
  std::vector<RatPoly> elems;
  for (const auto& row : basis) elems.emplace_back(row);
  Order o;
  o.table.assign(n, std::vector<IntVec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      o.table[i][j] = to_coords((elems[i] * elems[j]) % f);
      o.table[j][i] = o.table[i][j];
    }
  o.one = to_coords(RatPoly::constant(1));
  o.basis = std::move(basis);
  return o;
}

// The algebra O/pO.
class ResidueAlgebra {
 public:
  ResidueAlgebra(const PrimeField& F, const Order& o) : F_(F), n_(o.basis.size()) {
    table_.assign(n_, std::vector<Vec>(n_, Vec(n_)));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k) table_[i][j][k] = F.reduce(o.table[i][j][k]);
    one_.resize(n_);
    for (std::size_t k = 0; k < n_; ++k) one_[k] = F.reduce(o.one[k]);
  }

  std::size_t dim() const { return n_; }
  const Vec& one() const { return one_; }

  Vec mul(const Vec& x, const Vec& y) const {
    Vec z(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (y[j] == 0) continue;
        const std::uint64_t s = F_.mul(x[i], y[j]);
        for (std::size_t k = 0; k < n_; ++k) z[k] = F_.add(z[k], F_.mul(s, table_[i][j][k]));
      }
    }
    return z;
  }

  Vec pow(Vec x, std::uint64_t e) const {
    Vec r = one_;
    while (e > 0) {
      if (e & 1U) r = mul(r, x);
      e >>= 1U;
      if (e > 0) x = mul(x, x);
    }
    return r;
  }

  /// x -> x^(p^j) with p^j >= dim: kills exactly the nilpotents.
  Vec frobenius_power(Vec x) const {
    for (std::uint64_t q = 1; q < n_; q *= F_.p()) x = pow(std::move(x), F_.p());
    return x;
  }

  std::vector<Vec> radical() const {
    ModMatrix m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
      Vec e(n_, 0);
      e[i] = 1;
      Vec y = frobenius_power(e);
      for (std::size_t k = 0; k < n_; ++k) m.at(k, i) = y[k];
    }
    return mm_kernel(F_, m);
  }

  /// dim_Fp of x*A.
  std::size_t rank_of_multiple(const Vec& x) const {
    ModMatrix m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
      Vec e(n_, 0);
      e[i] = 1;
      Vec y = mul(x, e);
      for (std::size_t k = 0; k < n_; ++k) m.at(k, i) = y[k];
    }
    return mm_rank(F_, m);
  }

 private:
  const PrimeField& F_;
  std::size_t n_;
  std::vector<std::vector<Vec>> table_;
  Vec one_;
};

// Triangular Z-basis (row c has its first nonzero entry in column c) of
// lift(V) + p Z^n for the subspace V spanned by `gens`.
std::vector<IntVec> lattice_basis(const PrimeField& F, const std::vector<Vec>& gens, std::size_t n) {
  ModMatrix m(gens.size(), n);
  for (std::size_t r = 0; r < gens.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = gens[r][c];
  auto pivots = gens.empty() ? std::vector<std::size_t>{} : mm_rref(F, m);
  std::vector<IntVec> basis(n, IntVec(n, Integer(0)));
  std::vector<bool> filled(n, false);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) basis[pivots[r]][c] = Integer(static_cast<unsigned long>(m.at(r, c)));
    filled[pivots[r]] = true;
  }
  for (std::size_t c = 0; c < n; ++c)
    if (!filled[c]) basis[c][c] = Integer(static_cast<unsigned long>(F.p()));
  return basis;
}

// Coordinates of z in a triangular basis; throws when z is outside it.
IntVec solve_triangular(const std::vector<IntVec>& basis, const IntVec& z) {
  const std::size_t n = z.size();
  IntVec c(n);
  for (std::size_t col = 0; col < n; ++col) {
    Integer rest = z[col];
    for (std::size_t l = 0; l < col; ++l) rest -= c[l] * basis[l][col];
    if (mpz_divisible_p(rest.get_mpz_t(), basis[col][col].get_mpz_t()) == 0)
      throw InternalInvariantViolation("radical is not an ideal");
    mpz_divexact(c[col].get_mpz_t(), rest.get_mpz_t(), basis[col][col].get_mpz_t());
  }
  return c;
}

IntVec int_mul(const IntTable& t, const IntVec& x, const IntVec& y) {
  const std::size_t n = x.size();
  IntVec z(n, Integer(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      Integer s = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) z[k] += s * t[i][j][k];
    }
  }
  return z;
}

// One Round 2 step: the multiplier ring of the p-radical, or nullopt when O
// is already p-maximal.
std::optional<RatMatrix> enlarge(const PrimeField& F, const Order& o) {
  const std::size_t n = o.basis.size();
  ResidueAlgebra A(F, o);
  std::vector<IntVec> rad = lattice_basis(F, A.radical(), n);

  // U/pO = kernel of O/pO -> End(I/pI)
  ModMatrix phi(n * n, n);
  for (std::size_t k = 0; k < n; ++k) {
    IntVec w(n, Integer(0));
    w[k] = 1;
    for (std::size_t l = 0; l < n; ++l) {
      IntVec c = solve_triangular(rad, int_mul(o.table, w, rad[l]));
      for (std::size_t col = 0; col < n; ++col) phi.at(l * n + col, k) = F.reduce(c[col]);
    }
  }
  auto kernel = mm_kernel(F, phi);
  if (kernel.empty()) return std::nullopt;

  std::vector<IntVec> u = lattice_basis(F, kernel, n);
  const Rational inv_p = make_rational(1, Integer(static_cast<unsigned long>(F.p())));
  RatMatrix next(n, std::vector<Rational>(n, 0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Rational acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += u[r][k] * o.basis[k][c];
      next[r][c] = acc * inv_p;
    }
  return next;
}

// ---- splitting the semisimple quotient ----

// (O/pO)/R with the complement of R's pivot columns as coordinates.
class SemisimpleQuotient {
 public:
  SemisimpleQuotient(const PrimeField& F, const ResidueAlgebra& A, std::vector<Vec> rad)
      : F_(F), A_(A) {
    const std::size_t n = A.dim();
    ModMatrix m(rad.size(), n);
    for (std::size_t r = 0; r < rad.size(); ++r)
      for (std::size_t c = 0; c < n; ++c) m.at(r, c) = rad[r][c];
    auto pivots = rad.empty() ? std::vector<std::size_t>{} : mm_rref(F, m);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      is_pivot[pivots[r]] = true;
      Vec row(n);
      for (std::size_t c = 0; c < n; ++c) row[c] = m.at(r, c);
      rows_.emplace_back(pivots[r], std::move(row));
    }
    for (std::size_t c = 0; c < n; ++c)
      if (!is_pivot[c]) free_.push_back(c);
  }

  std::size_t dim() const { return free_.size(); }

  Vec project(Vec x) const {
    for (const auto& [pivot, row] : rows_) {
      const std::uint64_t s = x[pivot];
      if (s == 0) continue;
      for (std::size_t c = 0; c < x.size(); ++c) x[c] = F_.sub(x[c], F_.mul(s, row[c]));
    }
    Vec y(free_.size());
    for (std::size_t i = 0; i < free_.size(); ++i) y[i] = x[free_[i]];
    return y;
  }

  Vec embed(const Vec& y) const {
    Vec x(A_.dim(), 0);
    for (std::size_t i = 0; i < free_.size(); ++i) x[free_[i]] = y[i];
    return x;
  }

  Vec mul(const Vec& a, const Vec& b) const { return project(A_.mul(embed(a), embed(b))); }
  Vec one() const { return project(A_.one()); }

  Vec unit(std::size_t i) const {
    Vec e(dim(), 0);
    e[i] = 1;
    return e;
  }

 private:
  const PrimeField& F_;
  const ResidueAlgebra& A_;
  std::vector<std::pair<std::size_t, Vec>> rows_;
  std::vector<std::size_t> free_;
};

std::size_t span_rank(const PrimeField& F, const std::vector<Vec>& vs) {
  if (vs.empty()) return 0;
  ModMatrix m(vs.size(), vs[0].size());
  for (std::size_t r = 0; r < vs.size(); ++r)
    for (std::size_t c = 0; c < vs[r].size(); ++c) m.at(r, c) = vs[r][c];
  return mm_rank(F, m);
}

// Monic minimal polynomial of x in the algebra with unit `unit`.
ModPoly minimal_polynomial(const PrimeField& F, const SemisimpleQuotient& B, const Vec& unit,
                           const Vec& x) {
  std::vector<Vec> powers{unit};
  for (;;) {
    powers.push_back(B.mul(powers.back(), x));
    ModMatrix m(B.dim(), powers.size());
    for (std::size_t c = 0; c < powers.size(); ++c)
      for (std::size_t r = 0; r < B.dim(); ++r) m.at(r, c) = powers[c][r];
    auto kernel = mm_kernel(F, m);
    if (kernel.empty()) continue;
    ModPoly mu = kernel[0];
    mp_trim(mu);
    return mp_monic(F, mu);
  }
}

// Primitive idempotents of a commutative semisimple F_p-algebra.
std::vector<Vec> primitive_idempotents(const PrimeField& F, const SemisimpleQuotient& B) {
  const std::size_t m = B.dim();
  // E = { x : x^p = x } is the F_p-span of the primitive idempotents
  ModMatrix frob(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    Vec e = B.unit(i);
    Vec y = e;
    {
      Vec r = B.one(), base = e;
      std::uint64_t k = F.p();
      while (k > 0) {
        if (k & 1U) r = B.mul(r, base);
        k >>= 1U;
        if (k > 0) base = B.mul(base, base);
      }
      y = r;
    }
    for (std::size_t k = 0; k < m; ++k) frob.at(k, i) = F.sub(y[k], e[k]);
  }
  std::vector<Vec> fixed = mm_kernel(F, frob);

  std::vector<Vec> pending{B.one()}, done;
  while (!pending.empty()) {
    Vec eps = pending.back();
    pending.pop_back();
    std::vector<Vec> local;
    for (const auto& b : fixed) local.push_back(B.mul(eps, b));
    if (span_rank(F, local) <= 1) {
      done.push_back(eps);
      continue;
    }
    Vec x;
    for (const auto& v : local)
      if (span_rank(F, {eps, v}) == 2) {
        x = v;
        break;
      }
    ModPoly mu = minimal_polynomial(F, B, eps, x);
    auto roots = mp_roots(F, mu);
    if (roots.size() < 2 || static_cast<int>(roots.size()) != mp_degree(mu))
      throw InternalInvariantViolation("separating element has a non-split minimal polynomial");
    for (std::size_t l = 0; l < roots.size(); ++l) {
      Vec piece = eps;
      for (std::size_t s = 0; s < roots.size(); ++s) {
        if (s == l) continue;
        const std::uint64_t scale = F.inv(F.sub(roots[l], roots[s]));
        Vec factor(m);
        for (std::size_t k = 0; k < m; ++k)
          factor[k] = F.mul(F.sub(x[k], F.mul(roots[s], eps[k])), scale);
        piece = B.mul(piece, factor);
      }
      pending.push_back(std::move(piece));
    }
  }
  return done;
}

}  // namespace

std::vector<LocalFactor> prime_decomposition(const RatPoly& minpoly, const Integer& p) {
  if (p < 2 || mpz_sizeinbase(p.get_mpz_t(), 2) > 62)
    throw PreconditionViolation("prime decomposition needs a prime below 2^62");
  const std::size_t n = static_cast<std::size_t>(minpoly.degree());
  const PrimeField F(p.get_ui());

  // integral generator alpha = c*theta with minimal polynomial f
  const Integer c = common_denominator(minpoly.coeffs());
  std::vector<Rational> fc(n + 1);
  Integer cp = 1;
  for (std::size_t i = n + 1; i-- > 0;) {
    fc[i] = minpoly[i] * cp;
    cp *= c;
  }
  const RatPoly f(fc);

  RatMatrix basis(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) basis[i][i] = 1;
  Order order = make_order(basis, f);
  while (auto next = enlarge(F, order)) order = make_order(std::move(*next), f);

  ResidueAlgebra A(F, order);
  SemisimpleQuotient B(F, A, A.radical());
  std::vector<LocalFactor> out;
  std::size_t total = 0;
  for (const auto& eps : primitive_idempotents(F, B)) {
    std::size_t fdeg = 0;
    {
      std::vector<Vec> image;
      for (std::size_t i = 0; i < B.dim(); ++i) image.push_back(B.mul(eps, B.unit(i)));
      fdeg = span_rank(F, image);
    }
    // lift through the nilpotent radical: Frobenius powers converge
    Vec lifted = A.frobenius_power(B.embed(eps));
    if (A.mul(lifted, lifted) != lifted) throw InternalInvariantViolation("idempotent lift failed");
    const std::size_t ef = A.rank_of_multiple(lifted);
    if (fdeg == 0 || ef % fdeg != 0) throw InternalInvariantViolation("inconsistent local degrees");
    out.push_back({static_cast<int>(ef / fdeg), static_cast<int>(fdeg)});
    total += ef;
  }
  if (total != n) throw InternalInvariantViolation("local degrees do not sum to the field degree");
  std::sort(out.begin(), out.end(), [](const LocalFactor& a, const LocalFactor& b) {
    return a.e != b.e ? a.e < b.e : a.f < b.f;
  });
  return out;
}

}  // namespace quatpoly::detail
