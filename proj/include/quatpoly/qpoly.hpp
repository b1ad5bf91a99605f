#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "quatpoly/certificate.hpp"
#include "quatpoly/quadform.hpp"
#include "quatpoly/quaternion.hpp"
#include "quatpoly/ratpoly.hpp"

namespace quatpoly {

/// a_0 + a_1 x + ... + a_n x^n over a quaternion algebra, the indeterminate
/// commuting with the coefficients. Lowest degree first, no trailing zero.
class QPoly {
 public:
  explicit QPoly(const QuaternionAlgebra& A) : algebra_(A) {}
  QPoly(const QuaternionAlgebra& A, std::vector<Quaternion> coeffs);

  static QPoly constant(const QuaternionAlgebra& A, const Quaternion& c);
  static QPoly x(const QuaternionAlgebra& A);
  /// x - a.
  static QPoly linear(const QuaternionAlgebra& A, const Quaternion& a);
  static QPoly central(const QuaternionAlgebra& A, const RatPoly& p);
  /// p0 + p1 i + p2 j + p3 k.
  static QPoly from_coords(const QuaternionAlgebra& A, const std::array<RatPoly, 4>& p);

  const QuaternionAlgebra& algebra() const { return algebra_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const Quaternion& operator[](std::size_t i) const { return c_[i]; }
  Quaternion coeff(std::size_t i) const;
  const std::vector<Quaternion>& coeffs() const { return c_; }
  const Quaternion& leading() const;
  bool is_monic() const;
  bool is_central() const;

  /// Coordinate polynomial for basis element 0..3.
  RatPoly coord(int index) const;
  std::array<RatPoly, 4> coords() const;

  QPoly operator-() const;
  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const Quaternion& c, const QPoly& p);
  friend QPoly operator*(const QPoly& p, const Quaternion& c);
  friend bool operator==(const QPoly& a, const QPoly& b);
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

 private:
  void trim();
  static const QuaternionAlgebra& common_algebra(const QPoly& a, const QPoly& b);

  QuaternionAlgebra algebra_;
  std::vector<Quaternion> c_;
};

/// Coefficientwise conjugate; conj(pq) = conj(q) conj(p).
QPoly qp_conj(const QPoly& p);

/// p conj(p), which is central.
RatPoly qp_norm(const QPoly& p);

/// lc(p)^{-1} p; the zero polynomial stays zero.
QPoly qp_monic(const QPoly& p);

/// (quotient, remainder) with p = quotient d + remainder and
/// deg remainder < deg d. Throws DivisionByZero for d = 0.
std::pair<QPoly, QPoly> qp_right_divmod(const QPoly& p, const QPoly& d);

/// Quotient of an exact right division; InternalInvariantViolation
/// otherwise.
QPoly qp_right_exact_quotient(const QPoly& p, const QPoly& d);

/// Monic greatest common right divisor g = u p + v q.
struct GcrdResult {
  QPoly gcrd, u, v;
};
GcrdResult qp_gcrd_ext(const QPoly& p, const QPoly& q);
QPoly qp_gcrd(const QPoly& p, const QPoly& q);

/// Monic least common left multiple. Throws DegenerateInput for a zero
/// argument.
QPoly qp_lclm(const QPoly& p, const QPoly& q);

/// sum c_i a^i, which is the remainder of p on right division by x - a.
Quaternion qp_evaluate(const QPoly& p, const Quaternion& a);

/// p = leading * central_free * central, with central the monic gcd of the
/// coordinates of leading^{-1} p.
struct BeckDecomposition {
  Quaternion leading;
  QPoly central_free;
  RatPoly central;
};
BeckDecomposition beck_decompose(const QPoly& p);

/// Throws DegenerateInput for a constant.
bool is_irreducible(const QPoly& p);

/// Factorization q conj(q) = p with q over an embedded quadratic subfield of
/// Q[x]/(p), or nullopt. Requires p monic irreducible of degree >= 2.
std::optional<std::pair<QPoly, QPoly>> subfield_factor(const RatPoly& p, const QuaternionAlgebra& A);

/// p = leading * factors[0] * factors[1] * ...
struct Factorization {
  Quaternion leading;
  std::vector<QPoly> factors;
};

/// Reconstructs leading * (product of factors).
QPoly expand(const QuaternionAlgebra& A, const Factorization& f);

struct FactorOptions {
  ZeroDivisorOptions search;
  const CertificateStore* certificates = nullptr;
};

/// Values of the extraneous factor q before each pass of the
/// degree-reduction loop, ending with the final constant.
struct ReductionTrace {
  std::vector<RatPoly> q;
};

/// Factors a monic polynomial irreducible over Q. Returns [p] when p stays
/// irreducible over A, otherwise two monic factors q, conj(q) with product
/// p. Propagates SearchExhausted and InvalidCertificate.
Factorization factor_central_irreducible(const RatPoly& p, const QuaternionAlgebra& A,
                                         const std::optional<ZeroDivisorCertificate>& certificate,
                                         const ZeroDivisorOptions& options = {}, ReductionTrace* trace = nullptr);

/// (q1, p1) with q1 p1 = p q and norms N p1 = N p, N q1 = N q. Requires
/// coprime norms.
std::pair<QPoly, QPoly> swap_factors(const QPoly& p, const QPoly& q);

/// Complete factorization into monic irreducibles. Throws DegenerateInput
/// for zero and SplitAlgebra over a split algebra.
Factorization factor(const QPoly& p, const FactorOptions& options = {});

/// One root from each conjugacy class of roots. Throws DegenerateInput for
/// zero.
struct RootSet {
  std::vector<Quaternion> representatives;
};
RootSet roots(const QPoly& p);

}  // namespace quatpoly
