// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <variant>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "quatpoly/errors.hpp"
#include "quatpoly/qpoly.hpp"
#include "quatpoly/quadform.hpp"

using namespace quatpoly;
using fixtures::qpoly;
using fixtures::quat;

namespace {

// Collects the first failed check of a criterion.
struct Check {
  std::string failure;
  void operator()(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

Quaternion random_unit(const QuaternionAlgebra& A, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-5, 5);
  for (;;) {
    Quaternion g = quat(A, d(rng), d(rng), d(rng), d(rng));
    if (!is_zero(g)) return g;
  }
}

QPoly random_monic(const QuaternionAlgebra& A, std::mt19937_64& rng, int degree, long h = 5) {
  std::uniform_int_distribution<long> d(-h, h);
  std::vector<Quaternion> c;
  for (int i = 0; i < degree; ++i) c.push_back(quat(A, d(rng), d(rng), d(rng), d(rng)));
  c.push_back(Quaternion::scalar(A, 1));
  return QPoly(A, std::move(c));
}

QPoly conjugate_by(const QPoly& p, const Quaternion& u) {
  const Quaternion v = q_inv(u);
  std::vector<Quaternion> c;
  for (const auto& a : p.coeffs()) c.push_back(u * a * v);
  return QPoly(p.algebra(), std::move(c));
}

void example_central_quartic(Check& check) {
  const auto A = fixtures::hamilton();
  const auto start = Clock::now();
  ReductionTrace trace;
  const Factorization f =
      factor_central_irreducible(fixtures::quartic_example(), A, fixtures::quartic_certificate(), {}, &trace);
  check(!trace.q.empty() && trace.q.front() == make_ratpoly({5989, -742, 530}), "first reduction q");
  check(f.factors.size() == 2 && f.factors[0] == fixtures::quartic_factor(A), "monic factor");
  check(f.factors.size() == 2 && f.factors[1] == qp_conj(fixtures::quartic_factor(A)), "conjugate factor");
  check(fixtures::quartic_factor(A) * qp_conj(fixtures::quartic_factor(A)) == QPoly::central(A, fixtures::quartic_example()),
        "product equals the quartic");
  check(seconds_since(start) < 10, "time limit 10 s");
}

void example_degree8(Check& check) {
  const auto A = fixtures::hamilton();
  const QPoly p = fixtures::degree8_example(A);
  CertificateStore store;
  store.add({-1, -1, fixtures::quartic_example(), fixtures::quartic_certificate()});
  FactorOptions options;
  options.certificates = &store;
  const auto start = Clock::now();
  const Factorization f = factor(p, options);
  const std::vector<QPoly> expected{
      QPoly::linear(A, Quaternion::basis(A, 1)),
      QPoly::linear(A, quat(A, 2, 0, 1, 0)),
      qpoly(A, {{-2, 0, 0, -1}, {0, 1, 0, 0}, {1, 0, 0, 0}}),
      fixtures::quartic_factor(A),
      qp_conj(fixtures::quartic_factor(A)),
  };
  check(f.leading == quat(A, 1, 0, 0, 1), "leading coefficient 1 + k");
  check(f.factors == expected, "factor list");
  check(expand(A, f) == p, "reconstruction");
  check(seconds_since(start) < 30, "time limit 30 s");
}

void central_part(Check& check) {
  const auto A = fixtures::hamilton();
  const BeckDecomposition b = beck_decompose(fixtures::degree8_example(A));
  check(b.central == fixtures::quartic_example(), "central part");
  check(b.leading == quat(A, 1, 0, 0, 1), "leading coefficient");
}

void norm_factorization(Check& check) {
  const auto A = fixtures::hamilton();
  // norm of the central-free part; the full norm also carries the central
  // quartic squared and the norm 2 of the leading coefficient
  const QPoly p = fixtures::degree8_example(A);
  const RatFactorization f = rp_factor(qp_norm(beck_decompose(p).central_free));
  std::vector<std::pair<RatPoly, int>> expected{
      {make_ratpoly({1, 0, 1}), 1}, {make_ratpoly({5, -4, 1}), 1}, {make_ratpoly({5, 0, -3, 0, 1}), 1}};
  check(f.factors == expected, "irreducible factors of the central-free norm");
  const RatFactorization full = rp_factor(qp_norm(p));
  expected.push_back({fixtures::quartic_example(), 2});
  check(full.content == 2 && full.factors == expected, "irreducible factors of the full norm");
}

void irreducibility(Check& check) {
  const auto A = fixtures::hamilton();
  auto timed = [&](const QPoly& p) {
    const auto start = Clock::now();
    const bool r = is_irreducible(p);
    check(seconds_since(start) < 1, "time limit 1 s");
    return r;
  };
  check(timed(QPoly::central(A, make_ratpoly({-2, 0, 0, 1}))), "x^3 - 2 irreducible");
  check(!timed(QPoly::central(A, make_ratpoly({1, 0, 1}))), "x^2 + 1 reducible");
  const auto s = subfield_factor(make_ratpoly({1, 0, 1}), A);
  const QPoly xmi = QPoly::linear(A, Quaternion::basis(A, 1)), xpi = QPoly::linear(A, -Quaternion::basis(A, 1));
  check(s && ((s->first == xmi && s->second == xpi) || (s->first == xpi && s->second == xmi)),
        "x^2 + 1 splits as (x - i)(x + i)");
  check(timed(qpoly(A, {{-2, 0, 0, -1}, {0, 1, 0, 0}, {1, 0, 0, 0}})), "x^2 + ix - 2 - k irreducible");
}

void property_suite(Check& check) {
  const auto start = Clock::now();
  for (const auto& A : {fixtures::hamilton(), QuaternionAlgebra(-1, -3)}) {
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<int> count(1, 5), degree(1, 2);
    for (int n = 0; n < 100; ++n) {
      QPoly p = QPoly::constant(A, Quaternion::scalar(A, 1));
      for (int m = count(rng); m > 0; --m) p = p * random_monic(A, rng, degree(rng));
      const Factorization f = factor(p);
      const std::string tag = " (" + A.to_string() + ", case " + std::to_string(n) + ")";
      check(expand(A, f) == p, "reconstruction" + tag);
      for (const auto& g : f.factors) check(is_irreducible(g), "irreducible output" + tag);
      for (int u = 0; u < 5; ++u) {
        const Factorization h = factor(conjugate_by(p, random_unit(A, rng)));
        check(h.factors.size() == f.factors.size(), "length invariant under conjugation" + tag);
      }
    }
  }
  check(seconds_since(start) < 300, "time limit 5 min");
}

void roots_suite(Check& check) {
  const auto A = fixtures::hamilton();
  const auto i = Quaternion::basis(A, 1), j = Quaternion::basis(A, 2);
  const QPoly p = QPoly::linear(A, i) * QPoly::linear(A, j);
  const RootSet r = roots(p);
  check(r.representatives.size() == 1, "one class for (x - i)(x - j)");
  check(r.representatives.size() == 1 && charpoly(r.representatives[0]).to_ratpoly() == make_ratpoly({1, 0, 1}),
        "charpoly x^2 + 1");
  check(r.representatives.size() == 1 && is_zero(qp_evaluate(p, r.representatives[0])), "representative is a root");
  check(roots(QPoly::central(A, make_ratpoly({-2, 0, 1}))).representatives.empty(), "x^2 - 2 has no roots");

  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<int> count(0, 3), degree(1, 2);
  std::uniform_int_distribution<long> d(-5, 5);
  for (int n = 0; n < 100; ++n) {
    const Quaternion a = quat(A, d(rng), d(rng), d(rng), d(rng));
    QPoly q = QPoly::constant(A, Quaternion::scalar(A, 1));
    for (int m = count(rng); m > 0; --m) q = q * random_monic(A, rng, degree(rng));
    q = q * QPoly::linear(A, a);
    const RootSet found = roots(q);
    const auto& reps = found.representatives;
    const std::string tag = " (case " + std::to_string(n) + ")";
    bool planted = false;
    for (std::size_t s = 0; s < reps.size(); ++s) {
      planted = planted || is_conjugate(reps[s], a);
      check(is_zero(qp_evaluate(q, reps[s])), "representatives are roots" + tag);
      for (std::size_t t = 0; t < s; ++t) check(!is_conjugate(reps[s], reps[t]), "pairwise non-conjugate" + tag);
    }
    check(planted, "planted class found" + tag);
  }
}

void local_global(Check& check) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> num(-500, 500), den(1, 60);
  for (int n = 0; n < 500;) {
    const long an = num(rng), bn = num(rng);
    if (an == 0 || bn == 0) continue;
    ++n;
    check(ramified_places(make_rational(an, den(rng)), make_rational(bn, den(rng))).size() % 2 == 0,
          "reciprocity");
  }
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L})
    for (long a = -20; a <= 20; ++a)
      for (long b = -20; b <= 20; ++b) {
        if (a == 0 || b == 0) continue;
        check(hilbert_symbol(a, b, Place::finite(p)) == oracles::hilbert_oracle(a, b, p),
              "Hilbert symbol (" + std::to_string(a) + ", " + std::to_string(b) + ")_" + std::to_string(p));
      }
  std::uniform_int_distribution<long> c(-300, 300);
  int isotropic = 0;
  while (isotropic < 200) {
    const DiagonalForm f{Rational(c(rng)), Rational(c(rng)), Rational(c(rng))};
    if (is_zero(f[0]) || is_zero(f[1]) || is_zero(f[2])) continue;
    const IsotropyResult r = ternary_isotropic(f);
    if (const auto* v = std::get_if<std::vector<Integer>>(&r)) {
      check(is_zero(oracles::eval(f, *v)) && oracles::primitive_nonzero(*v), "ternary zero");
      ++isotropic;
    } else {
      // the form is isotropic iff (-f0 f2, -f1 f2) splits everywhere
      check(hilbert_symbol(-f[0] * f[2], -f[1] * f[2], std::get<Anisotropic>(r).place) == -1, "local obstruction");
    }
  }
}

// Random monic irreducible quadratic x^2 + bx + c.
RatPoly random_irreducible_quadratic(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-30, 30);
  for (;;) {
    RatPoly p = make_ratpoly({d(rng), d(rng), 1});
    if (rp_is_irreducible(p)) return p;
  }
}

void splitting_cross_check(Check& check) {
  const auto A = fixtures::hamilton();
  std::mt19937_64 rng(50);
  int splitting = 0;
  for (int n = 0; n < 50; ++n) {
    const RatPoly p = random_irreducible_quadratic(rng);
    const bool splits = nf_splits_quaternion(-1, -1, NumberField(p));
    splitting += splits;
    check(splits == subfield_factor(p, A).has_value(), "agreement on " + rp_to_string(p));
  }
  check(splitting > 0 && splitting < 50, "both outcomes occur");
}

void zero_divisor_search(Check& check) {
  try {
    const ZeroDivisorCertificate z =
        find_zero_divisor(-1, -1, NumberField(fixtures::quartic_example()), std::nullopt);
    check(certificate_norm(-1, -1, fixtures::quartic_example(), z).is_zero(), "quartic search result is a zero divisor");
  } catch (const SearchExhausted&) {
    // permitted at the default height
  }
  ZeroDivisorOptions no_search;
  no_search.max_height = 0;
  std::mt19937_64 rng(10);
  int found = 0;
  while (found < 20) {
    const RatPoly p = random_irreducible_quadratic(rng);
    const NumberField L(p);
    if (!nf_splits_quaternion(-1, -1, L)) continue;
    ++found;
    try {
      const ZeroDivisorCertificate z = find_zero_divisor(-1, -1, L, std::nullopt, no_search);
      check(certificate_norm(-1, -1, p, z).is_zero(), "zero divisor over " + rp_to_string(p));
    } catch (const SearchExhausted&) {
      check(false, "subfield layer failed over " + rp_to_string(p));
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"central quartic with a known zero divisor", example_central_quartic},
      {"degree 8 factorization", example_degree8},
      {"central part recovery", central_part},
      {"norm factorization", norm_factorization},
      {"irreducibility suite", irreducibility},
      {"randomized factorization properties", property_suite},
      {"roots suite", roots_suite},
      {"local-global suite", local_global},
      {"splitting cross-check", splitting_cross_check},
      {"zero-divisor search", zero_divisor_search},
  };
  int failed = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    Check check;
    const auto start = Clock::now();
    try {
      criteria[n].second(check);
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
    const long ms = std::lround(seconds_since(start) * 1000);
    const bool ok = check.failure.empty();
    failed += !ok;
    std::cout << "criterion " << n + 1 << ": " << (ok ? "PASS" : "FAIL") << "  " << criteria[n].first << "  ("
              << ms << " ms)";
    if (!ok) std::cout << "  first failure: " << check.failure;
    std::cout << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
  return failed == 0 ? 0 : 1;
}
