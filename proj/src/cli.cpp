#include "quatpoly/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "quatpoly/certificate.hpp"
#include "quatpoly/errors.hpp"

namespace quatpoly {

using nlohmann::json;

namespace {

json quaternion_json(const Quaternion& q) {
  json a = json::array();
  for (const auto& c : q.coords()) a.push_back(to_fraction_string(c));
  return a;
}

json qpoly_json(const QPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(quaternion_json(c));
  return a;
}

json ratpoly_json(const RatPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_fraction_string(c));
  return a;
}

struct Settings {
  std::string alpha, beta;
  bool json = false;
  bool verify = false;
  std::vector<std::string> certificate_files;
  std::uint64_t seed = 0;
  int max_height = ZeroDivisorOptions{}.max_height;
  std::string poly, other;
};

// A command fills the structured report and the lines of the plain one.
struct Report {
  json data = json::object();
  std::vector<std::string> lines;
  std::optional<bool> verified;
};

// Search settings plus the certificates they point to.
struct SearchSetup {
  CertificateStore store;
  FactorOptions options;

  explicit SearchSetup(const Settings& s) {
    for (const auto& file : s.certificate_files)
      for (const auto& rec : load_certificate_file(file)) store.add(rec);
    options.search.seed = s.seed;
    options.search.max_height = s.max_height;
    options.certificates = &store;
  }
  SearchSetup(const SearchSetup&) = delete;
  SearchSetup& operator=(const SearchSetup&) = delete;
};

void run_factor(const QuaternionAlgebra& A, const Settings& s, Report& r) {
  const QPoly p = parse_poly(s.poly, A);
  const SearchSetup setup(s);
  const Factorization f = factor(p, setup.options);

  r.data["input"] = to_string(p);
  r.data["leading"] = quaternion_json(f.leading);
  r.data["factors"] = json::array();
  r.lines.push_back("input: " + to_string(p));
  r.lines.push_back("leading: " + to_string(f.leading));
  r.lines.push_back("factors:");
  for (const auto& g : f.factors) {
    r.data["factors"].push_back(qpoly_json(g));
    r.lines.push_back("  " + to_string(g));
  }
  if (s.verify) r.verified = expand(A, f) == p;
}

void run_roots(const QuaternionAlgebra& A, const Settings& s, Report& r) {
  const QPoly p = parse_poly(s.poly, A);
  const RootSet roots_found = roots(p);
  r.data["input"] = to_string(p);
  r.data["roots"] = json::array();
  r.lines.push_back("input: " + to_string(p));
  r.lines.push_back(roots_found.representatives.empty() ? "roots: none" : "roots (one per conjugacy class):");
  for (const auto& a : roots_found.representatives) {
    r.data["roots"].push_back(quaternion_json(a));
    r.lines.push_back("  " + to_string(a) + "    charpoly " + rp_to_string(charpoly(a).to_ratpoly()));
  }
  if (s.verify) {
    bool ok = true;
    const auto& reps = roots_found.representatives;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      ok = ok && is_zero(qp_evaluate(p, reps[i]));
      for (std::size_t j = 0; j < i; ++j) ok = ok && !is_conjugate(reps[i], reps[j]);
    }
    r.verified = ok;
  }
}

void run_irreducible(const QuaternionAlgebra& A, const Settings& s, Report& r) {
  const QPoly p = parse_poly(s.poly, A);
  const bool irreducible = is_irreducible(p);
  r.data["input"] = to_string(p);
  r.data["irreducible"] = irreducible;
  r.lines.push_back("input: " + to_string(p));
  r.lines.push_back(std::string("irreducible: ") + (irreducible ? "yes" : "no"));
  if (s.verify) {
    // an irreducible polynomial is its own complete factorization
    const SearchSetup setup(s);
    r.verified = (factor(p, setup.options).factors.size() == 1) == irreducible;
  }
}

void run_beck(const QuaternionAlgebra& A, const Settings& s, Report& r) {
  const QPoly p = parse_poly(s.poly, A);
  const BeckDecomposition b = beck_decompose(p);
  r.data["input"] = to_string(p);
  r.data["leading"] = quaternion_json(b.leading);
  r.data["central_free"] = qpoly_json(b.central_free);
  r.data["central"] = ratpoly_json(b.central);
  r.lines.push_back("input: " + to_string(p));
  r.lines.push_back("leading: " + to_string(b.leading));
  r.lines.push_back("central-free part: " + to_string(b.central_free));
  r.lines.push_back("central part: " + rp_to_string(b.central));
  if (s.verify) r.verified = QPoly::constant(A, b.leading) * b.central_free * QPoly::central(A, b.central) == p;
}

void run_gcrd(const QuaternionAlgebra& A, const Settings& s, Report& r) {
  const QPoly p = parse_poly(s.poly, A), q = parse_poly(s.other, A);
  const GcrdResult g = qp_gcrd_ext(p, q);
  r.data["input"] = json::array({to_string(p), to_string(q)});
  r.data["gcrd"] = qpoly_json(g.gcrd);
  r.lines.push_back("inputs: " + to_string(p) + " ; " + to_string(q));
  r.lines.push_back("gcrd: " + to_string(g.gcrd));
  if (s.verify) {
    r.verified = g.u * p + g.v * q == g.gcrd && qp_right_divmod(p, g.gcrd).second.is_zero() &&
                 qp_right_divmod(q, g.gcrd).second.is_zero();
  }
}

void run_eval(const QuaternionAlgebra& A, const Settings& s, Report& r) {
  const QPoly p = parse_poly(s.poly, A);
  const Quaternion a = parse_quaternion(s.other, A);
  const Quaternion v = qp_evaluate(p, a);
  r.data["input"] = to_string(p);
  r.data["point"] = quaternion_json(a);
  r.data["value"] = quaternion_json(v);
  r.lines.push_back("input: " + to_string(p));
  r.lines.push_back("p(" + to_string(a) + ") = " + to_string(v));
  if (s.verify) r.verified = qp_right_divmod(p, QPoly::linear(A, a)).second == QPoly::constant(A, v);
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const SplitAlgebra*>(&e)) return kExitSplit;
  if (dynamic_cast<const SearchExhausted*>(&e)) return kExitSearchExhausted;
  if (dynamic_cast<const SyntaxError*>(&e) || dynamic_cast<const DegenerateInput*>(&e) ||
      dynamic_cast<const InvalidCertificate*>(&e) || dynamic_cast<const DivisionByZero*>(&e))
    return kExitUsage;
  return kExitInternal;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Factorization and root finding for polynomials over quaternion algebras (alpha, beta / Q)",
               "quatpoly"};
  app.require_subcommand(1);
  Settings s;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--alpha", s.alpha, "alpha, with i^2 = alpha")->required();
    sub->add_option("--beta", s.beta, "beta, with j^2 = beta")->required();
    sub->add_flag("--json", s.json, "emit a JSON report");
    sub->add_flag("--verify", s.verify, "check the result exactly");
  };
  auto search = [&](CLI::App* sub) {
    sub->add_option("--certificate", s.certificate_files, "zero-divisor certificate file (repeatable)")
        ->allow_extra_args(false)
        ->check(CLI::ExistingFile);
    sub->add_option("--seed", s.seed, "seed of the zero-divisor search");
    sub->add_option("--max-height", s.max_height, "coordinate height bound of the zero-divisor search")
        ->check(CLI::NonNegativeNumber);
  };

  CLI::App* factor_cmd = app.add_subcommand("factor", "factor into monic irreducibles");
  CLI::App* roots_cmd = app.add_subcommand("roots", "roots, one per conjugacy class");
  CLI::App* irreducible_cmd = app.add_subcommand("irreducible", "decide irreducibility");
  CLI::App* beck_cmd = app.add_subcommand("beck", "leading * central-free * central decomposition");
  CLI::App* gcrd_cmd = app.add_subcommand("gcrd", "greatest common right divisor of two polynomials");
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate at a quaternion, coefficients on the left");
  for (CLI::App* sub : {factor_cmd, roots_cmd, irreducible_cmd, beck_cmd, gcrd_cmd, eval_cmd}) {
    common(sub);
    sub->add_option("poly", s.poly, "polynomial in x, e.g. \"(1+k)*x^2 - i\"")->required();
  }
  search(factor_cmd);
  search(irreducible_cmd);
  gcrd_cmd->add_option("other", s.other, "second polynomial")->required();
  eval_cmd->add_option("point", s.other, "quaternion, e.g. \"1 + 2j\"")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Report r;
  try {
    const QuaternionAlgebra A(parse_rational(s.alpha), parse_rational(s.beta));
    r.data["algebra"] = {{"alpha", to_fraction_string(A.alpha())}, {"beta", to_fraction_string(A.beta())}};
    r.lines.push_back("algebra: " + A.to_string());
    if (factor_cmd->parsed()) run_factor(A, s, r);
    if (roots_cmd->parsed()) run_roots(A, s, r);
    if (irreducible_cmd->parsed()) run_irreducible(A, s, r);
    if (beck_cmd->parsed()) run_beck(A, s, r);
    if (gcrd_cmd->parsed()) run_gcrd(A, s, r);
    if (eval_cmd->parsed()) run_eval(A, s, r);
  } catch (const SearchExhausted& e) {
    err << "error: " << e.what() << "\n";
    if (!e.central_factor().empty())
      err << "hint: pass --certificate FILE with a zero divisor for " << e.central_factor() << "\n";
    return kExitSearchExhausted;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

  r.data["seed"] = s.seed;
  r.data["elapsed_ms"] = elapsed;
  if (r.verified) r.data["verified"] = *r.verified;
  if (s.json) {
    out << r.data.dump(2) << "\n";
  } else {
    for (const auto& line : r.lines) out << line << "\n";
    if (r.verified) out << "verification: " << (*r.verified ? "PASS" : "FAIL") << "\n";
    out << "elapsed: " << elapsed << " ms\n";
  }
  if (r.verified && !*r.verified) {
    err << "error: verification failed\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace quatpoly
