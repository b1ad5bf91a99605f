#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quatpoly/quadform.hpp"
#include "quatpoly/ratpoly.hpp"

namespace quatpoly {

/// A zero divisor of (alpha, beta / Q) tensor Q[x]/(minpoly), as stored on
/// disk. JSON layout:
///   {"alpha": "-1/1", "beta": "-1/1", "minpoly": [...],
///    "q0": [...], "q1": [...], "q2": [...], "q3": [...]}
/// Polynomials are coefficient arrays, lowest degree first, each entry a
/// "num/den" string. Plain integers and integer strings are also accepted
/// on input.
struct CertificateRecord {
  Rational alpha, beta;
  RatPoly minpoly;
  ZeroDivisorCertificate certificate;
  friend bool operator==(const CertificateRecord&, const CertificateRecord&) = default;
};

std::string certificate_to_json(const CertificateRecord& record);

/// Accepts one record or an array of records. Throws InvalidCertificate on
/// malformed input; the norm condition is not checked here.
std::vector<CertificateRecord> certificates_from_json(const std::string& text);

/// Reads a certificate file; throws InvalidCertificate if unreadable.
std::vector<CertificateRecord> load_certificate_file(const std::string& path);

/// Certificates keyed by (alpha, beta, central irreducible factor).
class CertificateStore {
 public:
  void add(const CertificateRecord& record);
  std::optional<ZeroDivisorCertificate> find(const Rational& alpha, const Rational& beta,
                                             const RatPoly& factor) const;
  std::size_t size() const { return records_.size(); }

 private:
  std::vector<CertificateRecord> records_;
};

}  // namespace quatpoly
