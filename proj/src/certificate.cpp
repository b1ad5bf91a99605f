#include "quatpoly/certificate.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "quatpoly/errors.hpp"

namespace quatpoly {

using nlohmann::json;

namespace {

json poly_to_json(const RatPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_fraction_string(c));
  return a;
}

Rational rational_from_json(const json& v, const std::string& field) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(Integer(v.dump()));
  } catch (const Error&) {
  }
  throw InvalidCertificate("field '" + field + "' holds " + v.dump() + ", expected a rational");
}

RatPoly poly_from_json(const json& obj, const std::string& field) {
  if (!obj.contains(field)) throw InvalidCertificate("certificate lacks field '" + field + "'");
  const json& a = obj.at(field);
  if (!a.is_array()) throw InvalidCertificate("field '" + field + "' must be a coefficient array");
  std::vector<Rational> c;
  for (const auto& v : a) c.push_back(rational_from_json(v, field));
  return RatPoly(std::move(c));
}

CertificateRecord record_from_json(const json& obj) {
  if (!obj.is_object()) throw InvalidCertificate("certificate must be a JSON object");
  for (const char* f : {"alpha", "beta"})
    if (!obj.contains(f)) throw InvalidCertificate(std::string("certificate lacks field '") + f + "'");
  CertificateRecord r;
  r.alpha = rational_from_json(obj.at("alpha"), "alpha");
  r.beta = rational_from_json(obj.at("beta"), "beta");
  r.minpoly = poly_from_json(obj, "minpoly");
  for (int i = 0; i < 4; ++i) r.certificate.q[static_cast<std::size_t>(i)] = poly_from_json(obj, "q" + std::to_string(i));
  return r;
}

}  // namespace

std::string certificate_to_json(const CertificateRecord& record) {
  json obj;
  obj["alpha"] = to_fraction_string(record.alpha);
  obj["beta"] = to_fraction_string(record.beta);
  obj["minpoly"] = poly_to_json(record.minpoly);
  for (std::size_t i = 0; i < 4; ++i) obj["q" + std::to_string(i)] = poly_to_json(record.certificate.q[i]);
  return obj.dump(2);
}

std::vector<CertificateRecord> certificates_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidCertificate(std::string("certificate is not valid JSON: ") + e.what());
  }
  std::vector<CertificateRecord> out;
  if (doc.is_array()) {
    for (const auto& obj : doc) out.push_back(record_from_json(obj));
  } else {
    out.push_back(record_from_json(doc));
  }
  return out;
}

std::vector<CertificateRecord> load_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidCertificate("cannot read certificate file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return certificates_from_json(buffer.str());
}

void CertificateStore::add(const CertificateRecord& record) { records_.push_back(record); }

std::optional<ZeroDivisorCertificate> CertificateStore::find(const Rational& alpha, const Rational& beta,
                                                             const RatPoly& factor) const {
  for (const auto& r : records_)
    if (r.alpha == alpha && r.beta == beta && r.minpoly == factor) return r.certificate;
  return std::nullopt;
}

}  // namespace quatpoly
