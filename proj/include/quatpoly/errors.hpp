#pragma once

#include <stdexcept>
#include <string>

namespace quatpoly {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Zero polynomial, constant where a nonconstant one is needed, both
/// gcd arguments zero, and similar degenerate inputs.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class NotSquarefree : public Error {
 public:
  using Error::Error;
};

/// The quaternion algebra (alpha, beta / Q) is isomorphic to M_2(Q).
class SplitAlgebra : public Error {
 public:
  using Error::Error;
};

/// Quaternions (or polynomials) from two different algebras were combined.
class AlgebraMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// A supplied zero-divisor certificate does not have vanishing norm.
class InvalidCertificate : public Error {
 public:
  using Error::Error;
};

/// The bounded zero-divisor search gave up. `central_factor` names the
/// irreducible central polynomial that needs an external certificate.
class SearchExhausted : public Error {
 public:
  SearchExhausted(const std::string& what, std::string central_factor = {})
      : Error(what), central_factor_(std::move(central_factor)) {}
  const std::string& central_factor() const { return central_factor_; }

 private:
  std::string central_factor_;
};

class EmbeddingObstructed : public Error {
 public:
  using Error::Error;
};

/// Raised when a property guaranteed by the theory fails at run time.
class InternalInvariantViolation : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownSymbol : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

}  // namespace quatpoly
