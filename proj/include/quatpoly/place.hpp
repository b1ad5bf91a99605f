#pragma once

#include <string>

#include "quatpoly/rational.hpp"

namespace quatpoly {

/// A place of Q: a rational prime, or the infinite (real) place.
class Place {
 public:
  static Place infinite() { return Place(Integer(0)); }
  static Place finite(const Integer& p) { return Place(p); }

  bool is_infinite() const { return p_ == 0; }
  /// The prime; zero for the infinite place.
  const Integer& prime() const { return p_; }
  std::string to_string() const { return is_infinite() ? std::string("inf") : p_.get_str(); }

  friend bool operator==(const Place& a, const Place& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Place& a, const Place& b) { return !(a == b); }
  /// Finite primes ascending, the infinite place last.
  friend bool operator<(const Place& a, const Place& b) {
    if (a.is_infinite() != b.is_infinite()) return b.is_infinite();
    return a.p_ < b.p_;
  }

 private:
  explicit Place(const Integer& p) : p_(p) {}
  Integer p_;
};

}  // namespace quatpoly
