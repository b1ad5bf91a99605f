// Recursive-descent parser and canonical printer for quaternionic
// polynomials.

#include <cctype>

#include "quatpoly/cli.hpp"
#include "quatpoly/errors.hpp"

namespace quatpoly {

namespace {

constexpr unsigned long kMaxExponent = 4096;

class Parser {
 public:
  Parser(std::string_view text, const QuaternionAlgebra& A) : s_(text), A_(A) {}

  QPoly parse() {
    QPoly p = expr();
    skip_space();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

  bool saw_x() const { return saw_x_; }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  QPoly expr() {
    QPoly acc(A_);
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = s_[pos_++] == '-';
    for (;;) {
      QPoly t = term();
      acc = negate ? acc - t : acc + t;
      const char c = peek();
      if (c != '+' && c != '-') return acc;
      negate = c == '-';
      ++pos_;
    }
  }

  QPoly term() {
    QPoly acc = factor();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor(c)) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  QPoly factor() {
    QPoly base = primary();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an exponent");
    const std::string digits(s_.substr(start, pos_ - start));
    if (digits.size() > 5 || std::stoul(digits) > kMaxExponent) {
      pos_ = start;
      fail("exponent larger than " + std::to_string(kMaxExponent));
    }
    QPoly result = QPoly::constant(A_, Quaternion::scalar(A_, 1));
    for (unsigned long e = std::stoul(digits); e > 0; --e) result = result * base;
    return result;
  }

  QPoly primary() {
    const char c = peek();
    if (c == '\0') fail("unexpected end of input");
    if (c == '(') {
      ++pos_;
      QPoly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return QPoly::constant(A_, Quaternion::scalar(A_, number()));
    if (std::isalpha(static_cast<unsigned char>(c))) {
      // every letter is a symbol of its own, so "ix" reads as i*x
      switch (s_[pos_++]) {
        case 'x':
          saw_x_ = true;
          return QPoly::x(A_);
        case 'i':
          return QPoly::constant(A_, Quaternion::basis(A_, 1));
        case 'j':
          return QPoly::constant(A_, Quaternion::basis(A_, 2));
        case 'k':
          return QPoly::constant(A_, Quaternion::basis(A_, 3));
        default:
          throw UnknownSymbol("unknown symbol '" + std::string(1, c) + "'", pos_ - 1);
      }
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Rational number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      const std::size_t from = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Integer(std::string(s_.substr(from, pos_ - from)));
    };
    Integer num = digits();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected a denominator");
      Integer den = digits();
      if (den == 0) {
        pos_ = start;
        fail("zero denominator");
      }
      return make_rational(num, den);
    }
    return Rational(num);
  }

  std::string_view s_;
  const QuaternionAlgebra& A_;
  std::size_t pos_ = 0;
  bool saw_x_ = false;
};

std::string power_of_x(int n) {
  if (n == 0) return "";
  if (n == 1) return "x";
  return "x^" + std::to_string(n);
}

}  // namespace

QPoly parse_poly(std::string_view text, const QuaternionAlgebra& A) { return Parser(text, A).parse(); }

Quaternion parse_quaternion(std::string_view text, const QuaternionAlgebra& A) {
  Parser parser(text, A);
  QPoly p = parser.parse();
  if (p.degree() > 0 || parser.saw_x()) throw SyntaxError("expected a quaternion, found a polynomial in x", 0);
  return p.coeff(0);
}

std::string to_string(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int n = p.degree(); n >= 0; --n) {
    const Quaternion& c = p[static_cast<std::size_t>(n)];
    if (is_zero(c)) continue;
    const std::string xn = power_of_x(n);
    if (c.is_central()) {
      const bool negative = sgn(c[0]) < 0;
      const Rational mag = abs(c[0]);
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      if (n == 0) {
        out += to_string(mag);
      } else if (mag == 1) {
        out += xn;
      } else {
        out += to_string(mag) + "*" + xn;
      }
    } else {
      if (!out.empty()) out += " + ";
      out += "(" + to_string(c) + ")";
      if (n > 0) out += "*" + xn;
    }
  }
  return out;
}

}  // namespace quatpoly
