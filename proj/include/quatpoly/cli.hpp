#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "quatpoly/qpoly.hpp"

namespace quatpoly {

/// Parses a polynomial in x over A, e.g. "(1+k)*x^8 + (-2+i-j-2k)*x^7".
///   expr    := ['+'|'-'] term (('+'|'-') term)*
///   term    := factor ('*'? factor)*
///   factor  := primary ('^' nat)?
///   primary := rational | 'i' | 'j' | 'k' | 'x' | '(' expr ')'
/// Whitespace is ignored and like terms are combined. Throws SyntaxError or
/// UnknownSymbol with the offending position.
QPoly parse_poly(std::string_view text, const QuaternionAlgebra& A);

/// A constant expression, e.g. "2 - 3/2*k". Throws SyntaxError if x occurs.
Quaternion parse_quaternion(std::string_view text, const QuaternionAlgebra& A);

/// Canonical form: descending powers, non-scalar coefficients in
/// parentheses, no zero terms. parse_poly inverts it.
std::string to_string(const QPoly& p);

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitSplit = 2,
  kExitSearchExhausted = 3,
  kExitInternal = 4,
};

/// Runs the command line `args` (without the program name), writing the
/// report to `out` and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quatpoly
