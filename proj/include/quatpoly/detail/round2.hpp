#pragma once

#include <vector>

#include "quatpoly/numberfield.hpp"

namespace quatpoly::detail {

/// (e, f) of the primes above p in the maximal order of Q[x]/(minpoly),
/// sorted ascending. Computes the p-maximal order by Round 2, then splits
/// O/pO with idempotents. Requires p < 2^62.
std::vector<LocalFactor> prime_decomposition(const RatPoly& minpoly, const Integer& p);

}  // namespace quatpoly::detail
