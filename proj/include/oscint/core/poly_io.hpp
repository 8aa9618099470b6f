#pragma once

#include <string>
#include <string_view>

#include "oscint/core/big_rational.hpp"
#include "oscint/core/poly.hpp"

namespace oscint {

// Polynomial text grammar, shared by every command-line argument:
//   coefficient list   "c0,c1,c2,..."        (index = power)
//   monomial sum       "1+2x^3-x^5", "0.5*x^2 - 3/4 x"
// Coefficients are integers, decimals (with optional exponent) or
// fractions "a/b". Repeated powers are summed.

Polynomial parse_polynomial(std::string_view text);

/// Exact variant: decimal literals become their exact decimal fraction.
Poly<BigRational> parse_rational_polynomial(std::string_view text);

/// Monomial-sum form using the shortest round-tripping decimal for each
/// coefficient; parse_polynomial(format_polynomial(p)) == p.
std::string format_polynomial(const Polynomial& p);
std::string format_polynomial(const Poly<BigRational>& p);

}  // namespace oscint
