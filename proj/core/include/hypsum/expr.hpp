#pragma once

#include <string>
#include <vector>

#include "hypsum/rational_function.hpp"

namespace hypsum {

// Parse an arithmetic expression ("-(b-1)*k/((1+a+2*n-b+k)*(a+2*n))",
// "a/2+1", "3/4") over integers, named symbols and + - * / ^ ( ).
RationalFunction parse_rational_function(const std::string& text);

// Same, but the result must be a polynomial (constant denominator).
Polynomial parse_polynomial(const std::string& text);

Rational parse_rational(const std::string& text);

std::string poly_to_string(const Polynomial& p);
std::string rf_to_string(const RationalFunction& r);

} // namespace hypsum
