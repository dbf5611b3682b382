#pragma once

#include <string>
#include <vector>

#include "series.hpp"

namespace k3web {

// "(1-t^6)/(1-t)^5" style rendering of prod(1-t^d)/prod(1-t^a).
// Empty exponent lists render as "1".
std::string product_form_string(std::vector<int> numer_exponents, std::vector<int> denom_exponents);

// one side of a product form, e.g. "(1-t)^4(1-t^5)"
std::string product_factor_string(std::vector<int> exponents);

/**
 * Parse a rational-function expression over Q[t].
 *
 * Grammar: integers, 't', '+', '-', '*', '/', '^' (nonnegative integer
 * exponents), parentheses, and implicit multiplication by adjacency, so
 * both "(1-t^6)/(1-t)^5" and "1 - 2*t + t^2" parse. '/' builds an exact
 * rational function. Throws a parse error on malformed input.
 */
RationalFunction parse_rational_function(const std::string& text);

}  // namespace k3web
