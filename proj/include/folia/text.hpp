#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "folia/foliation.hpp"

namespace folia {

using ParamMap = std::map<std::string, Rational, std::less<>>;

/// Polynomial expression: sums, products (explicit '*' or juxtaposition),
/// '/' by constants, '^' with a nonnegative integer exponent, parentheses,
/// rational literals, variable names and parameters.
MultiPoly parse_polynomial(std::string_view text, const ParamMap& params = {},
                           const std::vector<std::string>& names = {"x", "y", "z"});

/// Either "A dx + B dy + C dz" (each marker may repeat; all three must be
/// present) or three coefficients separated by ';'. Lines starting with '#'
/// are comments.
FoliationForm parse_form(std::string_view text, const ParamMap& params = {});

/// "x + y + z", optionally followed by "= 0".
ProjectiveLine parse_line(std::string_view text, const ParamMap& params = {});

/// "name=value" with a rational value.
std::pair<std::string, Rational> parse_param(std::string_view text);

}  // namespace folia
