#pragma once

#include <string_view>
#include <vector>

#include "exactkit/rational.hpp"
#include "exactkit/sets.hpp"

namespace exactkit {

/// Integer atoms ("-3") or symbols ("a1"). Throws ParseError.
Element parse_element(std::string_view token);

/// "{1, 2, 3}", "{a, b}", "{}". Braces are optional.
FinSet parse_set(std::string_view text);

/// "{(1, 2), (2, 3)}"
std::vector<ElementPair> parse_pairs(std::string_view text);

/// Rationals separated by commas and/or whitespace, optionally wrapped in
/// parentheses or brackets.
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace exactkit
