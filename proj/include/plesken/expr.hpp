#pragma once

#include "plesken/algebra.hpp"

#include <string>
#include <string_view>

namespace plesken {

/// Parses a group-algebra element such as "2*e + (1/2)*a - i*a^2".
///
/// Terms are `[coef '*'] label` or a bare coefficient (a multiple of the
/// identity). Coefficients are integers, fractions p/q, `i`, `<rational>i`,
/// or a parenthesised complex literal like "(1/2-3i)". Labels are matched
/// longest-first against the group's labels and must be followed by a
/// separator. Throws ParseError.
AlgebraElement parse_element(const GroupPtr &group, std::string_view text);

/// Inverse of parse_element: terms in index order, "0" for zero.
std::string format_element(const AlgebraElement &x);

/// Parses "p/q" style scalar text, including complex literals like "1/2+3i".
Scalar parse_scalar(std::string_view text);

} // namespace plesken
