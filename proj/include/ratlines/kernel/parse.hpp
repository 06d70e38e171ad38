#pragma once

#include <string>

#include "ratlines/kernel/mpoly.hpp"

namespace ratlines {

/// Parses a polynomial in t, s, w (and a, b, c, d). Integer and rational
/// literals, `+ - * / ^` and parentheses; `/` only by a nonzero constant.
/// Errors are Error(SyntaxError) with the column in the message.
MPoly parse_poly(const std::string& text);

}  // namespace ratlines
