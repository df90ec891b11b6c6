#pragma once

#include <string>
#include <string_view>

#include "hypcheck/series.hpp"

namespace hypcheck {

// Scalar syntax accepted everywhere: integers, fractions `p/q`, and
// polynomial expressions in t such as `3/2 + t - 5*t^2`, with `*`, `/`,
// parentheses and nonnegative integer `^` powers.
RatFun parse_scalar(std::string_view text);

// Restriction of parse_scalar to t-free values.
Rational parse_rational(std::string_view text);

// Series syntax used by the CLI: `pFq(a1, ..., ap; b1, ..., bq; z)` where the
// leading `pFq` (e.g. `4F3`) states the parameter counts.
SeriesSpec<RatFun> parse_series(std::string_view text);

} // namespace hypcheck
