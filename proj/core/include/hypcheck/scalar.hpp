#pragma once

#include <concepts>
#include <optional>
#include <string>

#include "hypcheck/ratfun.hpp"

namespace hypcheck {

// The series and catalog code is generic over the coefficient field. Both
// Rational and RatFun model this: an exact field containing Q, with decidable
// zero test, recognition of integers, and printable values.
template <class S>
concept ScalarField = requires(const S a, const S b, const Rational& r, long e) {
    requires std::constructible_from<S, Rational>;
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { a / b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.as_integer() } -> std::convertible_to<std::optional<BigInt>>;
    { a.pow(e) } -> std::convertible_to<S>;
    { a.str() } -> std::convertible_to<std::string>;
};

static_assert(ScalarField<Rational>);
static_assert(ScalarField<RatFun>);

// True when the scalar equals the integer v (a cheap common case).
template <ScalarField S>
bool scalar_equals_int(const S& x, long v) {
    auto i = x.as_integer();
    return i && *i == v;
}

} // namespace hypcheck
