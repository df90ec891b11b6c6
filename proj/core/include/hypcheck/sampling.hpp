#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "hypcheck/rational.hpp"

namespace hypcheck {

// The sample stream is part of the external contract: reports must be
// reproducible from (seed, identity id, stream position) alone, across
// toolchains and thread counts. Everything below is fixed 64-bit integer
// arithmetic with the constants spelled out.

// splitmix64 finalizer (Steele, Lea, Flood 2014).
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// FNV-1a over the raw bytes of the id string.
inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// Stream seed for one (suite seed, identity, position) triple.
inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::string_view id,
                                        std::uint64_t position) {
    std::uint64_t s = mix64(seed);
    s = mix64(s ^ fnv1a64(id));
    return mix64(s ^ position);
}

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Value in [0, bound). Plain modulo: the bias is immaterial for test
    // sampling and keeping the reduction trivial keeps the stream easy to
    // reproduce in other languages.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

// Numerator uniform over the integers in [-bound, bound], denominator drawn
// from the configured set, in that draw order.
inline Rational draw_rational(SplitMix64& rng, long numerator_bound,
                              const std::vector<long>& denominators) {
    const auto span = static_cast<std::uint64_t>(2 * numerator_bound + 1);
    long num = static_cast<long>(rng.below(span)) - numerator_bound;
    long den = denominators[static_cast<std::size_t>(rng.below(denominators.size()))];
    return Rational(num, den);
}

inline long draw_n(SplitMix64& rng, long n_max) {
    return static_cast<long>(rng.below(static_cast<std::uint64_t>(n_max + 1)));
}

} // namespace hypcheck
