#pragma once

#include <hypcheck/rational.hpp>
#include <hypcheck/sampling.hpp>

#include <vector>

// Deterministic draws for property tests, built on the same stream the
// suite uses so failures replay from the literal seed in the test.
namespace testgen {

inline hypcheck::Rational frac(long long num, long long den) {
    return hypcheck::Rational(hypcheck::BigInt(num), hypcheck::BigInt(den));
}

class Gen {
  public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    hypcheck::Rational rational(long bound = 12) {
        return hypcheck::draw_rational(rng_, bound, dens_);
    }

    hypcheck::Rational nonzero(long bound = 12) {
        for (;;) {
            hypcheck::Rational q = rational(bound);
            if (!q.is_zero()) return q;
        }
    }

    hypcheck::Rational noninteger(long bound = 12) {
        for (;;) {
            hypcheck::Rational q = rational(bound);
            if (!q.is_integer()) return q;
        }
    }

    long integer(long lo, long hi) {
        return lo + static_cast<long>(rng_.below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

  private:
    hypcheck::SplitMix64 rng_;
    std::vector<long> dens_ = {1, 2, 3, 5, 7};
};

} // namespace testgen
