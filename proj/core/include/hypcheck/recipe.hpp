#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypcheck/affine.hpp"
#include "hypcheck/series.hpp"

namespace hypcheck {

// One rising-factorial factor (base)_{len_n*n + len_c} of a prefactor, with
// the base affine in the identity parameters and n. Plain affine factors are
// Pochhammers of length 1.
struct PochFactor {
    AffineExpr base;
    long len_n = 1;
    long len_c = 0;

    long length(long n) const { return len_n * n + len_c; }
    PochFactor substituted(const AffineMap& m) const { return {base.substitute(m), len_n, len_c}; }
    friend bool operator==(const PochFactor&, const PochFactor&) = default;
};

// A factorial (len_n*n + len_c)! appearing in a prefactor.
struct FactorialFactor {
    long len_n = 1;
    long len_c = 0;
    long length(long n) const { return len_n * n + len_c; }
    friend bool operator==(const FactorialFactor&, const FactorialFactor&) = default;
};

// Scalar multiplier of one side of an identity:
//   constant * (-1)^(n * alternating) * prod num_poch * prod num_fact!
//     / (prod den_poch * prod den_fact!).
struct Prefactor {
    Rational constant = 1;
    bool alternating = false;
    std::vector<PochFactor> num_poch, den_poch;
    std::vector<FactorialFactor> num_fact, den_fact;

    Prefactor substituted(const AffineMap& m) const {
        Prefactor out = *this;
        for (auto& f : out.num_poch) f = f.substituted(m);
        for (auto& f : out.den_poch) f = f.substituted(m);
        return out;
    }
};

enum class SumMode { terminating, partial_sum };

// A hypergeometric series whose parameters are affine in the identity
// parameters and n, summed either to termination or as the partial sum of
// the first n+1 terms.
struct SeriesRecipe {
    std::vector<AffineExpr> numerators, denominators;
    Rational argument = 0;
    SumMode mode = SumMode::terminating;

    SeriesRecipe substituted(const AffineMap& m) const {
        SeriesRecipe out = *this;
        for (auto& e : out.numerators) e = e.substitute(m);
        for (auto& e : out.denominators) e = e.substitute(m);
        return out;
    }

    template <ScalarField S>
    SeriesSpec<S> instantiate(const std::vector<S>& params, long n) const {
        SeriesSpec<S> s;
        s.numerators.reserve(numerators.size());
        s.denominators.reserve(denominators.size());
        for (const auto& e : numerators) s.numerators.push_back(e.template evaluate<S>(params, n));
        for (const auto& e : denominators) s.denominators.push_back(e.template evaluate<S>(params, n));
        s.argument = S(argument);
        return s;
    }
};

// One side of an identity: prefactor times series value.
struct Side {
    Prefactor pre;
    SeriesRecipe series;

    Side substituted(const AffineMap& m) const { return {pre.substituted(m), series.substituted(m)}; }
};

template <ScalarField S>
S eval_prefactor(const Prefactor& pf, const std::vector<S>& params, long n) {
    Rational c = pf.constant;
    if (pf.alternating && (n % 2)) c = -c;
    S acc = S(c);
    for (const auto& f : pf.num_poch)
        acc = acc * pochhammer(f.base.template evaluate<S>(params, n), f.length(n));
    for (const auto& f : pf.num_fact) acc = acc * S(Rational(factorial(f.length(n))));
    for (const auto& f : pf.den_poch) {
        S p = pochhammer(f.base.template evaluate<S>(params, n), f.length(n));
        if (p.is_zero()) throw ZeroPochhammerError("prefactor denominator Pochhammer is zero");
        acc = acc / p;
    }
    for (const auto& f : pf.den_fact) acc = acc / S(Rational(factorial(f.length(n))));
    return acc;
}

template <ScalarField S>
S eval_side(const Side& side, const std::vector<S>& params, long n) {
    SeriesSpec<S> s = side.series.template instantiate<S>(params, n);
    S value = (side.series.mode == SumMode::partial_sum) ? partial_sum(s, n) : eval_terminating(s);
    return eval_prefactor<S>(side.pre, params, n) * value;
}

// The summation range a side's denominator guards must cover: n for partial
// sums, the designed termination index otherwise. The design range is read
// off the parameter-free numerator entries only. A numerator that happens to
// hit a nonpositive integer at special parameter values truncates the sum
// early, and a denominator zero behind such a truncation would silently turn
// the evaluated sum into something other than the identity's rational
// continuation; guarding through the parameter-free range rejects exactly
// those samples.
inline std::optional<long> side_guard_range(const SeriesRecipe& r, long n) {
    if (r.mode == SumMode::partial_sum) return n;
    std::optional<long> best;
    for (const auto& e : r.numerators) {
        bool param_free = true;
        for (int i = 0; i < e.arity(); ++i)
            if (!e.coef(i).is_zero()) param_free = false;
        if (!param_free) continue;
        Rational v = e.n_coef() * Rational(n) + e.constant_term();
        auto iv = v.as_integer();
        if (!iv || *iv > 0) continue;
        long m = static_cast<long>(-*iv);
        if (!best || m < *best) best = m;
    }
    return best;
}

// First violated mechanical guard of one side, or nullopt when all pass:
// every prefactor Pochhammer must be nonzero, and every series denominator
// Pochhammer must be nonzero through the summation range.
template <ScalarField S>
std::optional<std::string> side_guard_violation(const Side& side, const std::vector<S>& params,
                                                long n, std::span<const std::string> names) {
    for (const auto* list : {&side.pre.num_poch, &side.pre.den_poch}) {
        for (const auto& f : *list) {
            S v = f.base.template evaluate<S>(params, n);
            if (pochhammer(v, f.length(n)).is_zero())
                return "(" + f.base.str(names) + ")_" + std::to_string(f.length(n)) + " = 0";
        }
    }
    auto range = side_guard_range(side.series, n);
    if (!range) return "series does not terminate";
    for (const auto& d : side.series.denominators) {
        S v = d.template evaluate<S>(params, n);
        if (pochhammer(v, *range).is_zero())
            return "(" + d.str(names) + ")_" + std::to_string(*range) + " = 0 in summation range";
    }
    return std::nullopt;
}

// Static rendering of a side's guards for catalog listings.
std::string side_guard_description(const Side& side, std::span<const std::string> names);

} // namespace hypcheck
