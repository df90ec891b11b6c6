#pragma once

#include <string>
#include <vector>

#include "hypcheck/scalar.hpp"

namespace hypcheck {

// A generalized hypergeometric series pFq given by its numerator parameters,
// denominator parameters and argument. Term k carries the rising factorials
// (a_i)_k over (b_j)_k, times z^k / k!.
template <ScalarField S>
struct SeriesSpec {
    std::vector<S> numerators;
    std::vector<S> denominators;
    S argument = S(Rational(0));

    friend bool operator==(const SeriesSpec&, const SeriesSpec&) = default;
};

using SeriesSpecQ = SeriesSpec<Rational>;
using SeriesSpecQt = SeriesSpec<RatFun>;

// Rising factorial (x)_k = x (x+1) ... (x+k-1), with (x)_0 = 1.
template <ScalarField S>
S pochhammer(const S& x, long k) {
    S acc = S(Rational(1));
    for (long j = 0; j < k; ++j) acc = acc * (x + S(Rational(j)));
    return acc;
}

// (a)_{n-k} computed by peeling k factors off the top of (a)_n:
// (a)_{n-k} = (-1)^k (a)_n / (1-a-n)_k. Requires 0 <= k <= n and a
// nonvanishing divisor (1-a-n)_k.
template <ScalarField S>
S pochhammer_reverse_index(const S& a, long n, long k) {
    if (k < 0 || k > n) throw Error("pochhammer_reverse_index requires 0 <= k <= n");
    S div = pochhammer(S(Rational(1)) - a - S(Rational(n)), k);
    if (div.is_zero())
        throw ZeroDenominatorError("(1-a-n)_k vanishes; the quotient form of (a)_{n-k} is undefined");
    S value = pochhammer(a, n) / div;
    return (k % 2 == 0) ? value : -value;
}

// Smallest m >= 0 such that -m appears among the numerator parameters; this
// is where the series terminates. Throws NonTerminatingError when no
// numerator is a nonpositive integer.
template <ScalarField S>
long termination_index(const SeriesSpec<S>& s) {
    bool found = false;
    long best = 0;
    for (const S& a : s.numerators) {
        auto v = a.as_integer();
        if (!v || *v > 0) continue;
        long m = static_cast<long>(-*v);
        if (!found || m < best) {
            best = m;
            found = true;
        }
    }
    if (!found) throw NonTerminatingError();
    return best;
}

namespace detail {

// Sums terms k = 0..limit of the series. Zero Pochhammer factors are kept
// out of the running product and tracked by first index of occurrence: once
// a numerator factor hits zero every later term vanishes and the sum is
// complete, while a denominator factor hitting zero first (or at the same
// term) is a genuine pole, reported as PoleAtTermError at that term.
template <ScalarField S>
S sum_terms(const SeriesSpec<S>& s, long limit) {
    const S one = S(Rational(1));
    S total = one;  // the k = 0 term
    S live = one;   // product of the nonzero factors of the current term
    long first_num_zero = -1;
    long first_den_zero = -1;
    for (long k = 1; k <= limit; ++k) {
        for (const S& a : s.numerators) {
            S f = a + S(Rational(k - 1));
            if (f.is_zero()) {
                if (first_num_zero < 0) first_num_zero = k;
            } else {
                live = live * f;
            }
        }
        for (const S& b : s.denominators) {
            S f = b + S(Rational(k - 1));
            if (f.is_zero()) {
                if (first_den_zero < 0) first_den_zero = k;
            } else {
                live = live / f;
            }
        }
        if (first_den_zero >= 0) {
            if (first_num_zero >= 0 && first_num_zero < first_den_zero) break;
            throw PoleAtTermError(first_den_zero);
        }
        if (first_num_zero >= 0) break;  // all remaining terms are zero
        live = live * s.argument / S(Rational(k));
        total = total + live;
    }
    return total;
}

} // namespace detail

// Value of a terminating series: the sum of terms 0..N where N is the
// termination index. Within that range denominator Pochhammer factors must
// stay nonzero (PoleAtTermError otherwise).
template <ScalarField S>
S eval_terminating(const SeriesSpec<S>& s) {
    return detail::sum_terms(s, termination_index(s));
}

// Partial sum of terms 0..n regardless of termination. A term whose
// numerator factor vanished at an earlier index than any denominator zero
// counts as 0; a denominator zero otherwise is PoleAtTermError.
template <ScalarField S>
S partial_sum(const SeriesSpec<S>& s, long n) {
    if (n < 0) throw Error("partial sum order must be nonnegative");
    return detail::sum_terms(s, n);
}

// Result of writing a terminating sum backwards: prefactor times the value
// of the reversed series.
template <ScalarField S>
struct Reversal {
    S prefactor;
    SeriesSpec<S> series;
};

// Reverses the order of summation of a terminating series with nonzero
// argument x. One numerator slot equal to -n is consumed; with remaining
// numerators a_i and denominators b_j,
//   prefactor = prod (a_i)_n * (-x)^n / prod (b_j)_n,
// and the reversed series has numerators {-n} u {1-b_j-n}, denominators
// {1-a_i-n} and argument (-1)^(p+q)/x. Any vanishing (a_i)_n or (b_j)_n
// makes the rewrite undefined (ZeroPochhammerError).
template <ScalarField S>
Reversal<S> reverse(const SeriesSpec<S>& s) {
    if (s.argument.is_zero()) throw ZeroArgumentError();
    long n = termination_index(s);
    size_t slot = s.numerators.size();
    for (size_t i = 0; i < s.numerators.size(); ++i) {
        if (scalar_equals_int(s.numerators[i], -n)) {
            slot = i;
            break;
        }
    }
    // termination_index guarantees a -n slot exists
    std::vector<S> rest;
    for (size_t i = 0; i < s.numerators.size(); ++i)
        if (i != slot) rest.push_back(s.numerators[i]);

    const S one = S(Rational(1));
    const S sn = S(Rational(n));
    S pre = (-s.argument).pow(n);
    Reversal<S> out;
    out.series.numerators.push_back(S(Rational(-n)));
    for (const S& a : rest) {
        S p = pochhammer(a, n);
        if (p.is_zero()) throw ZeroPochhammerError("(" + a.str() + ")_" + std::to_string(n) + " is zero");
        pre = pre * p;
        out.series.denominators.push_back(one - a - sn);
    }
    for (const S& b : s.denominators) {
        S p = pochhammer(b, n);
        if (p.is_zero()) throw ZeroPochhammerError("(" + b.str() + ")_" + std::to_string(n) + " is zero");
        pre = pre / p;
        out.series.numerators.push_back(one - b - sn);
    }
    long p_count = static_cast<long>(rest.size());
    long q_count = static_cast<long>(s.denominators.size());
    S flip = ((p_count + q_count) % 2 == 0) ? one : -one;
    out.series.argument = flip / s.argument;
    out.prefactor = pre;
    return out;
}

// Closed form of the terminating Gauss sum at unit argument:
// 2F1(-n, a; b; 1) = (b-a)_n / (b)_n.
template <ScalarField S>
S chu_vandermonde_rhs(long n, const S& a, const S& b) {
    S den = pochhammer(b, n);
    if (den.is_zero()) throw ZeroPochhammerError("(" + b.str() + ")_" + std::to_string(n) + " is zero");
    return pochhammer(b - a, n) / den;
}

// "pFq(a1, ..., ap; b1, ..., bq; z)" in the scalar syntax.
template <ScalarField S>
std::string series_str(const SeriesSpec<S>& s) {
    std::string out = std::to_string(s.numerators.size()) + "F" +
                      std::to_string(s.denominators.size()) + "(";
    for (size_t i = 0; i < s.numerators.size(); ++i) {
        if (i) out += ", ";
        out += s.numerators[i].str();
    }
    out += "; ";
    for (size_t i = 0; i < s.denominators.size(); ++i) {
        if (i) out += ", ";
        out += s.denominators[i].str();
    }
    out += "; " + s.argument.str() + ")";
    return out;
}

} // namespace hypcheck
