#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hypcheck/catalog.hpp"
#include "hypcheck/ratfun.hpp"

namespace hypcheck {

// A sample over Q(t) where one parameter has been shifted off a degenerate
// target by the perturbation symbol t; substituting t = 0 recovers the
// degenerate sample the limit is taken toward.
struct PerturbedSample {
    long n = 0;
    std::vector<RatFun> params;
};

PerturbedSample perturb_param(long n, const std::vector<Rational>& params,
                              std::size_t index, const Rational& scale = Rational(1));

// Checks a catalog identity with the sample embedded in Q(t). Holds means
// the two sides agree as canonical rational functions of t, which is
// strictly stronger than agreement of their limits. A guard that vanishes
// identically in t makes the sample undecidable and is reported as skipped.
BasicVerdict<RatFun> check_identity_perturbed(const std::string& id, const PerturbedSample& s);

inline long ceil_half(long n) { return (n + 1) / 2; }

// Limit of 2F1(-n, 1/2; c; 4) as c -> 1 + gamma + ceil(n/2), computed by
// summing the series over Q(t) at c = target + t and cancelling exactly.
// A pole in t is a legitimate outcome, not an error.
LimitResult omega_chu(long n, long gamma);

// The same limit through the right side of the catalog relation 1e4R2.
LimitResult omega_chu_via_relation(long n, long gamma);

// Limit of 3F2(-n, a/2, (a+1)/2; a, c; 4) as c -> gamma + a + ceil(n/2).
// Throws GuardFailureError when a left-side guard of relation 3F2-C
// vanishes identically in t (e.g. integer a making (a)_k or a half-integer
// numerator degenerate for the whole family).
LimitResult omega_chen_chu(long n, long gamma, const Rational& a);

// The same limit through the right side of relation 3F2-C.
LimitResult omega_chen_chu_via_relation(long n, long gamma, const Rational& a);

std::string limit_result_str(const LimitResult& r);

// Two-axis grid of omega values for the CLI table printer.
struct OmegaTable {
    std::string label;
    std::vector<long> ns;
    std::vector<long> gammas;
    std::vector<std::vector<LimitResult>> values;  // values[i][j] at (ns[i], gammas[j])
};

OmegaTable omega_chu_table(long n_max, long gamma_min, long gamma_max);
OmegaTable omega_chen_chu_table(long n_max, long gamma_min, long gamma_max, const Rational& a);
std::string omega_table_text(const OmegaTable& table);

// Checks one parity case of Proposition 5.2 at (n, a, c) twice: directly
// over Q, and as the b -> a - c - N limit (N = 2n or 2n+1) of the RI5
// relation evaluated over Q(t). Holds only when the direct check holds and
// the limit reproduces (1-a)_N (a-c-N)_N times the direct left side.
Verdict check_prop52_limit(bool odd, long n, const Rational& a, const Rational& c);

} // namespace hypcheck
