#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hypcheck/recipe.hpp"

namespace hypcheck {

enum class VerdictStatus { holds, fails, skipped };

// Outcome of checking one identity at one sample. Values are present unless
// the sample was skipped; holds means exact equality.
template <ScalarField S>
struct BasicVerdict {
    VerdictStatus status = VerdictStatus::skipped;
    std::optional<S> lhs_value, rhs_value;
    std::string skip_reason;

    bool holds() const { return status == VerdictStatus::holds; }
    bool fails() const { return status == VerdictStatus::fails; }
    bool skipped() const { return status == VerdictStatus::skipped; }

    static BasicVerdict compare(S lhs, S rhs) {
        BasicVerdict v;
        v.status = (lhs == rhs) ? VerdictStatus::holds : VerdictStatus::fails;
        v.lhs_value = std::move(lhs);
        v.rhs_value = std::move(rhs);
        return v;
    }
    static BasicVerdict skip(std::string reason) {
        BasicVerdict v;
        v.skip_reason = std::move(reason);
        return v;
    }
};

using Verdict = BasicVerdict<Rational>;

// An identity with explicit two-sided recipes.
struct TwoSides {
    Side lhs, rhs;
};

// The expansion identity family: parametric in the counts p and q of extra
// numerator/denominator parameters. Parameter order: a, c, a_1..a_p,
// b_1..b_q, x.
struct Prop31Body {
    int p = 0, q = 0;
};

struct IdentityEntry {
    std::string id;
    std::string anchor;  // equation / proposition label the id came from
    std::vector<std::string> param_names;
    std::variant<TwoSides, Prop31Body> body;
    std::vector<PochFactor> extra_guards;  // beyond the mechanical side guards

    int arity() const { return static_cast<int>(param_names.size()); }
};

// All identities, in stable catalog order.
const std::vector<IdentityEntry>& catalog();
const IdentityEntry& find_entry(std::string_view id);  // UnknownIdError

// Compares the expansion identity's single higher-order series against its
// double-sum expansion, exactly.
template <ScalarField S>
BasicVerdict<S> expand_prop31(int p, int q, const S& a, const S& c, const std::vector<S>& extra_num,
                              const std::vector<S>& extra_den, const S& x, long n);

Verdict expand_prop31(int p, int q, const Rational& a, const Rational& c,
                      const std::vector<Rational>& extra_num, const std::vector<Rational>& extra_den,
                      const Rational& x, long n);

// First violated guard at this sample, if any (mechanical side guards plus
// the entry's extra guard list).
template <ScalarField S>
std::optional<std::string> entry_guard_violation(const IdentityEntry& e, long n,
                                                 const std::vector<S>& params);

// Evaluates both sides exactly; holds iff equal, skipped iff a guard or
// residual pole triggers.
template <ScalarField S>
BasicVerdict<S> check_identity(const IdentityEntry& e, long n, const std::vector<S>& params);

Verdict check_identity(std::string_view id, long n, const std::vector<Rational>& params);

struct CatalogRow {
    std::string id;
    std::string anchor;
    int arity = 0;
    std::string guards;
};
std::vector<CatalogRow> list_catalog();

// ---- implementation ----

namespace detail {

template <ScalarField S>
SeriesSpec<S> prop31_lhs(int p, int q, const S& a, const S& c, const std::vector<S>& extra_num,
                         const std::vector<S>& extra_den, const S& x, long n) {
    const S one = S(Rational(1));
    const S half = S(Rational(1, 2));
    SeriesSpec<S> s;
    s.numerators = {S(Rational(-n)), half * a, half * (a + one)};
    for (const auto& v : extra_num) s.numerators.push_back(v);
    s.denominators = {a, one + a - c, c};
    for (const auto& v : extra_den) s.denominators.push_back(v);
    s.argument = x;
    return s;
}

} // namespace detail

template <ScalarField S>
BasicVerdict<S> expand_prop31(int p, int q, const S& a, const S& c, const std::vector<S>& extra_num,
                              const std::vector<S>& extra_den, const S& x, long n) {
    if (static_cast<int>(extra_num.size()) != p || static_cast<int>(extra_den.size()) != q)
        throw Error("expand_prop31: extra parameter counts do not match p, q");
    const S one = S(Rational(1));
    S lhs = eval_terminating(detail::prop31_lhs(p, q, a, c, extra_num, extra_den, x, n));

    S rhs = S(Rational(0));
    const S quarter_x = x / S(Rational(4));
    for (long m = 0; m <= n; ++m) {
        S outer = pochhammer(S(Rational(-n)), m);
        for (const auto& ai : extra_num) outer = outer * pochhammer(ai, m);
        outer = outer * quarter_x.pow(m) / S(Rational(factorial(m)));
        outer = outer / pochhammer(one + a - c, m);
        for (const auto& bj : extra_den) outer = outer / pochhammer(bj, m);
        if (outer.is_zero()) continue;
        SeriesSpec<S> inner;
        inner.numerators.push_back(S(Rational(-n + m)));
        for (const auto& ai : extra_num) inner.numerators.push_back(ai + S(Rational(m)));
        inner.denominators.push_back(c);
        for (const auto& bj : extra_den) inner.denominators.push_back(bj + S(Rational(m)));
        inner.argument = quarter_x;
        rhs = rhs + outer * eval_terminating(inner);
    }
    return BasicVerdict<S>::compare(std::move(lhs), std::move(rhs));
}

template <ScalarField S>
std::optional<std::string> entry_guard_violation(const IdentityEntry& e, long n,
                                                 const std::vector<S>& params) {
    if (static_cast<int>(params.size()) != e.arity()) throw ArityMismatchError();
    for (const auto& g : e.extra_guards) {
        S v = g.base.template evaluate<S>(params, n);
        if (pochhammer(v, g.length(n)).is_zero())
            return "(" + g.base.str(e.param_names) + ")_" + std::to_string(g.length(n)) + " = 0";
    }
    if (const auto* two = std::get_if<TwoSides>(&e.body)) {
        if (auto v = side_guard_violation<S>(two->lhs, params, n, e.param_names))
            return "lhs: " + *v;
        if (auto v = side_guard_violation<S>(two->rhs, params, n, e.param_names))
            return "rhs: " + *v;
        return std::nullopt;
    }
    // Expansion entries: guard the left series denominators over the full
    // designed range n (the extra_guards list covers the right side).
    const auto& body = std::get<Prop31Body>(e.body);
    const int p = body.p, q = body.q;
    std::vector<S> extra_num(params.begin() + 2, params.begin() + 2 + p);
    std::vector<S> extra_den(params.begin() + 2 + p, params.begin() + 2 + p + q);
    SeriesSpec<S> lhs =
        detail::prop31_lhs(p, q, params[0], params[1], extra_num, extra_den, params.back(), n);
    for (const auto& d : lhs.denominators)
        if (pochhammer(d, n).is_zero())
            return "lhs: (" + d.str() + ")_" + std::to_string(n) + " = 0 in summation range";
    return std::nullopt;
}

template <ScalarField S>
BasicVerdict<S> check_identity(const IdentityEntry& e, long n, const std::vector<S>& params) {
    if (auto g = entry_guard_violation<S>(e, n, params)) return BasicVerdict<S>::skip(*g);
    try {
        if (const auto* two = std::get_if<TwoSides>(&e.body))
            return BasicVerdict<S>::compare(eval_side<S>(two->lhs, params, n),
                                            eval_side<S>(two->rhs, params, n));
        const auto& body = std::get<Prop31Body>(e.body);
        const int p = body.p, q = body.q;
        std::vector<S> extra_num(params.begin() + 2, params.begin() + 2 + p);
        std::vector<S> extra_den(params.begin() + 2 + p, params.begin() + 2 + p + q);
        return expand_prop31<S>(p, q, params[0], params[1], extra_num, extra_den, params.back(), n);
    } catch (const PoleAtTermError& err) {
        return BasicVerdict<S>::skip(err.what());
    } catch (const ZeroPochhammerError& err) {
        return BasicVerdict<S>::skip(err.what());
    }
}

} // namespace hypcheck
