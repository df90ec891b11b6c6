#include "hypcheck/limits.hpp"

#include <utility>

namespace hypcheck {

namespace {

// The two omega families are limits of one-parameter catalog relations, so
// both evaluation routes share this: substitute c = target + t into the
// requested side and take the exact limit at t = 0.
LimitResult side_limit(const IdentityEntry& e, bool right, long n,
                       const std::vector<RatFun>& params) {
    const auto& two = std::get<TwoSides>(e.body);
    const Side& side = right ? two.rhs : two.lhs;
    if (auto g = side_guard_violation<RatFun>(side, params, n, e.param_names))
        throw GuardFailureError((right ? "rhs guard: " : "lhs guard: ") + *g);
    return eval_side<RatFun>(side, params, n).limit_at_zero();
}

RatFun perturbed_target(const Rational& target) { return RatFun(target) + RatFun::t(); }

} // namespace

PerturbedSample perturb_param(long n, const std::vector<Rational>& params, std::size_t index,
                              const Rational& scale) {
    if (index >= params.size()) throw Error("perturb_param: parameter index out of range");
    if (scale.is_zero()) throw Error("perturb_param: zero perturbation scale");
    PerturbedSample s;
    s.n = n;
    s.params.reserve(params.size());
    for (const auto& p : params) s.params.emplace_back(p);
    s.params[index] += RatFun(scale) * RatFun::t();
    return s;
}

BasicVerdict<RatFun> check_identity_perturbed(const std::string& id, const PerturbedSample& s) {
    return check_identity<RatFun>(find_entry(id), s.n, s.params);
}

LimitResult omega_chu(long n, long gamma) {
    if (n < 0) throw Error("omega_chu: negative n");
    const Rational target(1 + gamma + ceil_half(n));
    return side_limit(find_entry("1e4R2"), false, n, {perturbed_target(target)});
}

LimitResult omega_chu_via_relation(long n, long gamma) {
    if (n < 0) throw Error("omega_chu: negative n");
    const Rational target(1 + gamma + ceil_half(n));
    return side_limit(find_entry("1e4R2"), true, n, {perturbed_target(target)});
}

LimitResult omega_chen_chu(long n, long gamma, const Rational& a) {
    if (n < 0) throw Error("omega_chen_chu: negative n");
    const Rational target = a + Rational(gamma + ceil_half(n));
    return side_limit(find_entry("3F2-C"), false, n, {RatFun(a), perturbed_target(target)});
}

LimitResult omega_chen_chu_via_relation(long n, long gamma, const Rational& a) {
    if (n < 0) throw Error("omega_chen_chu: negative n");
    const Rational target = a + Rational(gamma + ceil_half(n));
    return side_limit(find_entry("3F2-C"), true, n, {RatFun(a), perturbed_target(target)});
}

std::string limit_result_str(const LimitResult& r) {
    if (const auto* v = std::get_if<Rational>(&r)) return v->str();
    return "pole(" + std::to_string(std::get<PoleAtZero>(r).order) + ")";
}

OmegaTable omega_chu_table(long n_max, long gamma_min, long gamma_max) {
    OmegaTable t;
    t.label = "omega_chu";
    for (long n = 0; n <= n_max; ++n) t.ns.push_back(n);
    for (long g = gamma_min; g <= gamma_max; ++g) t.gammas.push_back(g);
    for (long n : t.ns) {
        std::vector<LimitResult> row;
        row.reserve(t.gammas.size());
        for (long g : t.gammas) row.push_back(omega_chu(n, g));
        t.values.push_back(std::move(row));
    }
    return t;
}

OmegaTable omega_chen_chu_table(long n_max, long gamma_min, long gamma_max, const Rational& a) {
    OmegaTable t;
    t.label = "omega_chen_chu, a = " + a.str();
    for (long n = 0; n <= n_max; ++n) t.ns.push_back(n);
    for (long g = gamma_min; g <= gamma_max; ++g) t.gammas.push_back(g);
    for (long n : t.ns) {
        std::vector<LimitResult> row;
        row.reserve(t.gammas.size());
        for (long g : t.gammas) row.push_back(omega_chen_chu(n, g, a));
        t.values.push_back(std::move(row));
    }
    return t;
}

std::string omega_table_text(const OmegaTable& table) {
    std::vector<std::string> head;
    head.push_back("n \\ gamma");
    for (long g : table.gammas) head.push_back(std::to_string(g));

    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < table.ns.size(); ++i) {
        std::vector<std::string> row;
        row.push_back(std::to_string(table.ns[i]));
        for (const auto& v : table.values[i]) row.push_back(limit_result_str(v));
        rows.push_back(std::move(row));
    }

    std::vector<std::size_t> width(head.size());
    for (std::size_t j = 0; j < head.size(); ++j) {
        width[j] = head[j].size();
        for (const auto& row : rows) width[j] = std::max(width[j], row[j].size());
    }

    auto pad = [](const std::string& s, std::size_t w) {
        return std::string(w - s.size(), ' ') + s;
    };
    std::string out = table.label + "\n";
    for (std::size_t j = 0; j < head.size(); ++j)
        out += (j == 0 ? "  " : j == 1 ? " | " : "  ") + pad(head[j], width[j]);
    out += "\n";
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j)
            out += (j == 0 ? "  " : j == 1 ? " | " : "  ") + pad(row[j], width[j]);
        out += "\n";
    }
    return out;
}

Verdict check_prop52_limit(bool odd, long n, const Rational& a, const Rational& c) {
    if (n < 0) throw Error("check_prop52_limit: negative n");
    const long big_n = 2 * n + (odd ? 1 : 0);

    Verdict direct = check_identity(odd ? "P5.2-odd" : "P5.2-even", n, {a, c});
    if (direct.skipped()) return direct;

    // R_N(a, b, c) -> (1-a)_N (b)_N 3F2(...) as b -> a-c-N; a vanishing
    // prefactor collapses both sides of the comparison to zero.
    const Rational b0 = a - c - Rational(big_n);
    const Rational factor =
        pochhammer(Rational(1) - a, big_n) * pochhammer(b0, big_n);
    if (factor.is_zero())
        return Verdict::skip("degenerate limit: (1-a)_N (a-c-N)_N = 0");

    PerturbedSample s = perturb_param(big_n, {a, b0, c}, 1);
    BasicVerdict<RatFun> pert = check_identity_perturbed("RI5", s);
    if (pert.skipped()) return Verdict::skip("perturbed RI5: " + pert.skip_reason);

    LimitResult lim = pert.lhs_value->limit_at_zero();
    const Rational* value = std::get_if<Rational>(&lim);

    Verdict out;
    if (value) out.lhs_value = *value;
    out.rhs_value = factor * *direct.lhs_value;
    out.status = (direct.holds() && pert.holds() && value && *value == *out.rhs_value)
                     ? VerdictStatus::holds
                     : VerdictStatus::fails;
    return out;
}

} // namespace hypcheck
