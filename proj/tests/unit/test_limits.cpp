#include <doctest.h>

#include <hypcheck/catalog.hpp>
#include <hypcheck/limits.hpp>

#include <string>
#include <variant>
#include <vector>

#include "helpers.hpp"

using namespace hypcheck;
using testgen::frac;

TEST_CASE("perturb_param embeds and shifts one slot") {
    PerturbedSample s = perturb_param(3, {Rational(1, 2), Rational(5)}, 1);
    CHECK(s.n == 3);
    CHECK(s.params[0] == RatFun(Rational(1, 2)));
    CHECK(s.params[1] == RatFun(Rational(5)) + RatFun::t());
    PerturbedSample scaled = perturb_param(3, {Rational(1, 2), Rational(5)}, 1, Rational(-2));
    CHECK(scaled.params[1] == RatFun(Rational(5)) - RatFun(Rational(2)) * RatFun::t());
    CHECK_THROWS_AS(perturb_param(1, {Rational(1)}, 5), Error);
    CHECK_THROWS_AS(perturb_param(1, {Rational(1)}, 0, Rational(0)), Error);
}

TEST_CASE("omega_chu reference values") {
    CHECK(omega_chu(0, 0) == LimitResult(Rational(1)));
    CHECK(omega_chu(1, 0) == LimitResult(Rational(0)));
    CHECK(omega_chu(2, -1) == LimitResult(Rational(3)));
    CHECK(omega_chu(2, 2) == LimitResult(Rational(3, 5)));
    CHECK(omega_chu(4, 1) == LimitResult(Rational(3, 5)));
    CHECK(omega_chu(2, -2) == LimitResult(PoleAtZero{1}));
    CHECK_THROWS_AS(omega_chu(-1, 0), Error);
}

TEST_CASE("omega_chu pole residue at (2, -2)") {
    // target c = 0: multiply by t and take the limit to read off the residue
    const IdentityEntry& e = find_entry("1e4R2");
    const auto& two = std::get<TwoSides>(e.body);
    std::vector<RatFun> params = {RatFun::t()};
    RatFun f = eval_side<RatFun>(two.lhs, params, 2);
    CHECK(f.limit_at_zero() == LimitResult(PoleAtZero{1}));
    CHECK((RatFun::t() * f).limit_at_zero() == LimitResult(Rational(8)));
    RatFun g = eval_side<RatFun>(two.rhs, params, 2);
    CHECK((RatFun::t() * g).limit_at_zero() == LimitResult(Rational(8)));
}

TEST_CASE("both omega_chu routes agree") {
    for (long n = 0; n <= 6; ++n)
        for (long gamma = -2; gamma <= 2; ++gamma)
            CHECK(omega_chu(n, gamma) == omega_chu_via_relation(n, gamma));
}

TEST_CASE("omega_chen_chu") {
    CHECK(omega_chen_chu(2, -1, Rational(1, 2)) == LimitResult(Rational(20, 3)));
    // a = 1 collapses the 3F2 onto the 2F1 family
    for (long n = 0; n <= 4; ++n)
        for (long gamma = -1; gamma <= 1; ++gamma)
            CHECK(omega_chen_chu(n, gamma, Rational(1)) == omega_chu(n, gamma));
    // (a)_n = 0 identically in t is a guard failure, not a value
    CHECK_THROWS_AS(omega_chen_chu(3, 0, Rational(-2)), GuardFailureError);
    testgen::Gen g(103);
    int done = 0;
    while (done < 10) {
        long n = g.integer(0, 4);
        long gamma = g.integer(-2, 2);
        Rational a = g.rational(6);
        try {
            LimitResult direct = omega_chen_chu(n, gamma, a);
            LimitResult via = omega_chen_chu_via_relation(n, gamma, a);
            CHECK(direct == via);
            ++done;
        } catch (const GuardFailureError&) {
        }
    }
}

TEST_CASE("check_identity_perturbed") {
    auto v = check_identity_perturbed("1e4R2", perturb_param(1, {Rational(0)}, 0));
    CHECK(v.holds());
    v = check_identity_perturbed("P3.3",
                                 perturb_param(1, {Rational(1), Rational(1, 5), Rational(1)}, 2));
    CHECK(v.holds());

    // at a regular point the t -> 0 limits land on the plain values
    Verdict plain = check_identity("P3.2", 2, {frac(1, 3), frac(1, 5), frac(2, 7)});
    auto pert =
        check_identity_perturbed("P3.2", perturb_param(2, {frac(1, 3), frac(1, 5), frac(2, 7)}, 0));
    CHECK(pert.holds());
    CHECK(pert.lhs_value->limit_at_zero() == LimitResult(*plain.lhs_value));
    CHECK(pert.rhs_value->limit_at_zero() == LimitResult(*plain.rhs_value));

    // approach direction does not change the limit
    auto m1 = check_identity_perturbed("1e4R2", perturb_param(2, {Rational(1)}, 0, Rational(-1)));
    auto p2 = check_identity_perturbed("1e4R2", perturb_param(2, {Rational(1)}, 0, Rational(2)));
    CHECK(m1.holds());
    CHECK(p2.holds());
    CHECK(m1.lhs_value->limit_at_zero() == p2.lhs_value->limit_at_zero());
    CHECK(m1.lhs_value->limit_at_zero() == LimitResult(Rational(3)));

    // guards that vanish identically in t still skip
    v = check_identity_perturbed("P3.3",
                                 perturb_param(2, {Rational(-1), frac(1, 5), frac(2, 7)}, 2));
    CHECK(v.skipped());
    CHECK(v.skip_reason == "lhs: (a)_2 = 0 in summation range");
}

TEST_CASE("prop 5.2 as a limit of RI5") {
    Verdict v = check_prop52_limit(false, 1, frac(1, 3), frac(1, 7));
    CHECK(v.holds());
    CHECK(*v.lhs_value == *v.rhs_value);
    v = check_prop52_limit(true, 1, frac(1, 3), frac(1, 7));
    CHECK(v.holds());
    v = check_prop52_limit(false, 0, frac(1, 2), frac(1, 3));
    CHECK(v.holds());

    // (a - c - N)_N = 0 degenerates the limit factor
    v = check_prop52_limit(false, 1, frac(1, 3), frac(1, 3) - Rational(2));
    CHECK(v.skipped());
    CHECK(v.skip_reason == "degenerate limit: (1-a)_N (a-c-N)_N = 0");

    // skips from the direct check propagate
    v = check_prop52_limit(false, 1, Rational(1), frac(1, 7));
    CHECK(v.skipped());
    CHECK(v.skip_reason.find("summation range") != std::string::npos);

    testgen::Gen g(107);
    for (bool odd : {false, true}) {
        int done = 0;
        while (done < 15) {
            long n = g.integer(0, 3);
            Rational a = g.rational(6), c = g.rational(6);
            Verdict r = check_prop52_limit(odd, n, a, c);
            if (r.skipped()) continue;
            CHECK(r.holds());
            ++done;
        }
    }
}

TEST_CASE("ceil_half") {
    CHECK(ceil_half(0) == 0);
    CHECK(ceil_half(1) == 1);
    CHECK(ceil_half(2) == 1);
    CHECK(ceil_half(7) == 4);
}

TEST_CASE("limit_result_str") {
    CHECK(limit_result_str(LimitResult(Rational(3, 5))) == "3/5");
    CHECK(limit_result_str(LimitResult(PoleAtZero{2})) == "pole(2)");
}

TEST_CASE("omega tables") {
    OmegaTable t = omega_chu_table(2, -1, 1);
    CHECK(t.label == "omega_chu");
    CHECK(t.ns == std::vector<long>({0, 1, 2}));
    CHECK(t.gammas == std::vector<long>({-1, 0, 1}));
    CHECK(t.values[2][0] == LimitResult(Rational(3)));
    CHECK(limit_result_str(t.values[2][2]) == "2/3");
    std::string text = omega_table_text(t);
    CHECK(text.find("omega_chu") == 0);
    CHECK(text.find("n \\ gamma") != std::string::npos);
    OmegaTable u = omega_chen_chu_table(1, 0, 0, Rational(1, 2));
    CHECK(u.label == "omega_chen_chu, a = 1/2");
}
