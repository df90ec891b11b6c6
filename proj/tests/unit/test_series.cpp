#include <doctest.h>

#include <hypcheck/parse.hpp>
#include <hypcheck/series.hpp>

#include <utility>
#include <vector>

#include "helpers.hpp"

using namespace hypcheck;

namespace {

SeriesSpecQ spec(std::vector<Rational> num, std::vector<Rational> den, Rational z) {
    SeriesSpecQ s;
    s.numerators = std::move(num);
    s.denominators = std::move(den);
    s.argument = z;
    return s;
}

} // namespace

TEST_CASE("pochhammer") {
    CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
    CHECK(pochhammer(Rational(-7, 3), 0) == Rational(1));
    CHECK(pochhammer(Rational(-3), 5) == Rational(0));
    CHECK(pochhammer(Rational(-3), 3) == Rational(-6));
    testgen::Gen g(47);
    for (int i = 0; i < 60; ++i) {
        Rational a = g.rational();
        long k = g.integer(0, 10);
        CHECK(pochhammer(a, k + 1) == pochhammer(a, k) * (a + Rational(k)));
    }
}

TEST_CASE("doubling: (a)_2n = 4^n (a/2)_n ((a+1)/2)_n") {
    testgen::Gen g(53);
    for (int i = 0; i < 40; ++i) {
        Rational a = g.rational();
        long n = g.integer(0, 20);
        CHECK(pochhammer(a, 2 * n) ==
              Rational(4).pow(n) * pochhammer(a / Rational(2), n) *
                  pochhammer((a + Rational(1)) / Rational(2), n));
    }
    RatFun at = RatFun(Rational(1, 3)) + RatFun::t();
    RatFun one(Rational(1)), two(Rational(2)), four(Rational(4));
    for (long n = 0; n <= 6; ++n)
        CHECK(pochhammer(at, 2 * n) ==
              four.pow(n) * pochhammer(at / two, n) * pochhammer((at + one) / two, n));
}

TEST_CASE("termination index") {
    CHECK(termination_index(spec({Rational(-5), Rational(1, 2)}, {Rational(1)}, Rational(1))) == 5);
    CHECK(termination_index(spec({Rational(-5), Rational(-2)}, {}, Rational(1))) == 2);
    CHECK(termination_index(spec({Rational(0), Rational(3)}, {}, Rational(2))) == 0);
    CHECK_THROWS_AS(termination_index(spec({Rational(1, 2)}, {}, Rational(1))),
                    NonTerminatingError);
    CHECK_THROWS_AS(termination_index(spec({Rational(3)}, {Rational(-4)}, Rational(1))),
                    NonTerminatingError);
    CHECK_THROWS_AS(termination_index(spec({}, {}, Rational(1))), NonTerminatingError);
}

TEST_CASE("eval_terminating reference values") {
    CHECK(eval_terminating(spec({Rational(-2), Rational(1, 2)}, {Rational(3)}, Rational(1))) ==
          Rational(35, 48));
    CHECK(eval_terminating(spec({Rational(-1), Rational(1, 2), Rational(1), Rational(1)},
                                {Rational(1), Rational(1), Rational(1)}, Rational(4))) ==
          Rational(-1));
    CHECK(eval_terminating(spec({Rational(-4), Rational(2, 3)}, {Rational(5, 7)}, Rational(1))) ==
          Rational(7568, 300105));
    // binomial theorem: 1F0(-n;;x) = (1-x)^n
    CHECK(eval_terminating(spec({Rational(-3)}, {}, Rational(2))) == Rational(-1));
    CHECK(eval_terminating(spec({Rational(-6)}, {}, Rational(1, 3))) == Rational(2, 3).pow(6));
    CHECK(eval_terminating(spec({Rational(0), Rational(9)}, {Rational(-4)}, Rational(7))) ==
          Rational(1));
}

TEST_CASE("vanishing numerators truncate, vanishing denominators are poles") {
    // the earliest nonpositive integer numerator bounds the sum
    CHECK(eval_terminating(spec({Rational(-3), Rational(-1)}, {Rational(-2)}, Rational(1))) ==
          Rational(-1, 2));
    CHECK_THROWS_AS(
        eval_terminating(spec({Rational(-3), Rational(1)}, {Rational(-1)}, Rational(1))),
        PoleAtTermError);
    try {
        eval_terminating(spec({Rational(-3), Rational(1)}, {Rational(-1)}, Rational(1)));
        CHECK(false);
    } catch (const PoleAtTermError& e) {
        CHECK(e.term() == 2);
    }
    // past the termination index a numerator zero kills the tail, so a
    // long partial sum still matches the terminating value
    SeriesSpecQ trunc = spec({Rational(-2), Rational(1, 2)}, {Rational(-4)}, Rational(1));
    CHECK(partial_sum(trunc, 5) == eval_terminating(trunc));
    // but a 0/0 tie is undefined: the pole wins
    CHECK_THROWS_AS(
        partial_sum(spec({Rational(-2), Rational(1, 2)}, {Rational(-2)}, Rational(1)), 5),
        PoleAtTermError);
}

TEST_CASE("partial sums") {
    CHECK(partial_sum(spec({Rational(1), Rational(1)}, {Rational(1)}, Rational(4)), 1) ==
          Rational(5));
    CHECK(partial_sum(spec({Rational(1, 2), Rational(1), Rational(1)},
                           {Rational(1), Rational(1)}, Rational(4)),
                      2) == Rational(9));
    CHECK(partial_sum(spec({Rational(2)}, {}, Rational(1, 2)), 0) == Rational(1));
    CHECK_THROWS_AS(partial_sum(spec({Rational(1)}, {}, Rational(1)), -1), Error);
    // at or past the termination index the partial sum is the full value
    testgen::Gen g(59);
    int done = 0;
    while (done < 40) {
        long n = g.integer(0, 6);
        Rational a = g.rational(), b = g.rational();
        if (pochhammer(b, n + 4).is_zero()) continue;
        SeriesSpecQ s = spec({Rational(-n), a}, {b}, Rational(3));
        CHECK(partial_sum(s, n) == eval_terminating(s));
        CHECK(partial_sum(s, n + 3) == eval_terminating(s));
        ++done;
    }
}

TEST_CASE("pochhammer_reverse_index matches the direct form") {
    testgen::Gen g(61);
    int done = 0;
    while (done < 60) {
        Rational a = g.rational();
        long n = g.integer(0, 8);
        long k = g.integer(0, n);
        if (pochhammer(Rational(1) - a - Rational(n), k).is_zero()) continue;
        CHECK(pochhammer_reverse_index(a, n, k) == pochhammer(a, n - k));
        ++done;
    }
    CHECK_THROWS_AS(pochhammer_reverse_index(Rational(1), 3, 4), Error);
    CHECK_THROWS_AS(pochhammer_reverse_index(Rational(1), 3, -1), Error);
    // (1 - a - n)_k = 0 leaves the quotient form undefined
    CHECK_THROWS_AS(pochhammer_reverse_index(Rational(0), 2, 2), ZeroDenominatorError);
}

TEST_CASE("reversal: 2F1 example") {
    SeriesSpecQ s = spec({Rational(-1), Rational(1)}, {Rational(2)}, Rational(4));
    CHECK(eval_terminating(s) == Rational(-1));
    auto r = reverse(s);
    CHECK(r.prefactor == Rational(-2));
    CHECK(eval_terminating(r.series) == Rational(1, 2));
    CHECK(r.prefactor * eval_terminating(r.series) == eval_terminating(s));
}

TEST_CASE("reversal: binomial example") {
    // 1F0(-3;;2) = (1-2)^3; the prefactor carries (-x)^n = -8
    SeriesSpecQ s = spec({Rational(-3)}, {}, Rational(2));
    auto r = reverse(s);
    CHECK(r.prefactor == Rational(-8));
    CHECK(r.series.argument == Rational(1, 2));
    CHECK(r.prefactor * eval_terminating(r.series) == eval_terminating(s));
}

TEST_CASE("reversal contract on sampled specs") {
    testgen::Gen g(67);
    int done = 0;
    while (done < 120) {
        long n = g.integer(0, 6);
        long p = g.integer(0, 2), q = g.integer(0, 2);
        std::vector<Rational> num = {Rational(-n)}, den;
        for (long j = 0; j < p; ++j) num.push_back(g.rational());
        for (long j = 0; j < q; ++j) den.push_back(g.rational());
        Rational z = g.nonzero(6);
        SeriesSpecQ s = spec(std::move(num), std::move(den), z);
        try {
            Rational value = eval_terminating(s);
            auto r = reverse(s);
            CHECK(r.prefactor * eval_terminating(r.series) == value);
            auto rr = reverse(r.series);
            CHECK(r.prefactor * rr.prefactor * eval_terminating(rr.series) == value);
        } catch (const Error&) {
            continue;  // pole or vanishing Pochhammer: the rewrite is undefined
        }
        ++done;
    }
}

TEST_CASE("double reversal restores generic specs exactly") {
    testgen::Gen g(71);
    for (int i = 0; i < 50; ++i) {
        long n = g.integer(0, 6);
        SeriesSpecQ s;
        s.numerators.push_back(Rational(-n));
        long p = g.integer(0, 2), q = g.integer(0, 2);
        for (long j = 0; j < p; ++j) s.numerators.push_back(g.noninteger());
        for (long j = 0; j < q; ++j) s.denominators.push_back(g.noninteger());
        s.argument = g.nonzero(6);
        auto r = reverse(s);
        auto rr = reverse(r.series);
        CHECK(rr.series == s);
        CHECK(r.prefactor * rr.prefactor == Rational(1));
    }
}

TEST_CASE("reversal preconditions") {
    CHECK_THROWS_AS(reverse(spec({Rational(-2)}, {}, Rational(0))), ZeroArgumentError);
    // (b)_n = 0 for b = -1, n = 2
    CHECK_THROWS_AS(reverse(spec({Rational(-2), Rational(1, 2)}, {Rational(-1)}, Rational(1))),
                    ZeroPochhammerError);
    CHECK_THROWS_AS(reverse(spec({Rational(1, 2)}, {}, Rational(1))), NonTerminatingError);
}

TEST_CASE("chu_vandermonde closed form") {
    CHECK(chu_vandermonde_rhs(2, Rational(1, 2), Rational(3)) == Rational(35, 48));
    CHECK(chu_vandermonde_rhs(0, Rational(9), Rational(4)) == Rational(1));
    CHECK_THROWS_AS(chu_vandermonde_rhs(3, Rational(1), Rational(-1)), ZeroPochhammerError);
    testgen::Gen g(73);
    int done = 0;
    while (done < 100) {
        long n = g.integer(0, 10);
        Rational a = g.rational(), b = g.rational();
        if (pochhammer(b, n).is_zero()) continue;
        CHECK(eval_terminating(spec({Rational(-n), a}, {b}, Rational(1))) ==
              chu_vandermonde_rhs(n, a, b));
        ++done;
    }
}

TEST_CASE("series text round trip") {
    CHECK(series_str(spec({Rational(-2), Rational(1, 2)}, {Rational(3)}, Rational(1))) ==
          "2F1(-2, 1/2; 3; 1)");
    testgen::Gen g(79);
    for (int i = 0; i < 40; ++i) {
        SeriesSpec<RatFun> s;
        long p = g.integer(1, 3), q = g.integer(0, 2);
        for (long j = 0; j < p; ++j) s.numerators.emplace_back(g.rational());
        for (long j = 0; j < q; ++j) s.denominators.emplace_back(g.rational());
        s.argument = RatFun(g.rational()) + RatFun::t();
        CHECK(parse_series(series_str(s)) == s);
    }
    CHECK_THROWS_AS(parse_series("2F1(1; 2; 3)"), ParseError);
    CHECK_THROWS_AS(parse_series("2F1(1, 2; 3; 4) junk"), ParseError);
    CHECK_THROWS_AS(parse_series("not a series"), ParseError);
}
