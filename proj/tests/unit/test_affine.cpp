#include <doctest.h>

#include <hypcheck/affine.hpp>
#include <hypcheck/group.hpp>
#include <hypcheck/named.hpp>

#include <string>
#include <vector>

#include "helpers.hpp"

using namespace hypcheck;

namespace {

AffineExpr random_expr(testgen::Gen& g, int arity) {
    AffineExpr e = AffineExpr::constant(arity, g.rational(4));
    for (int i = 0; i < arity; ++i) e = e + g.rational(4) * AffineExpr::param(arity, i);
    return e + AffineExpr::n_term(arity, g.rational(4));
}

} // namespace

TEST_CASE("expression evaluation") {
    const int k = 3;
    AffineExpr e = AffineExpr::constant(k, Rational(1)) + AffineExpr::param(k, 0) -
                   AffineExpr::param(k, 2) + AffineExpr::n_term(k, Rational(-2));
    std::vector<Rational> p = {Rational(5), Rational(7), Rational(1, 2)};
    CHECK(e.evaluate<Rational>(p, 3) == Rational(-1, 2));
    CHECK(e.arity() == 3);
    CHECK(!e.is_constant());
    CHECK(AffineExpr::constant(k, Rational(4)).is_constant());
    std::vector<Rational> wrong = {Rational(1)};
    CHECK_THROWS_AS(e.evaluate<Rational>(wrong, 0), ArityMismatchError);
}

TEST_CASE("substitution commutes with evaluation") {
    testgen::Gen g(43);
    for (int it = 0; it < 50; ++it) {
        AffineExpr e = random_expr(g, 3);
        AffineMap m({random_expr(g, 3), random_expr(g, 3), random_expr(g, 3)});
        std::vector<Rational> p = {g.rational(), g.rational(), g.rational()};
        long n = g.integer(0, 6);
        CHECK(e.substitute(m).evaluate<Rational>(p, n) ==
              e.evaluate<Rational>(m.apply<Rational>(p, n), n));
    }
}

TEST_CASE("compose applies the right factor first") {
    const int k = 1;
    AffineMap add1({AffineExpr::param(k, 0) + Rational(1)});
    AffineMap dbl({Rational(2) * AffineExpr::param(k, 0)});
    std::vector<Rational> x = {Rational(5)};
    CHECK(compose(add1, dbl).apply<Rational>(x, 0)[0] == Rational(11));
    CHECK(compose(dbl, add1).apply<Rational>(x, 0)[0] == Rational(12));
}

TEST_CASE("composition is associative on the relation maps") {
    const auto& rel = family_data(Family::T).relations;
    for (const auto& f : rel)
        for (const auto& g : rel)
            for (const auto& h : rel)
                CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
}

TEST_CASE("inverse") {
    for (const auto& fam : families()) {
        const AffineMap id = AffineMap::identity(fam.relations.front().in_arity());
        for (const auto& m : fam.relations) {
            CHECK(compose(m, m.inverse()) == id);
            CHECK(compose(m.inverse(), m) == id);
        }
    }
    AffineMap shiftn({AffineExpr::param(1, 0) + AffineExpr::n_term(1, Rational(3)) + Rational(1)});
    CHECK(compose(shiftn, shiftn.inverse()) == AffineMap::identity(1));
    const int k = 2;
    AffineMap squash({AffineExpr::param(k, 0), AffineExpr::param(k, 0)});
    CHECK_THROWS_AS(squash.inverse(), Error);
}

TEST_CASE("permutation semantics: output slot i reads input image[i]") {
    AffineMap swap = AffineMap::permutation({1, 0});
    std::vector<Rational> p = {Rational(3), Rational(4)};
    auto out = swap.apply<Rational>(p, 0);
    CHECK(out[0] == Rational(4));
    CHECK(out[1] == Rational(3));
    AffineMap cyc = AffineMap::permutation({2, 0, 1});
    std::vector<Rational> q = {Rational(1), Rational(2), Rational(3)};
    auto out3 = cyc.apply<Rational>(q, 0);
    CHECK(out3 == std::vector<Rational>{Rational(3), Rational(1), Rational(2)});
    CHECK(compose(cyc, compose(cyc, cyc)) == AffineMap::identity(3));
}

TEST_CASE("map construction validates arity") {
    CHECK_THROWS_AS(AffineMap(std::vector<AffineExpr>{}), ArityMismatchError);
    CHECK_THROWS_AS(AffineMap({AffineExpr::param(2, 0), AffineExpr::param(3, 0)}),
                    ArityMismatchError);
}

TEST_CASE("rendering") {
    const std::vector<std::string> abc = {"a", "b", "c"};
    const auto& t3 = family_data(Family::T).relations[2];
    CHECK(t3.str(abc) == "(-b + c - n, -a + c - n, c)");
    const std::vector<std::string> xyz = {"x", "y", "z"};
    CHECK(named(NamedId::U).reparam->row(1).str(xyz) == "(1 + 3*x - y - z - 2*n)/2");
    const std::vector<std::string> one = {"a"};
    CHECK(AffineExpr::constant(1, Rational(0)).str(one) == "0");
    CHECK((Rational(1, 2) * AffineExpr::param(1, 0)).str(one) == "a/2");
    CHECK_THROWS_AS(t3.str(one), ArityMismatchError);
}
