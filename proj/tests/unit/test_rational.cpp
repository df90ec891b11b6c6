#include <doctest.h>

#include <hypcheck/rational.hpp>

#include <algorithm>
#include <vector>

#include "helpers.hpp"

using hypcheck::BigInt;
using hypcheck::Rational;

TEST_CASE("rationals reduce to canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(2, 4).num() == 1);
    CHECK(Rational(2, 4).den() == 2);
    CHECK(Rational(1, -2).num() == -1);
    CHECK(Rational(1, -2).den() == 2);
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, 7).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), hypcheck::ZeroDenominatorError);
}

TEST_CASE("field axioms hold on sampled triples") {
    testgen::Gen g(101);
    for (int i = 0; i < 200; ++i) {
        Rational a = g.rational(), b = g.rational(), c = g.rational();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Rational(0) == a);
        CHECK(a * Rational(1) == a);
        CHECK(a - a == Rational(0));
        if (!b.is_zero()) {
            CHECK((a / b) * b == a);
            CHECK(b * b.pow(-1) == Rational(1));
        }
    }
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(Rational(3) / Rational(0), hypcheck::ZeroDenominatorError);
    CHECK_THROWS_AS(Rational(0).pow(-1), hypcheck::ZeroDenominatorError);
}

TEST_CASE("pow") {
    Rational x(2, 3);
    CHECK(x.pow(0) == Rational(1));
    CHECK(x.pow(3) == Rational(8, 27));
    CHECK(x.pow(-2) == Rational(9, 4));
    CHECK(Rational(0).pow(0) == Rational(1));
    CHECK(Rational(0).pow(4) == Rational(0));
    testgen::Gen g(7);
    for (int i = 0; i < 50; ++i) {
        Rational a = g.nonzero();
        long j = g.integer(-5, 5), k = g.integer(-5, 5);
        CHECK(a.pow(j + k) == a.pow(j) * a.pow(k));
    }
}

TEST_CASE("ordering is total and consistent") {
    std::vector<Rational> v = {Rational(1, 2), Rational(-1),   Rational(0),
                               Rational(2),    Rational(1, 3), Rational(-1, 2)};
    std::sort(v.begin(), v.end());
    std::vector<Rational> want = {Rational(-1),   Rational(-1, 2), Rational(0),
                                  Rational(1, 3), Rational(1, 2),  Rational(2)};
    CHECK(v == want);
    CHECK(Rational(1, 3) <= Rational(1, 3));
    CHECK(Rational(5, 7) > Rational(2, 3));
    CHECK(Rational(-5, 7) < Rational(-2, 3));
}

TEST_CASE("predicates and text form") {
    CHECK(Rational(3, 2).str() == "3/2");
    CHECK(Rational(-7).str() == "-7");
    CHECK(Rational(0).str() == "0");
    CHECK(Rational(-4, 6).str() == "-2/3");
    CHECK(Rational(6, 3).is_integer());
    CHECK(*Rational(6, 3).as_integer() == 2);
    CHECK(!Rational(1, 2).as_integer());
    CHECK(Rational(1).is_one());
    CHECK(!Rational(1, 2).is_one());
    CHECK(Rational(-5).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(1, 9).sign() == 1);
}

TEST_CASE("factorial") {
    CHECK(hypcheck::factorial(0) == 1);
    CHECK(hypcheck::factorial(1) == 1);
    CHECK(hypcheck::factorial(5) == 120);
    CHECK(hypcheck::factorial(20) == BigInt("2432902008176640000"));
    CHECK(hypcheck::factorial(25) == BigInt("15511210043330985984000000"));
}
