#include <doctest.h>

#include <hypcheck/group.hpp>
#include <hypcheck/named.hpp>
#include <hypcheck/recipe.hpp>

#include <string>
#include <vector>

#include "helpers.hpp"

using namespace hypcheck;
using testgen::frac;

TEST_CASE("reference values of the base functions") {
    CHECK(eval_named<Rational>(NamedId::T, 1, {Rational(1), Rational(1), Rational(1)}) ==
          Rational(-1));
    CHECK(eval_named<Rational>(NamedId::T, 2, {frac(1, 3), frac(1, 5), frac(2, 7)}) ==
          frac(9008, 7203));
    CHECK(eval_named<Rational>(NamedId::Ttilde, 2, {frac(1, 3), frac(2, 7)}) ==
          frac(370420, 194481));
    CHECK(eval_named<Rational>(NamedId::Q, 2, {frac(1, 3), frac(2, 7)}) ==
          frac(1967680, 194481));
    CHECK(eval_named<Rational>(NamedId::R, 2, {frac(1, 3), frac(1, 5), frac(2, 7)}) ==
          frac(50276, 36015));
    CHECK(eval_named<Rational>(NamedId::Rtilde, 2, {frac(1, 3), frac(2, 7)}) ==
          frac(325312, 194481));
    CHECK(eval_named<Rational>(NamedId::M, 2, {frac(1, 3), frac(2, 7)}) ==
          frac(465760, 194481));
}

TEST_CASE("reference values of the reparameterized functions") {
    CHECK(eval_named<Rational>(NamedId::U, 1, {frac(1, 2), frac(1, 3), frac(1, 5)}) ==
          frac(167, 720));
    // U is symmetric in its three slots
    CHECK(eval_named<Rational>(NamedId::U, 1, {frac(1, 3), frac(1, 5), frac(1, 2)}) ==
          frac(167, 720));
    CHECK(eval_named<Rational>(NamedId::U, 1, {frac(1, 5), frac(1, 2), frac(1, 3)}) ==
          frac(167, 720));
    CHECK(eval_named<Rational>(NamedId::W, 2, {frac(1, 3), frac(1, 5)}) ==
          frac(-1051739, 810000));
    CHECK(eval_named<Rational>(NamedId::L, 2, {frac(1, 3), frac(1, 5)}) ==
          frac(-441779, 810000));
}

TEST_CASE("reparameterized functions factor through their base") {
    testgen::Gen g(83);
    for (const auto& f : named_functions()) {
        if (!f.base) continue;
        int done = 0;
        while (done < 25) {
            long n = g.integer(0, 5);
            std::vector<Rational> params;
            for (int i = 0; i < f.arity(); ++i) params.push_back(g.rational(8));
            std::vector<Rational> mapped = f.reparam->apply<Rational>(params, n);
            try {
                Rational direct = eval_named<Rational>(f.id, n, params);
                Rational through = eval_named<Rational>(*f.base, n, mapped);
                CHECK(direct == through);
                ++done;
            } catch (const Error&) {
                // degenerate draw: a pole or vanishing Pochhammer
            }
        }
    }
}

TEST_CASE("relation maps leave the family value unchanged") {
    testgen::Gen g(89);
    for (const auto& fam : families()) {
        const NamedFunction& f = named(fam.fn);
        for (const auto& rel : fam.relations) {
            const Side mapped_side = f.side.substituted(rel);
            int done = 0;
            while (done < 10) {
                long n = g.integer(0, 4);
                std::vector<Rational> params;
                for (int i = 0; i < f.arity(); ++i) params.push_back(g.rational(8));
                if (side_guard_violation<Rational>(f.side, params, n, f.param_names) ||
                    side_guard_violation<Rational>(mapped_side, params, n, f.param_names))
                    continue;
                CHECK(eval_named<Rational>(fam.fn, n, params) ==
                      eval_named<Rational>(fam.fn, n, rel.apply<Rational>(params, n)));
                ++done;
            }
        }
    }
}

TEST_CASE("lookup and shape") {
    CHECK(find_named("T") == &named(NamedId::T));
    CHECK(find_named("Ttilde")->id == NamedId::Ttilde);
    CHECK(find_named("nope") == nullptr);
    for (const auto& f : named_functions()) CHECK(&named(f.id) == &f);
    CHECK(named(NamedId::U).base == NamedId::T);
    CHECK(named(NamedId::Utilde).base == NamedId::Ttilde);
    CHECK(named(NamedId::V).base == NamedId::R);
    CHECK(named(NamedId::Vtilde).base == NamedId::Rtilde);
    CHECK(named(NamedId::W).base == NamedId::Q);
    CHECK(named(NamedId::L).base == NamedId::M);
    CHECK(!named(NamedId::T).base);
    CHECK(!named(NamedId::Q).reparam);
    std::vector<std::string> xy = {"x", "y"};
    CHECK(named(NamedId::W).param_names == xy);
    CHECK(named(NamedId::T).arity() == 3);
    CHECK(named(NamedId::Rtilde).arity() == 2);
    CHECK(eval_named<Rational>(NamedId::T, 0, {Rational(9), Rational(9), Rational(9)}) ==
          Rational(1));
}
