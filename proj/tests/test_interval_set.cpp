#include "doctest.h"

#include "pdil/errors.hpp"
#include "support.hpp"

using namespace pdil;
using namespace testing;

TEST_SUITE("rational")
{
    TEST_CASE("parse and print")
    {
        CHECK(Rational::parse("3/6") == R(1, 2));
        CHECK(Rational::parse("-7/14").str() == "-1/2");
        CHECK(Rational::parse("+4").str() == "4");
        CHECK(Rational::parse("0/5").str() == "0");
        CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
        CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
        CHECK_THROWS_AS(Rational::parse(""), ParseError);
        CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
    }

    TEST_CASE("floor, ceil, frac")
    {
        CHECK(R(-1, 3).floor() == -1);
        CHECK(R(-1, 3).ceil() == 0);
        CHECK(R(-1, 3).frac() == R(2, 3));
        CHECK(R(7, 2).frac() == R(1, 2));
        CHECK(R(4).frac() == 0);
    }

    TEST_CASE("pow2")
    {
        CHECK(Rational::pow2(0) == 1);
        CHECK(Rational::pow2(10) == 1024);
        CHECK(Rational::pow2(-3) == R(1, 8));
        CHECK(Rational::pow2(-70) * Rational::pow2(70) == 1);
    }
}

TEST_SUITE("interval_set")
{
    TEST_CASE("text form")
    {
        CHECK(S("[0,1/2)u[1/2,1)").str() == "[0,1)");
        CHECK(S("[1/2,1)u[0,1/4)").str() == "[0,1/4)u[1/2,1)");
        CHECK(S("{}").empty());
        CHECK(S("[1,1)").empty());
        CHECK(S(" [ -1/4 , -1/8 ) u [1/8,1/4) ").str() == "[-1/4,-1/8)u[1/8,1/4)");
    }

    TEST_CASE("parse errors carry positions")
    {
        try {
            (void)IntervalSet::parse("[0,1)x[2,3)");
            FAIL("no throw");
        } catch (const ParseError& e) {
            CHECK(e.position() == 5);
        }
        try {
            (void)IntervalSet::parse("[0,1/0)");
            FAIL("no throw");
        } catch (const ParseError& e) {
            CHECK(e.position() >= 3);
        }
        CHECK_THROWS_AS(IntervalSet::parse("[1,0)"), ParseError);
        CHECK_THROWS_AS(IntervalSet::parse(""), ParseError);
        CHECK_THROWS_AS(IntervalSet::parse("[0,1"), ParseError);
    }

    TEST_CASE("set operations agree with pointwise membership")
    {
        for (int trial = 0; trial < 300; ++trial) {
            const auto ra = random_raw(static_cast<std::size_t>(uniform(0, 5)));
            const auto rb = random_raw(static_cast<std::size_t>(uniform(0, 5)));
            const IntervalSet a(ra), b(rb);
            const auto u = unite(a, b), i = intersect(a, b), d = subtract(a, b), x = symmetric_difference(a, b);
            for (const auto& p : probe_points({ra, rb})) {
                const bool in_a = raw_contains(ra, p), in_b = raw_contains(rb, p);
                REQUIRE(contains(a, p) == in_a);
                CHECK(contains(u, p) == (in_a || in_b));
                CHECK(contains(i, p) == (in_a && in_b));
                CHECK(contains(d, p) == (in_a && !in_b));
                CHECK(contains(x, p) == (in_a != in_b));
            }
            CHECK(measure(u) + measure(i) == measure(a) + measure(b));
        }
    }

    TEST_CASE("canonical form is unique")
    {
        for (int trial = 0; trial < 200; ++trial) {
            const auto raw = random_raw(6);
            auto shuffled = raw;
            std::shuffle(shuffled.begin(), shuffled.end(), rng());
            // splitting an interval at an interior point changes nothing
            if (!shuffled.empty() && shuffled[0].lo < shuffled[0].hi) {
                const Rational mid = (shuffled[0].lo + shuffled[0].hi) / 2;
                const Interval whole = shuffled[0];
                shuffled[0] = {whole.lo, mid};
                shuffled.push_back({mid, whole.hi});
            }
            const IntervalSet a(raw), b(shuffled);
            CHECK(a == b);
            CHECK(IntervalSet::parse(a.str()) == a);
            for (std::size_t k = 0; k + 1 < a.size(); ++k)
                CHECK(a.intervals()[k].hi < a.intervals()[k + 1].lo);
        }
    }

    TEST_CASE("mod1 and s")
    {
        CHECK(mod1(S("[-1/8,1/8)")) == S("[0,1/8)u[7/8,1)"));
        CHECK(mod1(S("[-3,5)")) == unit_interval());
        CHECK(mod1_is_injective(S("[-1,-1/2)u[1/2,1)")));
        CHECK_FALSE(mod1_is_injective(S("[0,1/2)u[1,5/4)")));
        CHECK(s_map(S("[0,1/4)u[3/4,1)")) == S("[1/4,3/4)"));
        CHECK_THROWS_AS(s_map(S("[-1,0)")), Error);
    }

    TEST_CASE("mod1 agrees with pointwise reduction")
    {
        for (int trial = 0; trial < 200; ++trial) {
            const auto raw = random_raw(3);
            const IntervalSet m = mod1(IntervalSet(raw));
            for (long q = 1; q <= 24; ++q)
                for (long p = 0; p < q; ++p) {
                    const Rational x(p, q);
                    bool hit = false;
                    for (long k = -3; k <= 3 && !hit; ++k)
                        hit = raw_contains(raw, x + Rational(k));
                    CHECK(contains(m, x) == hit);
                }
        }
    }

    TEST_CASE("affine maps")
    {
        CHECK(dilate(S("[1,2)"), -1) == S("[-2,-1)"));
        CHECK(translate(S("[0,1)u[2,3)"), R(1, 2)) == S("[1/2,3/2)u[5/2,7/2)"));
        CHECK_THROWS_AS(dilate(S("[0,1)"), 0), Error);
        CHECK(dyadic_union(S("[1/2,1)"), 0, 3) == S("[1/2,8)"));
    }

    TEST_CASE("periodize")
    {
        CHECK(periodize(S("[0,1/4)"), -1, 1) == S("[-1,-3/4)u[0,1/4)"));
        CHECK(periodize(S("[3/4,5/4)"), 0, 1) == S("[0,1/4)u[3/4,1)"));
        CHECK(periodize(IntervalSet(), 0, 1).empty());
    }

    TEST_CASE("interior membership")
    {
        const auto a = S("[0,1/2)");
        CHECK(contains(a, 0));
        CHECK_FALSE(contains_interior(a, 0));
        CHECK(contains_interior(a, R(1, 4)));
        CHECK_FALSE(contains(a, R(1, 2)));
    }
}
