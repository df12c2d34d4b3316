#include "doctest.h"

#include "pdil/errors.hpp"
#include "pdil/filter_builder.hpp"
#include "pdil/wavelet_core.hpp"
#include "support.hpp"

using namespace pdil;
using namespace testing;

namespace {

IntervalSet haar_P(const Rational& a)
{
    return unite(IntervalSet(-2 * a, -a), IntervalSet(a, 2 * a));
}

/// Exactly one of x and x + 1/2 lies in M, sampled on a grid.
bool qmf_by_sampling(const IntervalSet& M)
{
    for (long q = 1; q <= 64; ++q)
        for (long p = 0; 2 * p < q; ++p) {
            const Rational x(p, q);
            if (contains(M, x) == contains(M, x + Rational(1, 2)))
                return false;
        }
    return true;
}

/// Random s-simple selection covering the undecided zone U.
IntervalSet random_completion(const IntervalSet& U)
{
    const IntervalSet low = intersect(U, IntervalSet(0, Rational(1, 2)));
    std::vector<Interval> pieces;
    for (const auto& iv : low.intervals()) {
        std::vector<Rational> cuts{iv.lo, iv.hi};
        for (int k = uniform(0, 3); k > 0; --k)
            cuts.push_back(random_rational(iv.lo, iv.hi, 200));
        std::sort(cuts.begin(), cuts.end());
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
            pieces.push_back({cuts[i], cuts[i + 1]});
    }
    std::vector<IntervalSet> chosen;
    for (const auto& pc : pieces) {
        const IntervalSet piece(pc.lo, pc.hi);
        chosen.push_back(uniform(0, 1) ? piece : s_map(piece));
    }
    return unite_all(chosen);
}

void check_filter(const IntervalSet& F, const FilterSet& f)
{
    CHECK(measure(f.M) == Rational(1, 2));
    CHECK(is_qmf(f.M));
    CHECK(qmf_by_sampling(f.M));
    CHECK(unite(f.M, s_map(f.M)) == unit_interval());
    CHECK(disjoint(f.M, s_map(f.M)));
    CHECK(dilate(F, Rational(1, 2)) == intersect(F, periodize(f.M, F.inf(), F.sup())));
}

} // namespace

TEST_SUITE("wavelet_core")
{
    TEST_CASE("Shannon set is an orthonormal wavelet set")
    {
        const auto r = verify_wavelet_set(shannon_set());
        CHECK(r.is_multiplicative_tile);
        CHECK(r.is_translation_simple);
        CHECK(r.covers_line);
        CHECK(r.is_parseval);
        CHECK(r.is_orthonormal);
    }

    TEST_CASE("stretched Haar family is Parseval but not orthonormal")
    {
        for (const Rational a : {R(1, 4), R(1, 8), R(1, 16), R(3, 32), R(1, 5)}) {
            const auto r = verify_wavelet_set(haar_P(a));
            CHECK(r.is_parseval);
            CHECK_FALSE(r.is_orthonormal);
        }
    }

    TEST_CASE("failures are reported")
    {
        const auto overlap = verify_wavelet_set(S("[0,2)"));
        CHECK_FALSE(overlap.is_multiplicative_tile);
        CHECK_FALSE(overlap.is_parseval);
        const auto not_simple = verify_wavelet_set(S("[-1/2,-1/4)u[1,2)"));
        CHECK(not_simple.is_multiplicative_tile);
        CHECK_FALSE(not_simple.is_translation_simple);
        CHECK_FALSE(not_simple.is_parseval);
        const auto gap = verify_wavelet_set(S("[-1,-1/2)u[1/2,3/4)"));
        CHECK_FALSE(gap.covers_line);
    }

    TEST_CASE("separation exponent")
    {
        CHECK(separation_exponent(R(1, 8), R(1, 4)) == 1);
        CHECK(separation_exponent(R(1, 8), R(1, 3)) == 2);
        CHECK(separation_exponent(R(1), R(1, 2)) == 1);
    }

    TEST_CASE("scaling set of the stretched Haar family")
    {
        for (const Rational a : {R(1, 4), R(1, 8), R(1, 16)}) {
            const auto d = scaling_set(haar_P(a));
            CHECK(d.F == IntervalSet(-a, a));
            CHECK(d.F_is_translation_simple);
        }
        CHECK(scaling_set(shannon_set()).F == S("[-1/2,1/2)"));
        CHECK_THROWS_AS(scaling_set(S("[0,2)")), Error);
    }

    TEST_CASE("scaling set against a truncated dyadic union")
    {
        for (int trial = 0; trial < 50; ++trial) {
            const Rational a = random_rational(R(1, 64), R(1, 4), 64);
            const Rational b = random_rational(R(1, 64), R(1, 4), 64);
            const IntervalSet F(-a, b);
            const IntervalSet P = subtract(dilate(F, 2), F);
            REQUIRE(verify_wavelet_set(P).is_parseval);
            const auto d = scaling_set(P);
            CHECK(d.F == F);
            // ∪_{1≤j≤40} 2^{-j}P misses only a tiny neighborhood of 0
            const IntervalSet partial = dyadic_union(P, -40, -1);
            CHECK(subset(partial, d.F));
            CHECK(subset(subtract(d.F, partial), IntervalSet(-Rational::pow2(-40), Rational::pow2(-40))));
        }
    }

    TEST_CASE("semi-orthogonal complement")
    {
        const auto c = semiorthogonal_complement(haar_P(R(1, 8)));
        CHECK(c.report.E == S("[1/8,1/4)u[3/4,7/8)"));
        CHECK(disjoint(c.report.E, c.report.F_prime_mod1));
        CHECK(unite(c.report.E, c.report.F_prime_mod1) == unit_interval());
        CHECK(mod1_is_injective(c.F_prime));
        CHECK(subset(c.F_prime, shannon_set()));
        CHECK(c.report.translation_tiling);
        CHECK(c.report.dilates_disjoint);
        for (long j = 1; j <= 16; ++j)
            CHECK(disjoint(c.F_prime, dilate(c.F_prime, Rational::pow2(j))));
        CHECK(c.report.total_measure == 1);

        const auto none = semiorthogonal_complement(shannon_set());
        CHECK(none.F_prime.empty());
    }
}

TEST_SUITE("filter_builder")
{
    TEST_CASE("forced parts and default completion")
    {
        const auto f = build_filter(S("[-1/8,1/8)"), DStrategy::lower_half());
        CHECK(f.tau_F_half == S("[0,1/16)u[15/16,1)"));
        CHECK(f.C == S("[3/8,7/16)u[9/16,5/8)"));
        CHECK(f.undecided == S("[1/8,3/8)u[5/8,7/8)"));
        CHECK(f.D == S("[1/8,3/8)"));
        check_filter(S("[-1/8,1/8)"), f);
    }

    TEST_CASE("explicit completions")
    {
        const auto two = build_filter(S("[-1/8,1/8)"), DStrategy::explicit_set(S("[1/4,3/8)u[5/8,3/4)")));
        CHECK(two.M == S("[0,1/16)u[1/4,7/16)u[9/16,3/4)u[15/16,1)"));
        const auto three = build_filter(S("[-1/8,1/8)"), DStrategy::explicit_set(S("[1/8,3/8)")));
        CHECK(three.M == S("[0,1/16)u[1/8,7/16)u[9/16,5/8)u[15/16,1)"));
        const auto shannon = build_filter(S("[-1/2,1/2)"), DStrategy::lower_half());
        CHECK(shannon.M == S("[0,1/4)u[3/4,1)"));
    }

    TEST_CASE("invalid completions name the offending part")
    {
        const IntervalSet F = S("[-1/8,1/8)");
        try {
            (void)build_filter(F, DStrategy::explicit_set(S("[1/8,1/4)")));
            FAIL("no throw");
        } catch (const InvalidCompletion& e) {
            CHECK(e.offending() == S("[1/4,3/8)u[3/4,7/8)"));
        }
        try {
            (void)build_filter(F, DStrategy::explicit_set(S("[1/8,3/8)u[5/8,3/4)")));
            FAIL("no throw");
        } catch (const InvalidCompletion& e) {
            CHECK_FALSE(e.offending().empty());
        }
        CHECK_THROWS_AS(build_filter(F, DStrategy::explicit_set(S("[0,1/4)"))), InvalidCompletion);
    }

    TEST_CASE("random completions are QMF")
    {
        int count = 0;
        while (count < 100) {
            const Rational a = random_rational(R(1, 64), R(1, 4), 64);
            const Rational b = uniform(0, 1) ? a : random_rational(R(1, 64), R(1, 4), 64);
            const IntervalSet F(-a, b);
            const IntervalSet U = undecided_zone(F);
            CHECK(s_map(U) == U);
            const auto f = build_filter(F, DStrategy::explicit_set(random_completion(U)));
            check_filter(F, f);
            check_filter(F, build_filter(F, DStrategy::lower_half()));
            ++count;
        }
    }

    TEST_CASE("cycle-seeded filters keep the cycle inside M")
    {
        for (const char* w : {"10", "100", "110", "1001100", "10011001100"}) {
            const auto f = build_cycle_filter(R(1, 32), w);
            check_filter(IntervalSet(R(-1, 32), R(1, 32)), f);
            const Cycle cycle(w);
            for (const auto& th : cycle.points())
                CHECK(contains_interior(f.M, th));
        }
        int built = 0;
        for (int trial = 0; trial < 60; ++trial) {
            const Word w = random_cycle_word(8);
            try {
                const auto f = build_cycle_filter(R(1, 64), w);
                check_filter(IntervalSet(R(-1, 64), R(1, 64)), f);
                ++built;
            } catch (const Error& e) {
                // some cycle point sits outside the undecided zone
                CHECK(e.kind() == ErrorKind::Precondition);
            }
        }
        CHECK(built >= 20);
        CHECK_THROWS_AS(build_cycle_filter(R(1, 32), "0000000"), Error);
        CHECK_THROWS_AS(build_cycle_filter(R(1, 8), "10"), Error);
    }

    TEST_CASE("aperiodic prefix")
    {
        const Word eta = alternating_block_word(40);
        CHECK(eta.substr(0, 14) == "01100101100101");
        const auto r = build_aperiodic_filter_prefix(eta, 3, 20);
        CHECK(r.images.size() == 20);
        CHECK(r.pairwise_disjoint);
        CHECK(r.s_simple);
        CHECK(r.min_distance > 0);
        for (std::size_t i = 0; i < r.images.size(); ++i)
            for (std::size_t j = i + 1; j < r.images.size(); ++j)
                CHECK(disjoint(r.images[i], r.images[j]));
        CHECK(disjoint(r.S, s_map(r.S)));
        CHECK(r.I == IntervalSet(R(1, 2) + Rational::pow2(-5), R(1, 2) + Rational::pow2(-5) + Rational::pow2(-6)));

        const auto one = build_aperiodic_filter_prefix("1", 3, 1);
        CHECK(one.pairwise_disjoint);
        CHECK(one.s_simple);
        CHECK_THROWS_AS(build_aperiodic_filter_prefix("0001", 3, 4), Error);
    }

    TEST_CASE("induced filter contains the prefix set")
    {
        const auto r = build_aperiodic_filter_prefix(alternating_block_word(20), 3, 20);
        const auto f = induced_filter(r.S);
        CHECK(subset(r.S, f.M));
        CHECK(measure(f.M) == Rational(1, 2));
        CHECK(qmf_by_sampling(f.M));
        CHECK(contains_interior(f.M, Rational(1, 1024)));
        CHECK(contains(f.M, Rational(1023, 1024)));
    }
}
