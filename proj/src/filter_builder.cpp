#include "pdil/filter_builder.hpp"

#include <algorithm>

namespace pdil {

namespace {

const Rational kHalf(1, 2);

IntervalSet lower_half()
{
    return IntervalSet(0, kHalf);
}

// Throws InvalidCompletion unless D completes `base` to an s-tile of [0,1).
void validate_completion(const IntervalSet& base, const IntervalSet& undecided, const IntervalSet& D)
{
    const IntervalSet outside = subtract(D, unit_interval());
    if (!outside.empty())
        throw InvalidCompletion("completion leaves [0,1)", outside);
    const IntervalSet forced = unite(base, s_map(base));
    const IntervalSet clash = intersect(D, forced);
    if (!clash.empty())
        throw InvalidCompletion("completion overlaps the forced part of the filter", clash);
    const IntervalSet self = intersect(D, s_map(D));
    if (!self.empty())
        throw InvalidCompletion("completion is not s-simple", self);
    const IntervalSet missing = subtract(undecided, unite(D, s_map(D)));
    if (!missing.empty())
        throw InvalidCompletion("completion leaves part of the undecided zone open", missing);
}

struct MainPoint {
    Rational x;
    bool on_cycle;
};

// Splits each component of the undecided zone into cells around the main
// points (cycle points and their supplements) and keeps the cells of cycle
// points; components free of main points contribute their part in [0,1/2).
IntervalSet cycle_seeded_completion(const IntervalSet& undecided, const Cycle& cycle)
{
    std::vector<MainPoint> mains;
    for (const auto& th : cycle.points()) {
        if (!contains_interior(undecided, th))
            throw Error(ErrorKind::Precondition,
                        "cycle point " + th.str() + " is not interior to the undecided zone " + undecided.str());
        mains.push_back({th, true});
    }
    for (const auto& th : cycle.points()) {
        const Rational sup = (th + kHalf).frac();
        if (std::any_of(cycle.points().begin(), cycle.points().end(), [&](const Rational& c) { return c == sup; }))
            throw Error(ErrorKind::Precondition, "supplement " + sup.str() + " coincides with a cycle point");
        mains.push_back({sup, false});
    }
    std::sort(mains.begin(), mains.end(), [](const MainPoint& a, const MainPoint& b) { return a.x < b.x; });

    std::vector<Interval> cells;
    std::size_t m = 0;
    for (const auto& comp : undecided.intervals()) {
        const std::size_t first = m;
        while (m < mains.size() && mains[m].x < comp.hi)
            ++m;
        if (first == m) {
            cells.push_back({comp.lo, min(comp.hi, kHalf)});
            continue;
        }
        for (std::size_t i = first; i < m; ++i) {
            if (!mains[i].on_cycle)
                continue;
            const Rational lo = i == first ? comp.lo : (mains[i - 1].x + mains[i].x) / 2;
            const Rational hi = i + 1 == m ? comp.hi : (mains[i].x + mains[i + 1].x) / 2;
            cells.push_back({lo, hi});
        }
    }
    return IntervalSet(std::move(cells));
}

} // namespace

bool is_qmf(const IntervalSet& M)
{
    if (!subset(M, unit_interval()))
        return false;
    const IntervalSet sM = s_map(M);
    return disjoint(M, sM) && unite(M, sM) == unit_interval();
}

namespace {

struct ForcedParts {
    IntervalSet tau_F_half;
    IntervalSet C;
    IntervalSet base;
    IntervalSet undecided;
};

ForcedParts forced_parts(const IntervalSet& F)
{
    if (F.empty())
        throw Error(ErrorKind::Precondition, "empty scaling set");
    if (!mod1_is_injective(F))
        throw Error(ErrorKind::Precondition, "scaling set " + F.str() + " is not translation simple");
    const IntervalSet F_half = dilate(F, kHalf);
    if (!subset(F_half, F))
        throw Error(ErrorKind::Precondition, "scaling set " + F.str() + " does not contain F/2");

    ForcedParts out;
    out.tau_F_half = mod1(F_half);
    out.C = s_map(subtract(mod1(F), out.tau_F_half));
    out.base = unite(out.C, out.tau_F_half);
    const IntervalSet s_base = s_map(out.base);
    const IntervalSet clash = intersect(out.base, s_base);
    if (!clash.empty())
        throw InvalidCompletion("forced part of the filter is not s-simple", clash);
    out.undecided = subtract(unit_interval(), unite(out.base, s_base));
    return out;
}

} // namespace

IntervalSet undecided_zone(const IntervalSet& F)
{
    return forced_parts(F).undecided;
}

FilterSet build_filter(const IntervalSet& F, const DStrategy& strategy)
{
    const ForcedParts parts = forced_parts(F);

    IntervalSet D;
    switch (strategy.kind) {
    case DStrategy::Kind::LowerHalf:
        D = intersect(parts.undecided, lower_half());
        break;
    case DStrategy::Kind::ExplicitSet:
        D = strategy.D;
        break;
    case DStrategy::Kind::CycleSeeded:
        D = cycle_seeded_completion(parts.undecided, Cycle(strategy.cycle_word));
        break;
    }
    validate_completion(parts.base, parts.undecided, D);

    FilterSet out;
    out.M = unite(parts.base, D);
    out.tau_F_half = parts.tau_F_half;
    out.C = parts.C;
    out.D = D;
    out.undecided = parts.undecided;
    if (!is_qmf(out.M))
        throw Error(ErrorKind::Internal, "constructed filter " + out.M.str() + " is not QMF");
    if (dilate(F, kHalf) != intersect(F, periodize(out.M, F.inf(), F.sup())))
        throw Error(ErrorKind::Internal, "scaling identity F/2 = F ∩ Per(M) fails for " + out.M.str());
    return out;
}

FilterSet build_cycle_filter(const Rational& a, const Word& cycle_word)
{
    if (!(a.sign() > 0 && a < Rational(1, 16)))
        throw Error(ErrorKind::Precondition, "parameter a = " + a.str() + " outside (0, 1/16)");
    check_binary(cycle_word);
    if (cycle_word.find('0') == Word::npos || cycle_word.find('1') == Word::npos)
        throw Error(ErrorKind::Precondition, "cycle word '" + cycle_word + "' must contain both digits");

    FilterSet out = build_filter(IntervalSet(-a, a), DStrategy::cycle_seeded(cycle_word));
    const Cycle cycle(cycle_word);
    for (const auto& th : cycle.points())
        if (!contains_interior(out.M, th))
            throw Error(ErrorKind::Internal, "cycle point " + th.str() + " not interior to M");
    return out;
}

Rational distance(const Rational& x, const IntervalSet& a)
{
    if (a.empty())
        throw Error(ErrorKind::Precondition, "distance to empty set");
    Rational best = (x - a.inf()).abs();
    for (const auto& iv : a.intervals()) {
        if (iv.lo <= x && x <= iv.hi)
            return 0;
        best = min(best, min((x - iv.lo).abs(), (x - iv.hi).abs()));
    }
    return best;
}

AperiodicPrefix build_aperiodic_filter_prefix(const Word& eta, long p, long N)
{
    check_binary(eta);
    if (p < 2)
        throw Error(ErrorKind::Precondition, "p must be at least 2");
    if (N < 1 || static_cast<std::size_t>(N) > eta.size())
        throw Error(ErrorKind::Precondition,
                    "prefix of length " + std::to_string(eta.size()) + " cannot supply N = " + std::to_string(N));
    for (std::size_t i = 0; i < eta.size();) {
        std::size_t j = i;
        while (j < eta.size() && eta[j] == eta[i])
            ++j;
        if (static_cast<long>(j - i) >= p)
            throw Error(ErrorKind::Precondition, "run of " + std::to_string(j - i) + " '" + eta[i]
                                                     + "' at position " + std::to_string(i) + " reaches p = "
                                                     + std::to_string(p));
        i = j;
    }

    AperiodicPrefix out;
    const Rational lo = kHalf + Rational::pow2(-(p + 2));
    out.I = IntervalSet(lo, lo + Rational::pow2(-(p + 3)));
    IntervalSet cur = out.I;
    for (long n = 0; n < N; ++n) {
        cur = affine(cur, kHalf, Rational(eta[n] - '0', 2));
        out.images.push_back(cur);
    }
    out.S = unite_all(out.images);

    out.pairwise_disjoint = true;
    for (std::size_t i = 0; i < out.images.size() && out.pairwise_disjoint; ++i)
        for (std::size_t j = i + 1; j < out.images.size() && out.pairwise_disjoint; ++j)
            out.pairwise_disjoint = disjoint(out.images[i], out.images[j]);
    out.s_simple = disjoint(out.S, s_map(out.S));
    out.min_distance = min(distance(0, out.S), min(distance(kHalf, out.S), distance(1, out.S)));
    return out;
}

Word alternating_block_word(std::size_t length)
{
    Word out;
    for (std::size_t k = 1; out.size() < length; ++k) {
        for (std::size_t i = 0; i < k; ++i)
            out += "01";
        out += "10";
    }
    out.resize(length);
    return out;
}

FilterSet induced_filter(const IntervalSet& S)
{
    const Rational gap = min(distance(0, S), min(distance(kHalf, S), distance(1, S)));
    if (gap.sign() <= 0)
        throw Error(ErrorKind::Precondition, "set touches 0, 1/2 or 1");
    if (!disjoint(S, s_map(S)))
        throw InvalidCompletion("seed set is not s-simple", intersect(S, s_map(S)));
    Rational eps(1, 4);
    while (eps * 2 > gap)
        eps /= 2;

    const IntervalSet base = unite(S, unite(IntervalSet(0, eps), IntervalSet(1 - eps, 1)));
    const IntervalSet undecided = subtract(unit_interval(), unite(base, s_map(base)));
    FilterSet out;
    out.D = intersect(undecided, lower_half());
    out.M = unite(base, out.D);
    out.C = S;
    out.tau_F_half = unite(IntervalSet(0, eps), IntervalSet(1 - eps, 1));
    out.undecided = undecided;
    if (!is_qmf(out.M))
        throw Error(ErrorKind::Internal, "induced filter is not QMF");
    return out;
}

} // namespace pdil
