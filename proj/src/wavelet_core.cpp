#include "pdil/wavelet_core.hpp"

#include "pdil/errors.hpp"

namespace pdil {

Rational distance_to_zero(const IntervalSet& a)
{
    if (a.empty())
        throw Error(ErrorKind::Precondition, "distance to zero of empty set");
    Rational best = max_modulus(a);
    for (const auto& iv : a.intervals()) {
        if (iv.lo <= 0 && iv.hi >= 0)
            return 0;
        best = min(best, iv.lo > 0 ? iv.lo : -iv.hi);
    }
    return best;
}

Rational max_modulus(const IntervalSet& a)
{
    if (a.empty())
        throw Error(ErrorKind::Precondition, "modulus bound of empty set");
    return max(a.inf().abs(), a.sup().abs());
}

long separation_exponent(const Rational& delta, const Rational& width)
{
    long d = 1;
    if (delta.sign() <= 0)
        return d;
    Rational scaled = delta * 2;
    while (scaled < width) {
        scaled *= 2;
        ++d;
    }
    return d;
}

WaveletSetReport verify_wavelet_set(const IntervalSet& P, long j_window)
{
    if (P.empty() || measure(P).sign() == 0)
        throw Error(ErrorKind::Precondition, "wavelet set candidate is empty");
    if (j_window < 1)
        throw Error(ErrorKind::Precondition, "j_window must be positive");

    WaveletSetReport r;
    r.j_window = j_window;
    r.delta = distance_to_zero(P);
    r.width = max_modulus(P);
    r.disjointness_bound = separation_exponent(r.delta, r.width);

    r.dilates_disjoint = true;
    for (long d = 1; d <= r.disjointness_bound && r.dilates_disjoint; ++d)
        r.dilates_disjoint = disjoint(P, dilate(P, Rational::pow2(d)));

    // Any x with 2^{-W} w ≤ |x| ≤ 2^W δ needs a dilate 2^j P with |j| ≤ W.
    const Rational lo = Rational::pow2(-j_window) * r.width;
    const Rational hi = Rational::pow2(j_window) * (r.delta.sign() > 0 ? r.delta : r.width);
    const IntervalSet window = unite(IntervalSet(-hi, -lo), IntervalSet(lo, hi));
    r.covers_line = subset(window, dyadic_union(P, -j_window, j_window));
    r.coverage_certified = r.delta.sign() > 0 && hi >= lo * 2;

    r.is_multiplicative_tile = r.dilates_disjoint && r.covers_line && r.coverage_certified;
    r.is_translation_simple = mod1_is_injective(P);
    r.is_parseval = r.is_multiplicative_tile && r.is_translation_simple;
    r.is_orthonormal = r.is_parseval && measure(P) == 1;
    return r;
}

ScalingData scaling_set(const IntervalSet& P, long max_iter)
{
    const auto report = verify_wavelet_set(P);
    if (!report.is_parseval)
        throw Error(ErrorKind::Precondition, "not a Parseval wavelet set: " + P.str());

    const Rational half(1, 2);
    const IntervalSet P_half = dilate(P, half);
    // Every point of (-δ, δ) lies in some 2^{-j} P with j ≥ 1, so the chain of
    // dilates accumulating at 0 closes up to this interval.
    const IntervalSet core(-report.delta, report.delta);

    IntervalSet Fk = P_half;
    for (long k = 0; k < max_iter; ++k) {
        const IntervalSet candidate = unite(Fk, core);
        if (unite(dilate(candidate, half), P_half) == candidate) {
            ScalingData out;
            out.F = candidate;
            out.P = P;
            out.F_is_translation_simple = mod1_is_injective(candidate);
            out.iterations = k + 1;
            if (subtract(dilate(candidate, 2), candidate) != P)
                throw Error(ErrorKind::Internal, "scaling set does not reproduce P = 2F \\ F");
            return out;
        }
        Fk = unite(dilate(Fk, half), P_half);
    }
    throw Error(ErrorKind::NonClosingScalingSet,
                "scaling set iteration for " + P.str() + " did not close within "
                    + std::to_string(max_iter) + " steps");
}

IntervalSet shannon_set()
{
    return IntervalSet({{-1, Rational(-1, 2)}, {Rational(1, 2), 1}});
}

Complement semiorthogonal_complement(const IntervalSet& P, const IntervalSet& G, long j_check)
{
    if (!verify_wavelet_set(P).is_parseval)
        throw Error(ErrorKind::Precondition, "not a Parseval wavelet set: " + P.str());
    if (!verify_wavelet_set(G).is_orthonormal)
        throw Error(ErrorKind::Precondition,
                    "G is not an orthonormal wavelet set (translation congruent to [0,1)): " + G.str());

    Complement out;
    auto& r = out.report;
    r.E = mod1(P);
    const IntervalSet missing = subtract(unit_interval(), r.E);
    out.F_prime = intersect(G, periodize(missing, G.inf(), G.sup()));
    r.F_prime_mod1 = mod1(out.F_prime);
    r.translation_tiling = disjoint(r.E, r.F_prime_mod1) && unite(r.E, r.F_prime_mod1) == unit_interval()
                           && mod1_is_injective(out.F_prime);
    r.j_check = j_check;
    r.dilates_disjoint = true;
    for (long d = 1; d <= 2 * j_check && r.dilates_disjoint; ++d)
        r.dilates_disjoint = disjoint(out.F_prime, dilate(out.F_prime, Rational::pow2(d)));
    r.total_measure = measure(P) + measure(out.F_prime);
    return out;
}

} // namespace pdil
