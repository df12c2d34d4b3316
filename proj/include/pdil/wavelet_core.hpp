#pragma once

#include "pdil/interval_set.hpp"

namespace pdil {

struct WaveletSetReport {
    bool is_multiplicative_tile = false;
    bool is_translation_simple = false;
    bool covers_line = false;
    bool is_parseval = false;
    bool is_orthonormal = false;

    /// P ∩ 2^d P = ∅ for every d ≥ 1 (exact: beyond `disjointness_bound`
    /// the supports are separated in modulus).
    bool dilates_disjoint = false;
    long disjointness_bound = 0;
    /// The coverage window contains a full annulus [t,2t) ∪ [-2t,-t).
    bool coverage_certified = false;
    long j_window = 0;
    Rational delta; // distance from 0 to P
    Rational width; // sup |x| over P
};

/// Distance from 0 to the set (0 if the closure touches 0).
Rational distance_to_zero(const IntervalSet& a);
/// sup of |x| over the set.
Rational max_modulus(const IntervalSet& a);

/// Smallest D ≥ 1 with 2^D * delta ≥ width.
long separation_exponent(const Rational& delta, const Rational& width);

/// Parseval wavelet set test: {2^j P} tiles the line and P is translation simple.
WaveletSetReport verify_wavelet_set(const IntervalSet& P, long j_window = 10);

struct ScalingData {
    IntervalSet F;
    IntervalSet P;
    bool F_is_translation_simple = false;
    long iterations = 0;
};

/// F = ∪_{j≥1} 2^{-j} P as the certified fixed point of F = F/2 ∪ P/2.
ScalingData scaling_set(const IntervalSet& P, long max_iter = 64);

/// The Shannon set [-1,-1/2) ∪ [1/2,1).
IntervalSet shannon_set();

struct ComplementReport {
    IntervalSet E;              // mod1(P)
    IntervalSet F_prime_mod1;   // mod1(F')
    bool translation_tiling = false; // mod1(P) ⊔ mod1(F') = [0,1), F' injective mod 1
    bool dilates_disjoint = false;   // 2^j F' pairwise disjoint for |j| ≤ j_check
    long j_check = 0;
    Rational total_measure;          // measure(P) + measure(F')
};

struct Complement {
    IntervalSet F_prime;
    ComplementReport report;
};

/// F' ⊆ G with mod1(F') = [0,1) \ mod1(P). G must be an orthonormal wavelet set.
Complement semiorthogonal_complement(const IntervalSet& P, const IntervalSet& G = shannon_set(),
                                     long j_check = 8);

} // namespace pdil
