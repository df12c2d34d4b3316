#pragma once

#include <vector>

#include "pdil/errors.hpp"
#include "pdil/interval_set.hpp"
#include "pdil/words.hpp"

namespace pdil {

/// Completion D of the undecided zone is not an s-tile; `offending` is the
/// overlap or the uncovered remainder.
class InvalidCompletion : public Error {
public:
    InvalidCompletion(const std::string& what, IntervalSet offending)
        : Error(ErrorKind::InvalidCompletion, what + ": " + offending.str()),
          offending_(std::move(offending)) {}

    const IntervalSet& offending() const noexcept { return offending_; }

private:
    IntervalSet offending_;
};

struct DStrategy {
    enum class Kind { LowerHalf, ExplicitSet, CycleSeeded };

    Kind kind = Kind::LowerHalf;
    IntervalSet D;  // ExplicitSet
    Word cycle_word; // CycleSeeded

    static DStrategy lower_half() { return {}; }
    static DStrategy explicit_set(IntervalSet d) { return {Kind::ExplicitSet, std::move(d), {}}; }
    static DStrategy cycle_seeded(Word w) { return {Kind::CycleSeeded, {}, std::move(w)}; }
};

struct FilterSet {
    IntervalSet M;
    // parts before merging
    IntervalSet tau_F_half;
    IntervalSet C;
    IntervalSet D;
    IntervalSet undecided;
};

/// QMF: M and s(M) partition [0,1).
bool is_qmf(const IntervalSet& M);

/// Undecided zone for F: what is left of [0,1) after the forced parts and
/// their supplements.
IntervalSet undecided_zone(const IntervalSet& F);

/// M = C ∪ τ(F/2) ∪ D for a translation simple scaling set F.
FilterSet build_filter(const IntervalSet& F, const DStrategy& strategy);

/// Filter for F = [-a, a) seeded by the cycle with the given word; every cycle
/// point ends up in the interior of M.
FilterSet build_cycle_filter(const Rational& a, const Word& cycle_word);

struct AperiodicPrefix {
    IntervalSet I;
    std::vector<IntervalSet> images; // τ_{η_n}...τ_{η_1} I, n = 1..N
    IntervalSet S;
    bool pairwise_disjoint = false;
    bool s_simple = false;
    Rational min_distance; // distance from S to {0, 1/2, 1}
};

/// The set S_N = ∪_{n ≤ N} τ_{η_n}...τ_{η_1} I with I = [.10^p10, .10^p11).
AperiodicPrefix build_aperiodic_filter_prefix(const Word& eta_prefix, long p, long N);

/// a b aa b aaa b ... with a = 01 and b = 10, cut to `length` digits.
Word alternating_block_word(std::size_t length);

/// QMF filter containing S and dyadic neighborhoods of 0 and 1, completed with
/// the default rule.
FilterSet induced_filter(const IntervalSet& S);

/// Distance from a point to a set (0 if the point is in its closure).
Rational distance(const Rational& x, const IntervalSet& a);

} // namespace pdil
