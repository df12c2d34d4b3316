#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pdil/rational.hpp"

namespace pdil {

/// Half-open interval [lo, hi).
struct Interval {
    Rational lo;
    Rational hi;

    Rational length() const { return hi - lo; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of half-open intervals in canonical form: sorted, nonempty,
/// non-overlapping and non-adjacent. Two sets that agree up to a null set
/// have identical representations.
class IntervalSet {
public:
    IntervalSet() = default;
    IntervalSet(const Rational& lo, const Rational& hi);
    /// Accepts intervals in any order, overlapping or empty; canonicalizes.
    explicit IntervalSet(std::vector<Interval> intervals);

    /// Text form `[a,b)u[c,d)`; the empty set is `{}`.
    static IntervalSet parse(std::string_view text);
    std::string str() const;

    const std::vector<Interval>& intervals() const { return ivs_; }
    bool empty() const { return ivs_.empty(); }
    std::size_t size() const { return ivs_.size(); }

    /// Lower end of the convex hull. Throws on the empty set.
    const Rational& inf() const;
    /// Upper end of the convex hull. Throws on the empty set.
    const Rational& sup() const;

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
    std::vector<Interval> ivs_;
};

std::ostream& operator<<(std::ostream& os, const IntervalSet& s);

IntervalSet unite(const IntervalSet& a, const IntervalSet& b);
IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet subtract(const IntervalSet& a, const IntervalSet& b);
IntervalSet symmetric_difference(const IntervalSet& a, const IntervalSet& b);
IntervalSet unite_all(const std::vector<IntervalSet>& sets);

Rational measure(const IntervalSet& a);

/// Image under x -> scale*x + shift. Throws on zero scale.
IntervalSet affine(const IntervalSet& a, const Rational& scale, const Rational& shift);
inline IntervalSet dilate(const IntervalSet& a, const Rational& scale) { return affine(a, scale, 0); }
inline IntervalSet translate(const IntervalSet& a, const Rational& shift) { return affine(a, 1, shift); }

/// Set image under x -> x mod 1.
IntervalSet mod1(const IntervalSet& a);
/// True iff the reduction mod 1 is injective up to a null set.
bool mod1_is_injective(const IntervalSet& a);

/// Image under s(x) = (x + 1/2) mod 1. Requires a ⊆ [0,1).
IntervalSet s_map(const IntervalSet& a);

/// (a + Z) ∩ [lo, hi).
IntervalSet periodize(const IntervalSet& a, const Rational& lo, const Rational& hi);

/// Dilates 2^j a for j in [j_lo, j_hi], united.
IntervalSet dyadic_union(const IntervalSet& a, long j_lo, long j_hi);

bool subset(const IntervalSet& a, const IntervalSet& b);
bool disjoint(const IntervalSet& a, const IntervalSet& b);
/// Half-open membership.
bool contains(const IntervalSet& a, const Rational& x);
/// True iff some [x - e, x + e) with e > 0 lies in a.
bool contains_interior(const IntervalSet& a, const Rational& x);

IntervalSet unit_interval();

} // namespace pdil
