#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "pdil/interval_set.hpp"
#include "pdil/words.hpp"

namespace testing {

using pdil::Interval;
using pdil::IntervalSet;
using pdil::Rational;

inline IntervalSet S(const char* text)
{
    return IntervalSet::parse(text);
}

inline Rational R(long p, long q = 1)
{
    return Rational(p, q);
}

/// Fixed-seed generator so failures reproduce.
inline std::mt19937_64& rng()
{
    static std::mt19937_64 gen(20240611);
    return gen;
}

inline long uniform(long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

/// Random rational in [lo, hi) with denominator up to max_den.
inline Rational random_rational(const Rational& lo, const Rational& hi, long max_den = 97)
{
    const long q = uniform(1, max_den);
    const Rational x = lo + (hi - lo) * Rational(uniform(0, q - 1), q);
    return x;
}

/// Unsorted, possibly overlapping raw intervals.
inline std::vector<Interval> random_raw(std::size_t n, long max_den = 12)
{
    std::vector<Interval> out;
    for (std::size_t i = 0; i < n; ++i) {
        Rational a = random_rational(-2, 2, max_den);
        Rational b = random_rational(-2, 2, max_den);
        if (b < a)
            std::swap(a, b);
        out.push_back({a, b});
    }
    return out;
}

inline bool raw_contains(const std::vector<Interval>& raw, const Rational& x)
{
    for (const auto& iv : raw)
        if (iv.lo <= x && x < iv.hi)
            return true;
    return false;
}

/// Endpoints of all sets, the midpoints between neighbors, and points just
/// outside the hull.
inline std::vector<Rational> probe_points(const std::vector<std::vector<Interval>>& sets)
{
    std::vector<Rational> ends;
    for (const auto& s : sets)
        for (const auto& iv : s) {
            ends.push_back(iv.lo);
            ends.push_back(iv.hi);
        }
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
    std::vector<Rational> out = ends;
    for (std::size_t i = 0; i + 1 < ends.size(); ++i)
        out.push_back((ends[i] + ends[i + 1]) / 2);
    if (!ends.empty()) {
        out.push_back(ends.front() - 1);
        out.push_back(ends.back() + 1);
    }
    return out;
}

inline pdil::Word random_word(std::size_t len)
{
    pdil::Word w;
    for (std::size_t i = 0; i < len; ++i)
        w += static_cast<char>('0' + uniform(0, 1));
    return w;
}

/// Random primitive word with both digits.
inline pdil::Word random_cycle_word(std::size_t max_len)
{
    for (;;) {
        const pdil::Word w = random_word(static_cast<std::size_t>(uniform(2, static_cast<long>(max_len))));
        if (pdil::is_primitive(w) && w.find('0') != pdil::Word::npos && w.find('1') != pdil::Word::npos)
            return w;
    }
}

} // namespace testing
