#include "pdil/interval_set.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "pdil/errors.hpp"

namespace pdil {

namespace {

std::vector<Interval> canonicalize(std::vector<Interval> in)
{
    std::erase_if(in, [](const Interval& iv) { return !(iv.lo < iv.hi); });
    std::sort(in.begin(), in.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::vector<Interval> out;
    out.reserve(in.size());
    for (auto& iv : in) {
        if (!out.empty() && iv.lo <= out.back().hi) {
            if (out.back().hi < iv.hi)
                out.back().hi = std::move(iv.hi);
        } else {
            out.push_back(std::move(iv));
        }
    }
    return out;
}

template <typename Op>
IntervalSet combine(const IntervalSet& a, const IntervalSet& b, Op op)
{
    struct Event {
        Rational x;
        int set;   // 0 = a, 1 = b
        int delta; // +1 open, -1 close
    };
    std::vector<Event> ev;
    ev.reserve(2 * (a.size() + b.size()));
    for (const auto& iv : a.intervals()) {
        ev.push_back({iv.lo, 0, +1});
        ev.push_back({iv.hi, 0, -1});
    }
    for (const auto& iv : b.intervals()) {
        ev.push_back({iv.lo, 1, +1});
        ev.push_back({iv.hi, 1, -1});
    }
    std::sort(ev.begin(), ev.end(), [](const Event& l, const Event& r) { return l.x < r.x; });

    std::vector<Interval> out;
    int depth[2] = {0, 0};
    std::size_t i = 0;
    while (i < ev.size()) {
        const Rational x = ev[i].x;
        while (i < ev.size() && ev[i].x == x) {
            depth[ev[i].set] += ev[i].delta;
            ++i;
        }
        if (i < ev.size() && op(depth[0] > 0, depth[1] > 0))
            out.push_back({x, ev[i].x});
    }
    return IntervalSet(std::move(out));
}

class Cursor {
public:
    explicit Cursor(std::string_view t) : text_(t) {}

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool at_end()
    {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    void expect_one_of(std::string_view chars, const char* what)
    {
        const char c = peek();
        if (c == '\0' || chars.find(c) == std::string_view::npos)
            throw ParseError(pos_, std::string("expected ") + what);
        ++pos_;
    }
    Rational rational()
    {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size()
               && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-'
                   || text_[pos_] == '+' || text_[pos_] == '/'))
            ++pos_;
        try {
            return Rational::parse(text_.substr(start, pos_ - start));
        } catch (const ParseError& e) {
            throw ParseError(start + e.position(), e.detail());
        }
    }
    std::size_t pos() const { return pos_; }
    void advance() { ++pos_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

IntervalSet::IntervalSet(const Rational& lo, const Rational& hi)
{
    if (lo < hi)
        ivs_.push_back({lo, hi});
}

IntervalSet::IntervalSet(std::vector<Interval> intervals) : ivs_(canonicalize(std::move(intervals))) {}

IntervalSet IntervalSet::parse(std::string_view text)
{
    Cursor c(text);
    if (c.peek() == '{') {
        c.advance();
        c.expect_one_of("}", "'}'");
        if (!c.at_end())
            throw ParseError(c.pos(), "trailing characters");
        return {};
    }
    if (c.at_end())
        throw ParseError(c.pos(), "empty interval set text");
    std::vector<Interval> ivs;
    for (;;) {
        c.expect_one_of("[(", "'['");
        const std::size_t lo_pos = c.pos();
        Rational lo = c.rational();
        c.expect_one_of(",", "','");
        Rational hi = c.rational();
        c.expect_one_of(")]", "')'");
        if (hi < lo)
            throw ParseError(lo_pos, "interval with lo > hi");
        ivs.push_back({std::move(lo), std::move(hi)});
        if (c.at_end())
            break;
        c.expect_one_of("uU", "'u' or end of input");
    }
    return IntervalSet(std::move(ivs));
}

std::string IntervalSet::str() const
{
    if (ivs_.empty())
        return "{}";
    std::string out;
    for (std::size_t i = 0; i < ivs_.size(); ++i) {
        if (i)
            out += 'u';
        out += '[' + ivs_[i].lo.str() + ',' + ivs_[i].hi.str() + ')';
    }
    return out;
}

const Rational& IntervalSet::inf() const
{
    if (ivs_.empty())
        throw Error(ErrorKind::Precondition, "inf of empty set");
    return ivs_.front().lo;
}

const Rational& IntervalSet::sup() const
{
    if (ivs_.empty())
        throw Error(ErrorKind::Precondition, "sup of empty set");
    return ivs_.back().hi;
}

std::ostream& operator<<(std::ostream& os, const IntervalSet& s)
{
    return os << s.str();
}

IntervalSet unite(const IntervalSet& a, const IntervalSet& b)
{
    std::vector<Interval> all = a.intervals();
    all.insert(all.end(), b.intervals().begin(), b.intervals().end());
    return IntervalSet(std::move(all));
}

IntervalSet unite_all(const std::vector<IntervalSet>& sets)
{
    std::vector<Interval> all;
    for (const auto& s : sets)
        all.insert(all.end(), s.intervals().begin(), s.intervals().end());
    return IntervalSet(std::move(all));
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b)
{
    return combine(a, b, [](bool x, bool y) { return x && y; });
}

IntervalSet subtract(const IntervalSet& a, const IntervalSet& b)
{
    return combine(a, b, [](bool x, bool y) { return x && !y; });
}

IntervalSet symmetric_difference(const IntervalSet& a, const IntervalSet& b)
{
    return combine(a, b, [](bool x, bool y) { return x != y; });
}

Rational measure(const IntervalSet& a)
{
    Rational m;
    for (const auto& iv : a.intervals())
        m += iv.length();
    return m;
}

IntervalSet affine(const IntervalSet& a, const Rational& scale, const Rational& shift)
{
    if (scale.sign() == 0)
        throw Error(ErrorKind::Precondition, "affine map with zero scale");
    std::vector<Interval> out;
    out.reserve(a.size());
    for (const auto& iv : a.intervals()) {
        Rational x = scale * iv.lo + shift;
        Rational y = scale * iv.hi + shift;
        if (scale.sign() < 0)
            std::swap(x, y);
        out.push_back({std::move(x), std::move(y)});
    }
    return IntervalSet(std::move(out));
}

namespace {

std::vector<Interval> mod1_pieces(const IntervalSet& a)
{
    std::vector<Interval> out;
    for (const auto& iv : a.intervals()) {
        if (iv.length() >= 1) {
            out.push_back({0, 1});
            continue;
        }
        const Rational k(iv.lo.floor());
        const Rational lo = iv.lo - k;
        const Rational hi = iv.hi - k;
        if (hi <= 1) {
            out.push_back({lo, hi});
        } else {
            out.push_back({lo, 1});
            out.push_back({0, hi - 1});
        }
    }
    return out;
}

} // namespace

IntervalSet mod1(const IntervalSet& a)
{
    return IntervalSet(mod1_pieces(a));
}

bool mod1_is_injective(const IntervalSet& a)
{
    return measure(mod1(a)) == measure(a);
}

IntervalSet unit_interval()
{
    return IntervalSet(0, 1);
}

IntervalSet s_map(const IntervalSet& a)
{
    if (!a.empty() && (a.inf() < 0 || a.sup() > 1))
        throw Error(ErrorKind::Precondition, "s_map input " + a.str() + " not contained in [0,1)");
    return mod1(translate(a, Rational(1, 2)));
}

IntervalSet periodize(const IntervalSet& a, const Rational& lo, const Rational& hi)
{
    if (a.empty() || !(lo < hi))
        return {};
    const Integer k_lo = (lo - a.sup()).floor();
    const Integer k_hi = (hi - a.inf()).ceil();
    std::vector<Interval> out;
    for (Integer k = k_lo; k <= k_hi; ++k) {
        const Rational shift(k);
        for (const auto& iv : a.intervals())
            out.push_back({iv.lo + shift, iv.hi + shift});
    }
    return intersect(IntervalSet(std::move(out)), IntervalSet(lo, hi));
}

IntervalSet dyadic_union(const IntervalSet& a, long j_lo, long j_hi)
{
    std::vector<IntervalSet> parts;
    for (long j = j_lo; j <= j_hi; ++j)
        parts.push_back(dilate(a, Rational::pow2(j)));
    return unite_all(parts);
}

bool subset(const IntervalSet& a, const IntervalSet& b)
{
    return subtract(a, b).empty();
}

bool disjoint(const IntervalSet& a, const IntervalSet& b)
{
    return intersect(a, b).empty();
}

bool contains(const IntervalSet& a, const Rational& x)
{
    for (const auto& iv : a.intervals())
        if (iv.lo <= x && x < iv.hi)
            return true;
    return false;
}

bool contains_interior(const IntervalSet& a, const Rational& x)
{
    for (const auto& iv : a.intervals())
        if (iv.lo < x && x < iv.hi)
            return true;
    return false;
}

} // namespace pdil
