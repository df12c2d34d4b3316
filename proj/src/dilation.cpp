#include "pdil/dilation.hpp"

#include <algorithm>

#include "pdil/encoding.hpp"
#include "pdil/wavelet_core.hpp"

namespace pdil {

namespace {

const Rational kHalf(1, 2);

std::size_t wrap(long i, std::size_t p)
{
    const long m = static_cast<long>(p);
    return static_cast<std::size_t>(((i % m) + m) % m);
}

} // namespace

void SymbolicSet::add(const EPWord& path, const IntervalSet& base)
{
    if (base.empty())
        return;
    auto [it, inserted] = fibers_.try_emplace(path, base);
    if (!inserted)
        it->second = unite(it->second, base);
}

Rational SymbolicSet::lambda() const
{
    Rational total;
    for (const auto& [path, base] : fibers_)
        total += measure(base);
    return total;
}

SymbolicSet r_tilde(const SymbolicSet& S)
{
    SymbolicSet out;
    for (const auto& [path, base] : S.fibers()) {
        out.add(path.prepend(0), affine(intersect(base, IntervalSet(0, kHalf)), 2, 0));
        out.add(path.prepend(1), affine(intersect(base, IntervalSet(kHalf, 1)), 2, -1));
    }
    return out;
}

SymbolicSet r_tilde_inv(const SymbolicSet& S)
{
    SymbolicSet out;
    for (const auto& [path, base] : S.fibers())
        out.add(path.tail(), affine(base, kHalf, Rational(path.digit(0), 2)));
    return out;
}

SymbolicSet symbolic_subtract(const SymbolicSet& A, const SymbolicSet& B)
{
    SymbolicSet out;
    for (const auto& [path, base] : A.fibers()) {
        const auto it = B.fibers().find(path);
        out.add(path, it == B.fibers().end() ? base : subtract(base, it->second));
    }
    return out;
}

SymbolicSet restrict_base(const SymbolicSet& S, const IntervalSet& B)
{
    SymbolicSet out;
    for (const auto& [path, base] : S.fibers())
        out.add(path, intersect(base, B));
    return out;
}

SymbolicSet build_F_tilde(const PiecewisePath& paths)
{
    SymbolicSet out;
    for (const auto& pp : paths.pieces)
        out.add(pp.path, pp.piece);
    return out;
}

SymbolicSet build_P_tilde(const SymbolicSet& Ft)
{
    return symbolic_subtract(r_tilde(Ft), Ft);
}

std::vector<Cycle> proper_cycles(const std::vector<Cycle>& cycles)
{
    std::vector<Cycle> out;
    for (const auto& c : cycles)
        if (c.word().find('0') != Word::npos && c.word().find('1') != Word::npos)
            out.push_back(c);
    return out;
}

ComponentFunction decode_components(const SymbolicSet& S, const std::vector<Cycle>& cycles)
{
    ComponentFunction out;
    for (const auto& c : proper_cycles(cycles))
        out.cycles.push_back({c, std::vector<IntervalSet>(c.length())});

    Rational parts_measure;
    for (const auto& [path, base] : S.fibers()) {
        parts_measure += measure(base);
        if (path.has_constant_tail()) {
            out.real = unite(out.real, translate(base, Rational(d_Z(path))));
            continue;
        }
        auto it = std::find_if(out.cycles.begin(), out.cycles.end(), [&](const CycleComponent& cc) {
            return cc.cycle.rotation_index(path.period()).has_value();
        });
        if (it == out.cycles.end())
            throw UnresolvedPath(path);
        const std::size_t j = cycle_index(path, it->cycle);
        const Rational shift = Rational(cycle_k(path, it->cycle)) - it->cycle.theta(j);
        it->slots[j] = unite(it->slots[j], translate(base, shift));
    }

    Rational image_measure = measure(out.real);
    for (const auto& cc : out.cycles)
        for (const auto& slot : cc.slots)
            image_measure += measure(slot);
    out.overlapping = image_measure != parts_measure;
    return out;
}

namespace {

ChainTiling check_chain(const std::string& name, const std::vector<IntervalSet>& slots, long W)
{
    ChainTiling t;
    t.component = name;
    const std::size_t p = slots.size();

    std::optional<Rational> delta;
    std::optional<Rational> width;
    for (const auto& s : slots) {
        if (s.empty())
            continue;
        const Rational d = distance_to_zero(s);
        const Rational w = max_modulus(s);
        delta = delta ? min(*delta, d) : d;
        width = width ? max(*width, w) : w;
    }
    if (!delta)
        return t;

    // slot i of α^d(S) is 2^d S_{i+d}
    t.dilates_disjoint = true;
    for (long d = 1; d <= 2 * W && t.dilates_disjoint; ++d)
        for (std::size_t i = 0; i < p && t.dilates_disjoint; ++i)
            t.dilates_disjoint = disjoint(slots[i], dilate(slots[wrap(static_cast<long>(i) + d, p)], Rational::pow2(d)));
    t.separation_bound = separation_exponent(*delta, *width);

    const Rational lo = Rational::pow2(-W) * *width;
    const Rational hi = Rational::pow2(W) * (delta->sign() > 0 ? *delta : *width);
    const IntervalSet window = unite(IntervalSet(-hi, -lo), IntervalSet(lo, hi));
    t.covers_window = true;
    for (std::size_t i = 0; i < p && t.covers_window; ++i) {
        std::vector<IntervalSet> parts;
        for (long n = -W; n <= W; ++n)
            parts.push_back(dilate(slots[wrap(static_cast<long>(i) + n, p)], Rational::pow2(n)));
        t.covers_window = subset(window, unite_all(parts));
    }
    t.closure_certified = delta->sign() > 0 && t.separation_bound <= 2 * W && hi >= lo * 2;
    return t;
}

} // namespace

DilationReport verify_orthonormal_dilation(const ComponentFunction& psi, long j_window,
                                           const std::optional<IntervalSet>& P)
{
    DilationReport r;
    r.j_window = j_window;

    std::vector<IntervalSet> reduced{mod1(psi.real)};
    r.translation_measure = measure(psi.real);
    for (const auto& cc : psi.cycles) {
        for (std::size_t j = 0; j < cc.slots.size(); ++j) {
            r.translation_measure += measure(cc.slots[j]);
            reduced.push_back(mod1(translate(cc.slots[j], cc.cycle.theta(j))));
        }
    }
    // total measure 1 and union [0,1) force injectivity and disjointness
    r.translation_tiling = r.translation_measure == 1 && unite_all(reduced) == unit_interval();

    r.chains.push_back(check_chain("real", {psi.real}, j_window));
    for (const auto& cc : psi.cycles)
        r.chains.push_back(check_chain(cc.cycle.word(), cc.slots, j_window));
    r.dilation_tiling = std::all_of(r.chains.begin(), r.chains.end(), [](const ChainTiling& t) {
        return t.dilates_disjoint && t.covers_window && t.closure_certified;
    });

    if (P)
        r.real_matches_P = psi.real == *P;
    r.orthonormal = r.translation_tiling && r.dilation_tiling && r.real_matches_P.value_or(true);
    return r;
}

} // namespace pdil
