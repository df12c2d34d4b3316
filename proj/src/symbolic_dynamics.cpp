#include "pdil/symbolic_dynamics.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>

#include "pdil/filter_builder.hpp"
#include "pdil/wavelet_core.hpp"

namespace pdil {

namespace {

const Rational kHalf(1, 2);

void require_qmf(const IntervalSet& M)
{
    if (!is_qmf(M))
        throw Error(ErrorKind::Precondition, "filter set " + M.str() + " is not QMF");
}

// Sorted index from interval lower ends to the vertex owning the interval.
class VertexIndex {
public:
    explicit VertexIndex(const std::vector<IntervalSet>& vertices)
    {
        for (std::size_t v = 0; v < vertices.size(); ++v)
            for (const auto& iv : vertices[v].intervals())
                entries_.push_back({iv, v});
        std::sort(entries_.begin(), entries_.end(),
                  [](const Entry& a, const Entry& b) { return a.iv.lo < b.iv.lo; });
    }

    /// Vertex whose interval contains the whole of [lo, hi), if any.
    std::optional<std::size_t> containing(const Interval& iv) const
    {
        auto it = std::upper_bound(entries_.begin(), entries_.end(), iv.lo,
                                   [](const Rational& x, const Entry& e) { return x < e.iv.lo; });
        if (it == entries_.begin())
            return std::nullopt;
        --it;
        if (it->iv.lo <= iv.lo && iv.hi <= it->iv.hi)
            return it->vertex;
        return std::nullopt;
    }

private:
    struct Entry {
        Interval iv;
        std::size_t vertex;
    };
    std::vector<Entry> entries_;
};

std::optional<std::size_t> containing_vertex(const VertexIndex& index, const IntervalSet& img)
{
    std::optional<std::size_t> found;
    for (const auto& iv : img.intervals()) {
        const auto v = index.containing(iv);
        if (!v || (found && *found != *v))
            return std::nullopt;
        found = v;
    }
    return found;
}

// For every vertex, the cycle (as vertex list) it belongs to, found by
// walking the functional graph.
std::vector<std::vector<std::size_t>> vertex_cycles(const PartitionGraph& g)
{
    std::vector<int> state(g.size(), 0); // 0 new, 1 on stack, 2 done
    std::vector<std::vector<std::size_t>> cycles;
    for (std::size_t s = 0; s < g.size(); ++s) {
        if (state[s])
            continue;
        std::vector<std::size_t> walk;
        std::size_t v = s;
        while (state[v] == 0) {
            state[v] = 1;
            walk.push_back(v);
            v = g.target[v];
        }
        if (state[v] == 1) {
            const auto start = std::find(walk.begin(), walk.end(), v);
            cycles.emplace_back(start, walk.end());
        }
        for (auto w : walk)
            state[w] = 2;
    }
    return cycles;
}

Word labels_along(const PartitionGraph& g, const std::vector<std::size_t>& verts)
{
    Word w;
    for (auto v : verts)
        w += static_cast<char>('0' + g.label[v]);
    return w;
}

// Chosen path read off the graph from each vertex.
std::vector<EPWord> vertex_paths(const PartitionGraph& g)
{
    std::vector<std::optional<EPWord>> memo(g.size());
    for (const auto& cyc : vertex_cycles(g)) {
        const Word w = labels_along(g, cyc);
        for (std::size_t i = 0; i < cyc.size(); ++i)
            memo[cyc[i]] = EPWord("", rotate_left(w, i));
    }
    for (std::size_t s = 0; s < g.size(); ++s) {
        std::vector<std::size_t> walk;
        std::size_t v = s;
        while (!memo[v]) {
            walk.push_back(v);
            v = g.target[v];
        }
        for (auto it = walk.rbegin(); it != walk.rend(); ++it)
            memo[*it] = memo[g.target[*it]]->prepend(g.label[*it]);
    }
    std::vector<EPWord> out;
    out.reserve(g.size());
    for (auto& m : memo)
        out.push_back(*m);
    return out;
}

} // namespace

DigitPieces chosen_digit_pieces(const IntervalSet& M)
{
    require_qmf(M);
    DigitPieces out;
    out.zero_piece = affine(intersect(M, IntervalSet(0, kHalf)), 2, 0);
    out.one_piece = subtract(unit_interval(), out.zero_piece);
    return out;
}

PartitionGraph verify_partition(const IntervalSet& M, const std::vector<IntervalSet>& partition)
{
    require_qmf(M);
    Rational total;
    for (const auto& piece : partition)
        total += measure(piece);
    if (total != measure(M) || unite_all(partition) != M)
        throw Error(ErrorKind::Precondition, "pieces do not partition the filter set " + M.str());

    PartitionGraph g;
    g.vertices = partition;
    g.target.resize(partition.size());
    g.label.resize(partition.size());
    const VertexIndex index(partition);
    for (std::size_t i = 0; i < partition.size(); ++i) {
        bool found = false;
        for (int nu = 0; nu < 2 && !found; ++nu) {
            const IntervalSet img = affine(partition[i], kHalf, Rational(nu, 2));
            if (const auto j = containing_vertex(index, img)) {
                g.target[i] = *j;
                g.label[i] = nu;
                found = true;
            }
        }
        if (!found)
            throw NotSubordinated("neither τ-image of the piece lies in a single piece", partition[i]);
    }
    return g;
}

long default_max_splits()
{
    if (const char* env = std::getenv("PARSEVAL_DILATE_MAX_SPLITS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v <= 0)
            throw Error(ErrorKind::Usage, std::string("PARSEVAL_DILATE_MAX_SPLITS must be a positive integer, got '")
                                              + env + "'");
        return v;
    }
    return 4096;
}

PartitionGraph discover_partition(const IntervalSet& M, long max_splits)
{
    require_qmf(M);
    // Cut points must be closed under r(x) = 2x mod 1 wherever r lands inside
    // M: a cut at q inside the image of a piece forces a cut at r(q).
    std::set<Rational> cuts;
    std::vector<Rational> work;
    for (const auto& iv : M.intervals()) {
        for (const auto* e : {&iv.lo, &iv.hi})
            if (cuts.insert(*e).second)
                work.push_back(*e);
    }
    long splits = 0;
    while (!work.empty()) {
        const Rational q = std::move(work.back());
        work.pop_back();
        Rational y = (q * 2).frac();
        if (!contains_interior(M, y) || cuts.count(y))
            continue;
        if (++splits > max_splits)
            throw Error(ErrorKind::Unpartitionable, "no subordinated partition of " + M.str() + " within "
                                                        + std::to_string(max_splits) + " splits");
        cuts.insert(y);
        work.push_back(std::move(y));
    }

    std::vector<IntervalSet> pieces;
    for (const auto& iv : M.intervals()) {
        auto it = cuts.upper_bound(iv.lo);
        Rational lo = iv.lo;
        for (; it != cuts.end() && *it < iv.hi; ++it) {
            pieces.emplace_back(lo, *it);
            lo = *it;
        }
        pieces.emplace_back(lo, iv.hi);
    }
    return verify_partition(M, pieces);
}

std::vector<Cycle> graph_cycles(const PartitionGraph& g)
{
    std::vector<Cycle> out;
    for (const auto& cyc : vertex_cycles(g)) {
        const Cycle c = Cycle(primitive_root(labels_along(g, cyc))).canonical();
        if (std::none_of(out.begin(), out.end(), [&](const Cycle& o) { return o.same_orbit(c); }))
            out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
        if (a.length() != b.length())
            return a.length() < b.length();
        return a.theta(0) < b.theta(0);
    });
    return out;
}

PiecewisePath chosen_paths(const IntervalSet& M, const PartitionGraph& g)
{
    const DigitPieces digits = chosen_digit_pieces(M);
    const std::vector<EPWord> vpaths = vertex_paths(g);

    std::map<EPWord, std::vector<IntervalSet>> by_path;
    for (int nu = 0; nu < 2; ++nu) {
        const IntervalSet& dp = nu ? digits.one_piece : digits.zero_piece;
        for (std::size_t u = 0; u < g.size(); ++u) {
            IntervalSet x = intersect(dp, affine(g.vertices[u], 2, -nu));
            if (!x.empty())
                by_path[vpaths[u].prepend(nu)].push_back(std::move(x));
        }
    }

    PiecewisePath out;
    Rational total;
    for (auto& [path, parts] : by_path) {
        IntervalSet piece = unite_all(parts);
        total += measure(piece);
        out.pieces.push_back({std::move(piece), path});
    }
    if (total != 1)
        throw Error(ErrorKind::Internal, "chosen-path pieces do not partition [0,1)");
    std::sort(out.pieces.begin(), out.pieces.end(),
              [](const PathPiece& a, const PathPiece& b) { return a.piece.inf() < b.piece.inf(); });
    return out;
}

DensityReport density_check(const IntervalSet& M, const IntervalSet& F, const PiecewisePath& paths)
{
    DensityReport r;
    r.checked = {"ii", "v"};
    r.subsumed = {"i", "iii", "iv", "vi"};

    bool low = false;
    bool high = false;
    for (const auto& pp : paths.pieces) {
        if (pp.piece.inf() == 0)
            low = pp.path == EPWord::constant(0);
        if (pp.piece.sup() == 1)
            high = pp.path == EPWord::constant(1);
    }
    r.condition_v = low && high && is_qmf(M);

    if (!F.empty() && distance_to_zero(F).sign() == 0) {
        // F contains (-δ, δ), so 2^n F for n ≤ N covers (-2^N δ, 2^N δ).
        const Rational w = max_modulus(F);
        Rational delta = w;
        for (const auto& iv : F.intervals())
            if (iv.lo < 0 && iv.hi > 0)
                delta = min(-iv.lo, iv.hi);
        const long N = 9 + separation_exponent(delta, w);
        const Rational lo = Rational::pow2(-8);
        const Rational hi = Rational::pow2(8) * w;
        const IntervalSet window = unite(IntervalSet(-hi, -lo), IntervalSet(lo, hi));
        r.condition_ii = subset(window, dyadic_union(F, 1, N));
    }
    r.dense = r.condition_ii && r.condition_v;
    return r;
}

bool cycle_subrep_check(const IntervalSet& M, const Cycle& C, long n_max)
{
    IntervalSet Y = unit_interval();
    for (long n = 0; n <= n_max; ++n) {
        bool inside = true;
        IntervalSet Z = Y;
        for (std::size_t k = 0; k < C.length(); ++k) {
            inside = inside && subset(Z, M);
            Z = affine(Z, kHalf, Rational(C.word()[k] - '0', 2));
        }
        if (inside)
            return true;
        Y = std::move(Z);
    }
    return false;
}

bool paths_end_in(const PiecewisePath& paths, const std::vector<Cycle>& cycles)
{
    for (const auto& pp : paths.pieces) {
        if (pp.path.has_constant_tail())
            continue;
        const bool known = std::any_of(cycles.begin(), cycles.end(), [&](const Cycle& c) {
            return c.rotation_index(pp.path.period()).has_value();
        });
        if (!known)
            return false;
    }
    return true;
}

} // namespace pdil
