#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pdil/errors.hpp"
#include "pdil/interval_set.hpp"
#include "pdil/words.hpp"

namespace pdil {

class NotSubordinated : public Error {
public:
    NotSubordinated(const std::string& what, IntervalSet counterexample)
        : Error(ErrorKind::NotSubordinated, what + ": " + counterexample.str()),
          counterexample_(std::move(counterexample)) {}

    const IntervalSet& counterexample() const noexcept { return counterexample_; }

private:
    IntervalSet counterexample_;
};

struct DigitPieces {
    IntervalSet zero_piece; // {x : τ_0 x ∈ M}
    IntervalSet one_piece;  // {x : τ_1 x ∈ M}
};

/// Splits [0,1) by the first digit of the chosen path. Requires M QMF.
DigitPieces chosen_digit_pieces(const IntervalSet& M);

/// Vertices I_i partition M; edge i -> target[i] with τ_{label[i]}(I_i) ⊆ I_{target[i]}.
struct PartitionGraph {
    std::vector<IntervalSet> vertices;
    std::vector<std::size_t> target;
    std::vector<int> label;

    std::size_t size() const { return vertices.size(); }
};

/// Builds the labeled graph of a partition of M, or throws NotSubordinated.
PartitionGraph verify_partition(const IntervalSet& M, const std::vector<IntervalSet>& partition);

/// Split budget from PARSEVAL_DILATE_MAX_SPLITS, default 4096. A malformed
/// value is a Usage error.
long default_max_splits();

/// Refines the maximal intervals of M until they form a subordinated
/// partition. Throws Unpartitionable when more than `max_splits` cuts are needed.
PartitionGraph discover_partition(const IntervalSet& M, long max_splits = default_max_splits());

/// Distinct cycles of the graph, each rotated to its smallest point, sorted
/// by length then by θ_0.
std::vector<Cycle> graph_cycles(const PartitionGraph& g);

struct PathPiece {
    IntervalSet piece;
    EPWord path;
};

/// Pieces of [0,1) with their chosen paths, sorted by lower end.
struct PiecewisePath {
    std::vector<PathPiece> pieces;
};

PiecewisePath chosen_paths(const IntervalSet& M, const PartitionGraph& g);

struct DensityReport {
    bool condition_ii = false; // ∪_{n≥1} 2^n F covers the test window
    bool condition_v = false;  // paths are (0) near 0 and (1) near 1
    bool dense = false;
    std::vector<std::string> checked;
    std::vector<std::string> subsumed;
};

DensityReport density_check(const IntervalSet& M, const IntervalSet& F, const PiecewisePath& paths);

/// True iff for some n ≤ n_max the set g^n([0,1)) and its partial images along
/// the cycle all lie in M, where g = τ_{l_{p-1}}...τ_{l_0}.
bool cycle_subrep_check(const IntervalSet& M, const Cycle& C, long n_max = 64);

/// Whether every path ends in (0), (1) or a rotation of one of the cycles.
bool paths_end_in(const PiecewisePath& paths, const std::vector<Cycle>& cycles);

} // namespace pdil
