#pragma once

#include <map>
#include <optional>
#include <vector>

#include "pdil/errors.hpp"
#include "pdil/interval_set.hpp"
#include "pdil/symbolic_dynamics.hpp"
#include "pdil/words.hpp"

namespace pdil {

/// Finite union of fibers base × {path} inside [0,1) × Ω, keyed by path.
class SymbolicSet {
public:
    void add(const EPWord& path, const IntervalSet& base);

    const std::map<EPWord, IntervalSet>& fibers() const { return fibers_; }
    /// λ: total base measure.
    Rational lambda() const;
    bool empty() const { return fibers_.empty(); }

    friend bool operator==(const SymbolicSet&, const SymbolicSet&) = default;

private:
    std::map<EPWord, IntervalSet> fibers_;
};

/// r̃(x, ω) = (2x mod 1, ω_x ω) where ω_x is the digit with τ_{ω_x}(2x mod 1) = x.
SymbolicSet r_tilde(const SymbolicSet& S);
/// r̃^{-1}(x, ω) = (τ_{ω_1} x, ω_2 ω_3 ...).
SymbolicSet r_tilde_inv(const SymbolicSet& S);
SymbolicSet symbolic_subtract(const SymbolicSet& A, const SymbolicSet& B);
/// S ∩ (B × Ω).
SymbolicSet restrict_base(const SymbolicSet& S, const IntervalSet& B);

SymbolicSet build_F_tilde(const PiecewisePath& paths);
SymbolicSet build_P_tilde(const SymbolicSet& Ft);

/// Thrown when a path ends neither in a constant word nor in a listed cycle.
class UnresolvedPath : public Error {
public:
    explicit UnresolvedPath(EPWord path)
        : Error(ErrorKind::UnresolvedPath, "path " + path.str() + " does not end in a known cycle"),
          path_(std::move(path)) {}

    const EPWord& path() const noexcept { return path_; }

private:
    EPWord path_;
};

struct CycleComponent {
    Cycle cycle;
    std::vector<IntervalSet> slots; // one per cycle point, possibly empty
};

/// Sets on ℝ × ({*} ∪ ⋃_C ℤ_p), the real slot first.
struct ComponentFunction {
    IntervalSet real;
    std::vector<CycleComponent> cycles;
    /// Some fibers landed on top of each other within one component.
    bool overlapping = false;
};

/// Cycles of the list that are not the fixed points 0 and 1.
std::vector<Cycle> proper_cycles(const std::vector<Cycle>& cycles);

/// Decodes constant tails with d_Z onto the real slot and cycle tails with d_C.
ComponentFunction decode_components(const SymbolicSet& S, const std::vector<Cycle>& cycles);

struct ChainTiling {
    std::string component; // "real" or the cycle word
    bool dilates_disjoint = false;
    bool covers_window = false;
    bool closure_certified = false;
    long separation_bound = 0;
};

struct DilationReport {
    bool translation_tiling = false;
    Rational translation_measure;
    std::vector<ChainTiling> chains;
    bool dilation_tiling = false;
    std::optional<bool> real_matches_P;
    long j_window = 0;
    bool orthonormal = false;
};

DilationReport verify_orthonormal_dilation(const ComponentFunction& psi, long j_window = 10,
                                           const std::optional<IntervalSet>& P = std::nullopt);

} // namespace pdil
