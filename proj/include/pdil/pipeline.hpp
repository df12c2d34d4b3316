#pragma once

#include <vector>

#include "pdil/dilation.hpp"
#include "pdil/filter_builder.hpp"
#include "pdil/symbolic_dynamics.hpp"
#include "pdil/wavelet_core.hpp"

namespace pdil {

struct PathsResult {
    PartitionGraph graph;
    std::vector<Cycle> cycles;
    PiecewisePath paths;
    DensityReport density;
};

/// Chosen paths and cycles of a QMF filter set.
PathsResult analyze_filter(const IntervalSet& M, const IntervalSet& F, long max_splits = default_max_splits());

struct DilationResult {
    WaveletSetReport wavelet;
    ScalingData scaling;
    FilterSet filter;
    PathsResult dynamics;
    SymbolicSet F_tilde;
    SymbolicSet P_tilde;
    ComponentFunction phi_tilde;
    ComponentFunction psi_tilde;
    DilationReport report;
};

/// Full construction from a Parseval wavelet set to its orthonormal dilation.
DilationResult dilate_wavelet_set(const IntervalSet& P, const DStrategy& strategy, long j_window = 10);

} // namespace pdil
