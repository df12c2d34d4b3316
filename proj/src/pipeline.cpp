#include "pdil/pipeline.hpp"

namespace pdil {

PathsResult analyze_filter(const IntervalSet& M, const IntervalSet& F, long max_splits)
{
    PathsResult out;
    out.graph = discover_partition(M, max_splits);
    out.cycles = graph_cycles(out.graph);
    out.paths = chosen_paths(M, out.graph);
    out.density = density_check(M, F, out.paths);
    return out;
}

DilationResult dilate_wavelet_set(const IntervalSet& P, const DStrategy& strategy, long j_window)
{
    DilationResult out;
    out.wavelet = verify_wavelet_set(P, j_window);
    out.scaling = scaling_set(P);
    if (!out.scaling.F_is_translation_simple)
        throw Error(ErrorKind::Precondition, "scaling set " + out.scaling.F.str() + " is not translation simple");
    out.filter = build_filter(out.scaling.F, strategy);
    out.dynamics = analyze_filter(out.filter.M, out.scaling.F);
    out.F_tilde = build_F_tilde(out.dynamics.paths);
    out.P_tilde = build_P_tilde(out.F_tilde);
    out.phi_tilde = decode_components(out.F_tilde, out.dynamics.cycles);
    out.psi_tilde = decode_components(out.P_tilde, out.dynamics.cycles);
    out.report = verify_orthonormal_dilation(out.psi_tilde, j_window, P);
    return out;
}

} // namespace pdil
