#include "pdil/serialize.hpp"

namespace pdil {

namespace {

Json strings(const std::vector<std::string>& v)
{
    Json out = Json::array();
    for (const auto& s : v)
        out.push_back(s);
    return out;
}

Json cycle_list(const std::vector<Cycle>& cycles)
{
    Json out = Json::array();
    for (const auto& c : cycles)
        out.push_back(to_json(c));
    return out;
}

void require(bool ok, const char* what)
{
    if (!ok)
        throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + what);
}

} // namespace

Json to_json(const IntervalSet& s)
{
    Json out = Json::array();
    for (const auto& iv : s.intervals())
        out.push_back(Json::array({iv.lo.str(), iv.hi.str()}));
    return out;
}

IntervalSet interval_set_from_json(const Json& j)
{
    require(j.is_array(), "interval set must be an array");
    std::vector<Interval> ivs;
    for (const auto& pair : j) {
        require(pair.is_array() && pair.size() == 2 && pair[0].is_string() && pair[1].is_string(),
                "interval must be a pair of strings");
        ivs.push_back({Rational::parse(pair[0].get<std::string>()), Rational::parse(pair[1].get<std::string>())});
    }
    return IntervalSet(std::move(ivs));
}

Json to_json(const WaveletSetReport& r)
{
    return {
        {"is_multiplicative_tile", r.is_multiplicative_tile},
        {"is_translation_simple", r.is_translation_simple},
        {"covers_line", r.covers_line},
        {"is_parseval", r.is_parseval},
        {"is_orthonormal", r.is_orthonormal},
        {"dilates_disjoint", r.dilates_disjoint},
        {"disjointness_bound", r.disjointness_bound},
        {"coverage_certified", r.coverage_certified},
        {"j_window", r.j_window},
        {"delta", r.delta.str()},
        {"width", r.width.str()},
    };
}

Json to_json(const ScalingData& d)
{
    return {
        {"F", to_json(d.F)},
        {"P", to_json(d.P)},
        {"F_is_translation_simple", d.F_is_translation_simple},
        {"iterations", d.iterations},
    };
}

Json to_json(const FilterSet& f)
{
    return {
        {"M", to_json(f.M)},
        {"provenance", {{"tau_F_half", to_json(f.tau_F_half)}, {"C", to_json(f.C)}, {"D", to_json(f.D)}}},
        {"undecided", to_json(f.undecided)},
    };
}

Json to_json(const Cycle& c)
{
    Json pts = Json::array();
    for (const auto& p : c.points())
        pts.push_back(p.str());
    return {{"word", c.word()}, {"points", pts}};
}

Json to_json(const PartitionGraph& g)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < g.size(); ++i)
        out.push_back({{"piece", to_json(g.vertices[i])}, {"label", g.label[i]}, {"target", g.target[i]}});
    return out;
}

Json to_json(const PiecewisePath& p)
{
    Json out = Json::array();
    for (const auto& pp : p.pieces)
        out.push_back({{"piece", to_json(pp.piece)}, {"path", pp.path.str()}});
    return out;
}

PiecewisePath piecewise_path_from_json(const Json& j)
{
    require(j.is_array(), "path list must be an array");
    PiecewisePath out;
    for (const auto& e : j) {
        require(e.is_object() && e.contains("piece") && e.contains("path") && e["path"].is_string(),
                "path entry needs piece and path");
        out.pieces.push_back({interval_set_from_json(e["piece"]), EPWord::parse(e["path"].get<std::string>())});
    }
    return out;
}

Json to_json(const DensityReport& r)
{
    return {
        {"condition_ii", r.condition_ii},
        {"condition_v", r.condition_v},
        {"dense", r.dense},
        {"checked", strings(r.checked)},
        {"subsumed", strings(r.subsumed)},
    };
}

Json to_json(const SymbolicSet& s)
{
    Json out = Json::array();
    for (const auto& [path, base] : s.fibers())
        out.push_back({{"base", to_json(base)}, {"path", path.str()}});
    return out;
}

Json to_json(const ComponentFunction& c)
{
    Json cycles = Json::array();
    for (const auto& cc : c.cycles) {
        Json slots = Json::array();
        for (const auto& s : cc.slots)
            slots.push_back(to_json(s));
        cycles.push_back({{"word", cc.cycle.word()}, {"slots", slots}});
    }
    return {{"real", to_json(c.real)}, {"cycles", cycles}};
}

ComponentFunction component_function_from_json(const Json& j)
{
    require(j.is_object() && j.contains("real") && j.contains("cycles") && j["cycles"].is_array(),
            "component function needs real and cycles");
    ComponentFunction out;
    out.real = interval_set_from_json(j["real"]);
    for (const auto& e : j["cycles"]) {
        require(e.contains("word") && e["word"].is_string() && e.contains("slots") && e["slots"].is_array(),
                "cycle entry needs word and slots");
        CycleComponent cc{Cycle(e["word"].get<std::string>()), {}};
        for (const auto& s : e["slots"])
            cc.slots.push_back(interval_set_from_json(s));
        require(cc.slots.size() == cc.cycle.length(), "slot count differs from cycle length");
        out.cycles.push_back(std::move(cc));
    }
    return out;
}

Json to_json(const DilationReport& r)
{
    Json chains = Json::array();
    for (const auto& t : r.chains)
        chains.push_back({
            {"component", t.component},
            {"dilates_disjoint", t.dilates_disjoint},
            {"covers_window", t.covers_window},
            {"closure_certified", t.closure_certified},
            {"separation_bound", t.separation_bound},
        });
    Json out = {
        {"translation_tiling", r.translation_tiling},
        {"translation_measure", r.translation_measure.str()},
        {"dilation_tiling", r.dilation_tiling},
        {"chains", chains},
        {"j_window", r.j_window},
    };
    out["real_matches_P"] = r.real_matches_P ? Json(*r.real_matches_P) : Json(nullptr);
    out["orthonormal"] = r.orthonormal;
    return out;
}

Json to_json(const ComplementReport& r)
{
    return {
        {"E", to_json(r.E)},
        {"F_prime_mod1", to_json(r.F_prime_mod1)},
        {"translation_tiling", r.translation_tiling},
        {"dilates_disjoint", r.dilates_disjoint},
        {"j_check", r.j_check},
        {"total_measure", r.total_measure.str()},
    };
}

Json to_json(const GramReport& r)
{
    return {
        {"smallest_eigenvalue", r.smallest_eigenvalue},
        {"dimension", r.dimension},
        {"max_abs_entry", r.max_abs_entry},
        {"hermitian_defect", r.hermitian_defect},
        {"psd", r.psd},
        {"violations", strings(r.violations)},
    };
}

Json to_json(const InvarianceReport& r)
{
    return {
        {"samples", r.samples},
        {"max_deviation_inv1", r.max_deviation_inv1},
        {"max_deviation_inv2", r.max_deviation_inv2},
        {"failures", r.failures},
        {"passed", r.passed},
    };
}

Json to_json(const PathsResult& r)
{
    return {
        {"partition", to_json(r.graph)},
        {"cycles", cycle_list(r.cycles)},
        {"paths", to_json(r.paths)},
        {"density", to_json(r.density)},
    };
}

Json to_json(const DilationResult& r)
{
    return {
        {"wavelet", to_json(r.wavelet)},
        {"F", to_json(r.scaling.F)},
        {"filter", to_json(r.filter)},
        {"cycles", cycle_list(r.dynamics.cycles)},
        {"paths", to_json(r.dynamics.paths)},
        {"phi_tilde", to_json(r.phi_tilde)},
        {"psi_tilde", to_json(r.psi_tilde)},
        {"verification", to_json(r.report)},
    };
}

} // namespace pdil
