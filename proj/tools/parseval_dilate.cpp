// parseval-dilate: command-line front end for the dilation pipeline.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pdil/serialize.hpp"
#include "pdil/svg.hpp"

using namespace pdil;

namespace {

struct Options {
    std::string P;
    std::string G;
    std::string d_set;
    bool d_default = false;
    std::string d_cycle;
    long j_window = 10;
    bool json = false;
    bool text = false;
    std::string svg;
    std::string gram = "2,3";
    long samples = 200;
};

IntervalSet parse_set(const std::string& flag, const std::string& text)
{
    try {
        return IntervalSet::parse(text);
    } catch (const ParseError& e) {
        throw ParseError(e.position(), "in " + flag + ": " + e.detail());
    }
}

DStrategy strategy_of(const Options& o)
{
    if (!o.d_set.empty())
        return DStrategy::explicit_set(parse_set("--d-set", o.d_set));
    if (!o.d_cycle.empty()) {
        check_binary(o.d_cycle);
        return DStrategy::cycle_seeded(o.d_cycle);
    }
    return DStrategy::lower_half();
}

std::pair<long, long> parse_gram(const std::string& text)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw ParseError(text.size(), "expected J,K in --gram");
    try {
        std::size_t used = 0;
        const long J = std::stol(text.substr(0, comma), &used);
        if (used != comma)
            throw ParseError(used, "malformed J in --gram");
        const long K = std::stol(text.substr(comma + 1), &used);
        if (used != text.size() - comma - 1)
            throw ParseError(comma + 1 + used, "malformed K in --gram");
        if (J < 0 || K < 0)
            throw ParseError(0, "negative bound in --gram");
        return {J, K};
    } catch (const std::logic_error&) {
        throw ParseError(0, "malformed --gram value");
    }
}

std::string yes(bool b)
{
    return b ? "yes" : "no";
}

void print_components(std::ostream& os, const std::string& name, const ComponentFunction& c)
{
    os << name << "\n  real        " << c.real << "\n";
    for (const auto& cc : c.cycles)
        for (std::size_t j = 0; j < cc.slots.size(); ++j)
            os << "  " << cc.cycle.word() << " slot " << j << "  " << cc.slots[j] << "\n";
}

void print_paths(std::ostream& os, const PathsResult& r)
{
    os << "cycles\n";
    for (const auto& c : r.cycles) {
        os << "  " << c.word() << " :";
        for (const auto& p : c.points())
            os << " " << p;
        os << "\n";
    }
    os << "chosen paths\n";
    for (const auto& pp : r.paths.pieces)
        os << "  " << pp.piece << "  " << pp.path.str() << "\n";
    os << "density (ii) " << yes(r.density.condition_ii) << ", (v) " << yes(r.density.condition_v) << "\n";
}

struct Output {
    Json json;
    std::string text;
    int code = 0;
};

Output run_verify(const Options& o)
{
    const IntervalSet P = parse_set("-P", o.P);
    const auto r = verify_wavelet_set(P, o.j_window);
    std::ostringstream t;
    t << "multiplicative tile   " << yes(r.is_multiplicative_tile) << "\n"
      << "translation simple    " << yes(r.is_translation_simple) << "\n"
      << "covers line           " << yes(r.covers_line) << "\n"
      << "Parseval              " << yes(r.is_parseval) << "\n"
      << "orthonormal           " << yes(r.is_orthonormal) << "\n";
    return {to_json(r), t.str(), r.is_parseval ? 0 : 1};
}

Output run_scaling(const Options& o)
{
    const auto d = scaling_set(parse_set("-P", o.P));
    std::ostringstream t;
    t << "F = " << d.F << "\nF translation simple: " << yes(d.F_is_translation_simple) << "\n";
    return {to_json(d), t.str(), 0};
}

Output run_filter(const Options& o)
{
    const DStrategy strategy = strategy_of(o);
    const auto d = scaling_set(parse_set("-P", o.P));
    const auto f = build_filter(d.F, strategy);
    std::ostringstream t;
    t << "F          " << d.F << "\nM          " << f.M << "\ntau(F/2)   " << f.tau_F_half << "\nC          "
      << f.C << "\nD          " << f.D << "\n";
    return {Json{{"F", to_json(d.F)}, {"filter", to_json(f)}}, t.str(), 0};
}

Output run_paths(const Options& o)
{
    const DStrategy strategy = strategy_of(o);
    const auto d = scaling_set(parse_set("-P", o.P));
    const auto f = build_filter(d.F, strategy);
    const auto r = analyze_filter(f.M, d.F);
    std::ostringstream t;
    t << "M = " << f.M << "\n";
    print_paths(t, r);
    Json j = to_json(r);
    j["M"] = to_json(f.M);
    return {j, t.str(), 0};
}

Output run_dilate(const Options& o)
{
    const DStrategy strategy = strategy_of(o);
    const IntervalSet P = parse_set("-P", o.P);
    const auto r = dilate_wavelet_set(P, strategy, o.j_window);
    if (!o.svg.empty()) {
        auto rows = component_rows(r.phi_tilde, "phi");
        const auto psi_rows = component_rows(r.psi_tilde, "psi");
        rows.insert(rows.end(), psi_rows.begin(), psi_rows.end());
        std::ofstream out(o.svg);
        if (!out)
            throw Error(ErrorKind::Usage, "cannot write " + o.svg);
        out << render_svg(rows, "P = " + P.str());
    }
    std::ostringstream t;
    t << "F = " << r.scaling.F << "\nM = " << r.filter.M << "\n";
    print_paths(t, r.dynamics);
    print_components(t, "phi~", r.phi_tilde);
    print_components(t, "psi~", r.psi_tilde);
    t << "translation tiling " << yes(r.report.translation_tiling) << ", dilation tiling "
      << yes(r.report.dilation_tiling) << ", orthonormal " << yes(r.report.orthonormal) << "\n";
    return {to_json(r), t.str(), r.report.orthonormal ? 0 : 1};
}

Output run_complement(const Options& o)
{
    const IntervalSet P = parse_set("-P", o.P);
    const IntervalSet G = o.G.empty() ? shannon_set() : parse_set("--G", o.G);
    const auto c = semiorthogonal_complement(P, G);
    std::ostringstream t;
    t << "E = mod1(P)   " << c.report.E << "\nF'            " << c.F_prime << "\nmod1(F')      "
      << c.report.F_prime_mod1 << "\ntiling " << yes(c.report.translation_tiling) << ", dilates disjoint "
      << yes(c.report.dilates_disjoint) << "\n";
    const bool ok = c.report.translation_tiling && c.report.dilates_disjoint;
    return {Json{{"F_prime", to_json(c.F_prime)}, {"report", to_json(c.report)}}, t.str(), ok ? 0 : 1};
}

Output run_gram(const Options& o)
{
    const auto [J, K] = parse_gram(o.gram);
    const IntervalSet P = parse_set("-P", o.P);
    const auto g = analyze_gram(complement_gram(P, J, K));
    const auto inv = invariance_check(P, o.samples);
    std::ostringstream t;
    t << "dimension            " << g.dimension << "\nsmallest eigenvalue  " << g.smallest_eigenvalue
      << "\nmax |entry|          " << g.max_abs_entry << "\ninvariance           "
      << (inv.passed ? "pass" : "fail") << " (" << inv.samples << " samples)\n";
    return {Json{{"gram", to_json(g)}, {"invariance", to_json(inv)}}, t.str(), 0};
}

Json error_json(const Error& e)
{
    Json j{{"error", to_string(e.kind())}, {"message", e.what()}};
    if (const auto* ic = dynamic_cast<const InvalidCompletion*>(&e))
        j["offending"] = to_json(ic->offending());
    if (const auto* ns = dynamic_cast<const NotSubordinated*>(&e))
        j["counterexample"] = to_json(ns->counterexample());
    if (const auto* up = dynamic_cast<const UnresolvedPath*>(&e))
        j["path"] = up->path().str();
    if (const auto* pe = dynamic_cast<const ParseError*>(&e))
        j["position"] = pe->position();
    return j;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact dilation toolkit for Parseval wavelet sets given as interval unions"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-P", o.P, "wavelet set, e.g. \"[-1/4,-1/8)u[1/8,1/4)\"")->required();
        sub->add_option("--j-window", o.j_window, "dilation window for tiling checks")->check(CLI::PositiveNumber);
        auto* json = sub->add_flag("--json", o.json, "JSON output (default)");
        sub->add_flag("--text", o.text, "human-readable output")->excludes(json);
    };
    auto add_strategy = [&](CLI::App* sub) {
        auto* set = sub->add_option("--d-set", o.d_set, "explicit completion D of the undecided zone");
        auto* def = sub->add_flag("--d-default", o.d_default, "default completion (undecided zone below 1/2)");
        auto* cyc = sub->add_option("--d-cycle", o.d_cycle, "completion seeded by a cycle word");
        set->excludes(def)->excludes(cyc);
        def->excludes(cyc);
    };

    auto* verify = app.add_subcommand("verify", "check the Parseval wavelet set conditions");
    auto* scaling = app.add_subcommand("scaling", "compute the scaling set F");
    auto* filter = app.add_subcommand("filter", "build the QMF filter set M");
    auto* paths = app.add_subcommand("paths", "chosen paths and cycles of the filter");
    auto* dilate = app.add_subcommand("dilate", "orthonormal dilation of the wavelet set");
    auto* complement = app.add_subcommand("complement", "semi-orthogonal complement inside L2(R)");
    auto* gram = app.add_subcommand("gram", "complement Gram matrix and kernel invariance");
    for (auto* sub : {verify, scaling, filter, paths, dilate, complement, gram})
        add_common(sub);
    for (auto* sub : {filter, paths, dilate})
        add_strategy(sub);
    dilate->add_option("--svg", o.svg, "write a figure of the component supports");
    complement->add_option("--G", o.G, "orthonormal wavelet set hosting the complement (default Shannon)");
    gram->add_option("--gram", o.gram, "truncation J,K of the index box");
    gram->add_option("--samples", o.samples, "sampled index tuples for the invariance check")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Output out;
    try {
        if (*verify)
            out = run_verify(o);
        else if (*scaling)
            out = run_scaling(o);
        else if (*filter)
            out = run_filter(o);
        else if (*paths)
            out = run_paths(o);
        else if (*dilate)
            out = run_dilate(o);
        else if (*complement)
            out = run_complement(o);
        else
            out = run_gram(o);
    } catch (const Error& e) {
        const bool usage = e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::Usage;
        std::cerr << "error: " << e.what() << "\n";
        std::cout << error_json(e).dump(2) << "\n";
        return usage ? 2 : 1;
    }

    if (o.text)
        std::cout << out.text;
    else
        std::cout << out.json.dump(2) << "\n";
    return out.code;
}
