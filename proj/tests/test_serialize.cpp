#include "doctest.h"

#include "pdil/errors.hpp"
#include "pdil/serialize.hpp"
#include "pdil/svg.hpp"
#include "support.hpp"

using namespace pdil;
using namespace testing;

TEST_SUITE("serialize")
{
    TEST_CASE("interval sets roundtrip")
    {
        for (int trial = 0; trial < 500; ++trial) {
            const IntervalSet a(random_raw(static_cast<std::size_t>(uniform(0, 6)), 1000));
            const Json j = Json::parse(to_json(a).dump());
            CHECK(interval_set_from_json(j) == a);
        }
        CHECK(to_json(S("[-1/4,-1/8)")).dump() == R"([["-1/4","-1/8"]])");
        CHECK_THROWS_AS(interval_set_from_json(Json::parse(R"([["1","x"]])")), ParseError);
        CHECK_THROWS_AS(interval_set_from_json(Json::parse(R"([[1,2]])")), Error);
    }

    TEST_CASE("component functions and paths roundtrip")
    {
        const auto r = dilate_wavelet_set(S("[-1/4,-1/8)u[1/8,1/4)"), DStrategy::explicit_set(S("[1/8,3/8)")));
        for (const auto& c : {r.phi_tilde, r.psi_tilde}) {
            const auto back = component_function_from_json(Json::parse(to_json(c).dump()));
            CHECK(back.real == c.real);
            REQUIRE(back.cycles.size() == c.cycles.size());
            CHECK(back.cycles[0].cycle.word() == c.cycles[0].cycle.word());
            CHECK(back.cycles[0].slots == c.cycles[0].slots);
        }
        const auto paths = piecewise_path_from_json(Json::parse(to_json(r.dynamics.paths).dump()));
        REQUIRE(paths.pieces.size() == r.dynamics.paths.pieces.size());
        for (std::size_t i = 0; i < paths.pieces.size(); ++i) {
            CHECK(paths.pieces[i].piece == r.dynamics.paths.pieces[i].piece);
            CHECK(paths.pieces[i].path == r.dynamics.paths.pieces[i].path);
        }
        Json broken = to_json(r.psi_tilde);
        broken["cycles"][0]["slots"].erase(0);
        CHECK_THROWS_AS(component_function_from_json(broken), Error);
    }

    TEST_CASE("dilation result layout")
    {
        const auto r = dilate_wavelet_set(S("[-1/4,-1/8)u[1/8,1/4)"), DStrategy::explicit_set(S("[1/4,3/8)u[5/8,3/4)")));
        const Json j = to_json(r);
        std::vector<std::string> keys;
        for (const auto& [k, v] : j.items())
            keys.push_back(k);
        CHECK(keys == std::vector<std::string>{"wavelet", "F", "filter", "cycles", "paths", "phi_tilde", "psi_tilde",
                                               "verification"});
        CHECK(j["verification"]["orthonormal"] == true);
        CHECK(j["cycles"][2]["points"] == Json::array({"1/3", "2/3"}));
        CHECK(to_json(r).dump() == j.dump());
    }

    TEST_CASE("svg figure")
    {
        const auto r = dilate_wavelet_set(S("[-1/4,-1/8)u[1/8,1/4)"), DStrategy::explicit_set(S("[1/8,3/8)")));
        const auto rows = component_rows(r.psi_tilde, "psi");
        REQUIRE(rows.size() == 4);
        CHECK(rows[0].first == "psi real");
        CHECK(rows[3].second.empty());
        const std::string svg = render_svg(rows, "test");
        CHECK(svg.rfind("<svg", 0) == 0);
        CHECK(svg.find("</svg>") != std::string::npos);
        CHECK(svg.find("psi real") != std::string::npos);
        CHECK(render_svg(rows, "test") == svg);
    }
}
