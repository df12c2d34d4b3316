#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "pdil/serialize.hpp"

using namespace pdil;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

/// Runs the CLI with stderr discarded.
Run cli(const std::string& args)
{
    const std::string cmd = std::string(PDIL_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

const char* kTwoCycle = R"x(dilate -P "[-1/4,-1/8)u[1/8,1/4)" --d-set "[1/4,3/8)u[5/8,3/4)")x";
const char* kThreeCycle = R"x(dilate -P "[-1/4,-1/8)u[1/8,1/4)" --d-set "[1/8,3/8)")x";

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("verify exit codes")
    {
        const auto sh = cli(R"x(verify -P "[-1,-1/2)u[1/2,1)")x");
        CHECK(sh.code == 0);
        CHECK(Json::parse(sh.out)["is_orthonormal"] == true);
        CHECK(cli(R"x(verify -P "[0,2)")x").code == 1);
    }

    TEST_CASE("usage and parse errors exit 2")
    {
        CHECK(cli("verify").code == 2);
        CHECK(cli("bogus -P \"[0,1)\"").code == 2);
        const auto bad = cli("verify -P '[0,1)x'");
        CHECK(bad.code == 2);
        const Json j = Json::parse(bad.out);
        CHECK(j["error"] == "ParseError");
        CHECK(j["position"] == 5);
        CHECK(cli(R"x(dilate -P "[0,1)" --d-set "[0,1)" --d-default)x").code == 2);
        CHECK(cli(R"x(gram -P "[-1,-1/2)u[1/2,1)" --gram 2)x").code == 2);
        CHECK(cli(R"x(paths -P "[-1/4,-1/8)u[1/8,1/4)" --d-cycle 10a)x").code == 2);
        CHECK(cli(R"x(PARSEVAL_DILATE_MAX_SPLITS=abc )x" + std::string(PDIL_CLI) + R"x( paths -P "[-1,-1/2)u[1/2,1)")x")
                  .code
              != 0);
    }

    TEST_CASE("mathematical failures exit 1 with a structured error")
    {
        const auto r = cli(R"x(filter -P "[-1/4,-1/8)u[1/8,1/4)" --d-set "[1/8,1/4)")x");
        CHECK(r.code == 1);
        const Json j = Json::parse(r.out);
        CHECK(j["error"] == "InvalidCompletion");
        CHECK(interval_set_from_json(j["offending"]) == IntervalSet::parse("[1/4,3/8)u[3/4,7/8)"));
        CHECK(cli(R"x(scaling -P "[0,2)")x").code == 1);
    }

    TEST_CASE("dilate reproduces the two- and three-cycle dilations")
    {
        const auto r1 = cli(kTwoCycle);
        REQUIRE(r1.code == 0);
        const Json j1 = Json::parse(r1.out);
        const auto psi1 = component_function_from_json(j1["psi_tilde"]);
        CHECK(psi1.real == IntervalSet::parse("[-1/4,-1/8)u[1/8,1/4)"));
        CHECK(psi1.cycles.at(0).slots.at(0) == IntervalSet::parse("[-1/3,-5/24)u[1/6,5/12)"));
        CHECK(psi1.cycles.at(0).slots.at(1) == IntervalSet::parse("[-5/12,-1/6)u[5/24,1/3)"));

        const auto r2 = cli(kThreeCycle);
        REQUIRE(r2.code == 0);
        const auto psi2 = component_function_from_json(Json::parse(r2.out)["psi_tilde"]);
        CHECK(psi2.cycles.at(0).slots.size() + 1 == 4);
        CHECK(psi2.cycles.at(0).slots.at(1) == IntervalSet::parse("[17/56,3/7)"));
    }

    TEST_CASE("output is deterministic")
    {
        for (const std::string args :
             {std::string(kTwoCycle), std::string(kThreeCycle), std::string(R"x(gram -P "[-1/4,-1/8)u[1/8,1/4)" --gram 1,2)x"),
              std::string(R"x(complement -P "[-1/4,-1/8)u[1/8,1/4)")x"),
              std::string(R"x(paths -P "[-1/16,-1/32)u[1/32,1/16)" --d-cycle 1001100 --text)x")}) {
            const auto a = cli(args), b = cli(args);
            CHECK(a.code == 0);
            CHECK(a.out == b.out);
            CHECK_FALSE(a.out.empty());
        }
    }

    TEST_CASE("JSON output reparses to the same bytes")
    {
        const auto r = cli(kThreeCycle);
        CHECK(Json::parse(r.out).dump(2) + "\n" == r.out);
    }

    TEST_CASE("svg figure is written")
    {
        const std::string path = "cli_test_figure.svg";
        std::remove(path.c_str());
        REQUIRE(cli(std::string(kThreeCycle) + " --svg " + path).code == 0);
        std::ifstream in(path);
        std::stringstream ss;
        ss << in.rdbuf();
        CHECK(ss.str().find("<svg") != std::string::npos);
        CHECK(ss.str().find("psi 100:0") != std::string::npos);
        in.close();
        std::remove(path.c_str());
    }
}
