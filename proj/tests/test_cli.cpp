#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args)
{
    std::string cmd = std::string(SLICEFORGE_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, n);
    int rc = pclose(pipe);
    r.exit_code = WEXITSTATUS(rc);
    return r;
}

std::string tmp_path(const std::string& name)
{
    return std::string("/tmp/sliceforge_test_") + name;
}

}  // namespace

TEST_CASE("slices subcommand matches the stated wedges")
{
    RunResult r = run("slices --spectrum kq --qmax 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "s_0 kq = MZ\n"
          "s_1 kq = S^{1,1}MZ/2\n"
          "s_2 kq = S^{2,2}MZ/2 v S^{4,2}MZ\n"
          "s_3 kq = S^{3,3}MZ/2 v S^{5,3}MZ/2\n");
}

TEST_CASE("mw reduce evaluates the hyperbolic relation to zero")
{
    RunResult r = run("mw reduce --field F3 \"(2 + [-1] eta) eta\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0\n");
}

TEST_CASE("line1 reports pi_{2,1} = Z/2")
{
    RunResult r = run("line1 --field F5 --n 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("value (up to extensions): Z/2") != std::string::npos);
}

TEST_CASE("e2 on an empty sub-window emits an empty entry list")
{
    // w > p throughout the window: every cell is forced to vanish
    RunResult r = run("e2 --field C --spectrum kq --pmin -4 --pmax -2 --wmin 0 --wmax 8 "
                      "--format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("e2").empty());
    RunResult r1 = run("e1 --field C --spectrum kq --pmin -4 --pmax -2 --wmin 0 --wmax 8 "
                       "--format json");
    CHECK(nlohmann::json::parse(r1.out).at("entries").empty());
}

TEST_CASE("identical invocations produce byte-identical outputs")
{
    for (const std::string& args :
         {std::string("chart --field F3 --spectrum kq --format json"),
          std::string("chart --field R --spectrum kq --format svg"),
          std::string("e2 --field C --spectrum kw --format txt"),
          std::string("line0 --field F5 --n 0 --format json"),
          std::string("mw gw-table 5")}) {
        RunResult a = run(args);
        RunResult b = run(args);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
}

TEST_CASE("chart json round-trips through e2 --from-json")
{
    std::string path = tmp_path("e1.json");
    RunResult direct = run("e1 --field F3 --spectrum kq --format json --out " + path);
    REQUIRE(direct.exit_code == 0);
    RunResult via = run("e2 --from-json " + path + " --format json");
    RunResult straight = run("e2 --field F3 --spectrum kq --format json");
    CHECK(via.exit_code == 0);
    CHECK(via.out == straight.out);
    std::remove(path.c_str());
}

TEST_CASE("exit codes")
{
    SUBCASE("usage errors exit 1")
    {
        CHECK(run("e1 --field F3 --spectrum bogus").exit_code == 1);
        CHECK(run("nonsense").exit_code == 1);
        CHECK(run("mw reduce --field F3 \"[0]\"").exit_code == 1);
        CHECK(run("mw reduce --field F3 \"(2\"").exit_code == 1);
        CHECK(run("mw gw-table 53").exit_code == 1);
        CHECK(run("e2 --field F3 --spectrum kgl").exit_code == 1);
        CHECK(run("e1 --field F4").exit_code == 1);  // even prime power
    }
    SUBCASE("out-of-window requests exit 3")
    {
        CHECK(run("e1 --field R --spectrum kq --window -44..48").exit_code == 3);
    }
    SUBCASE("strict mode escalates undecidable stability to exit 3")
    {
        CHECK(run("e2 --field R --spectrum kq --strict").exit_code == 3);
        CHECK(run("e2 --field F3 --spectrum kq --strict").exit_code == 0);
    }
}

TEST_CASE("selftest exits zero and enumerates suites")
{
    RunResult r = run("selftest");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("suite abgrp-snf: PASS") != std::string::npos);
    CHECK(r.out.find("suite determinism: PASS") != std::string::npos);
    CHECK(r.out.find("selftest: all suites passed") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("environment variable overrides the table path")
{
    // pointing the tables at an empty directory makes real-field pages fail
    std::string dir = tmp_path("empty_tables");
    std::string cmd = "mkdir -p " + dir;
    REQUIRE(std::system(cmd.c_str()) == 0);
    std::string run_cmd = std::string("SLICE_FORGE_TABLES=") + dir + " " + SLICEFORGE_BIN +
                          " e1 --field R --spectrum kq >/dev/null 2>&1";
    int rc = std::system(run_cmd.c_str());
    CHECK(WEXITSTATUS(rc) != 0);
}
