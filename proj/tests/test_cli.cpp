#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <string>

#include "minifold/driver.hpp"

using namespace minifold;

namespace {

struct CmdResult {
    int exit_code;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    const char* bin = std::getenv("MINIFOLD_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return CmdResult{WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("node command: report fields and flat pairing value") {
    CmdResult r = run_cli("node --p 2 --q 3 --base 1,0,0,0,0 --trunc 12");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("schema_version") == "1");
    CHECK(j.at("all_pass") == true);
    // <dt1, dt1> = 2 appears in the flat pairing matrix at the t-slot
    CHECK(j.at("artifacts").at("flat_pairing_matrix")[1][1] == "2");
    // no floating point numbers anywhere in rationals: entries are strings
    CHECK(j.at("artifacts").at("pairing_total")[0][4].is_string());
}

TEST_CASE("determinism: identical config and seed give identical bytes") {
    const std::string cmd = "node --p 2 --q 2 --seed 7 --samples 3";
    CmdResult a = run_cli(cmd);
    CmdResult b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());

    CmdResult c = run_cli("curve --p 2 --q 2 --r 2 --seed 5");
    CmdResult d = run_cli("curve --p 2 --q 2 --r 2 --seed 5");
    CHECK(c.out == d.out);
}

TEST_CASE("exit codes") {
    // on the discriminant -> usage error
    CHECK(run_cli("node --p 2 --q 2 --base 0,0,0,0").exit_code == exit_usage);
    // malformed rational -> usage error
    CHECK(run_cli("node --p 2 --q 2 --base 1,x,0,0").exit_code == exit_usage);
    // unknown flag -> usage error
    CHECK(run_cli("node --bogus 3").exit_code == exit_usage);
    // mutation -> check failure
    CHECK(run_cli("verify --suite node-only --mutate --samples 2").exit_code ==
          exit_check_failed);
}

TEST_CASE("curve command output") {
    CmdResult r = run_cli("curve --p 3 --q 2 --r 2 --seed 3");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("artifacts").at("dim_Mf") == 8);
    auto unf = j.at("artifacts").at("unfolding_basis");
    CHECK(unf.size() == 5);
    std::vector<std::string> mons;
    for (const auto& m : unf) mons.push_back(m.get<std::string>());
    std::sort(mons.begin(), mons.end());
    CHECK(mons == std::vector<std::string>{"1", "x", "x^2", "y", "z"});
}

TEST_CASE("icis command") {
    CmdResult r = run_cli("icis --g y --f x^3");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("artifacts").at("dim_Mf") == 2);

    CmdResult r2 = run_cli("icis --g x^2+y^2+z^2 --f z");
    Json j2 = Json::parse(r2.out);
    CHECK(j2.at("artifacts").at("dim_Mf") == 2);

    CHECK(run_cli("icis --g \"y +\" --f x").exit_code == exit_usage);
}

TEST_CASE("verify suites") {
    CHECK(run_cli("verify --suite icis-only").exit_code == 0);
    CHECK(run_cli("verify --suite bogus").exit_code == exit_usage);
}

TEST_CASE("MINIFOLD_TRUNC environment default") {
    const char* bin = std::getenv("MINIFOLD_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string("MINIFOLD_TRUNC=13 ") + bin +
                      " node --p 2 --q 2 --base 1,0,0,0 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    pclose(pipe);
    Json j = Json::parse(out);
    CHECK(j.at("config").at("trunc") == 13);
}

TEST_CASE("config file mirrors flags") {
    std::string path = "/tmp/minifold_cfg_test.json";
    {
        FILE* f = fopen(path.c_str(), "w");
        REQUIRE(f != nullptr);
        fputs("{\"family\":\"node\",\"p\":2,\"q\":2,\"base\":[\"1\",\"0\",\"0\",\"0\"],"
              "\"seed\":9}\n",
              f);
        fclose(f);
    }
    CmdResult a = run_cli("node --config " + path);
    CHECK(a.exit_code == 0);
    Json j = Json::parse(a.out);
    CHECK(j.at("base_point")[0] == "1");
    // flags override the file
    CmdResult b = run_cli("node --config " + path + " --q 3 --base 1,0,0,0,0");
    CHECK(b.exit_code == 0);
    Json jb = Json::parse(b.out);
    CHECK(jb.at("config").at("q") == 3);
    std::remove(path.c_str());
}

namespace {
bool no_floats(const Json& j) {
    if (j.is_number_float()) return false;
    if (j.is_object() || j.is_array())
        for (const auto& e : j)
            if (!no_floats(e)) return false;
    return true;
}
}  // namespace

TEST_CASE("report schema carries no floating-point values") {
    RunConfig cfg;
    cfg.family = "node";
    cfg.p = 2;
    cfg.q = 3;
    cfg.seed = 4;
    cfg.samples = 2;
    RunResult rr = cmd_node(cfg);
    CHECK(no_floats(rr.report));

    RunConfig c2;
    c2.family = "curve";
    c2.p = c2.q = c2.r = 2;
    c2.seed = 4;
    CHECK(no_floats(cmd_curve(c2).report));
}

TEST_CASE("library-level determinism of cmd_verify") {
    RunConfig cfg;
    cfg.family = "verify";
    cfg.suite = "icis-only";
    RunResult a = cmd_verify(cfg);
    RunResult b = cmd_verify(cfg);
    CHECK(report_to_string(a.report) == report_to_string(b.report));
    CHECK(a.exit_code == 0);
}
