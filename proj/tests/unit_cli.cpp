#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mixedtoric/parser.hpp"
#include "mixedtoric/report.hpp"

using namespace mixedtoric;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(MIXEDTORIC_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string corpus(const std::string& name) {
    return std::string(MIXEDTORIC_CORPUS_DIR) + "/" + name;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("analyze reports the degrees and faces") {
    RunResult r =
        run_cli("analyze --poly " + corpus("j10_case4_k3.mp") + " --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("radial degree: 6") != std::string::npos);
    CHECK(r.output.find("polar degree: 2") != std::string::npos);
    CHECK(r.output.find("strongly mixed: true") != std::string::npos);
}

TEST_CASE("analyze the squared norm") {
    RunResult r = run_cli("analyze --poly " + corpus("rho.mp") + " --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("radial degree: 2") != std::string::npos);
    CHECK(r.output.find("polar degree: 0") != std::string::npos);
}

TEST_CASE("exit codes: usage, parse, math domain") {
    CHECK(run_cli("analyze").exit_code == 1);              // missing --poly
    CHECK(run_cli("bogus-subcommand").exit_code == 1);
    CHECK(run_cli("analyze --poly \"z1 +\"").exit_code == 2);
    CHECK(run_cli("analyze --poly 0").exit_code == 3);     // zero polynomial
}

TEST_CASE("resolve chart output reparses to the expected transforms") {
    RunResult r = run_cli("resolve --poly " + corpus("j10_case4_k3.mp") +
                          " --chart S,E1 --format json");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.output);
    CHECK(parse(j["reduced"].get<std::string>(), {}) ==
          parse("1 - 6*u1*u2^2 + 11*u1*~u1*u2^2*~u2^2 - 6*u1^2*~u1*u2^4*~u2^2",
                {}));
    RunResult r2 = run_cli("resolve --poly " + corpus("j10_case4_k3.mp") +
                           " --chart P,E2 --format json");
    REQUIRE(r2.exit_code == 0);
    Json j2 = Json::parse(r2.output);
    CHECK(parse(j2["reduced"].get<std::string>(), {}) ==
          parse("u2^2*~u2 - 6*u2*~u2 + 11*u2 - 6", {}));
    CHECK(j2["exceptional"]["nu"] == Json::array({4, 0}));
    CHECK(j2["exceptional"]["mu"] == Json::array({2, 0}));
}

TEST_CASE("resolve verdict line") {
    RunResult r = run_cli("resolve --poly " + corpus("j10_case4_k3.mp") +
                          " --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("L(Sigma*) empty: true") != std::string::npos);
}

TEST_CASE("parameter binding on the command line") {
    RunResult r = run_cli(
        "analyze --poly \"(z2 - z1^2)*(z2 - 2*z1^2)*(z2 - k*z1^2)\" "
        "--param k=7/2 --format json");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.output);
    CHECK(j["certificate"]["radial"]["degree"] == 6);
    CHECK(j["certificate"]["polar"]["degree"] == 6);
}

TEST_CASE("certify text output carries the verdicts") {
    RunResult r = run_cli("certify --poly " + corpus("rho.mp") +
                          " --starts 100 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("Newton non-degenerate: true") != std::string::npos);
    CHECK(r.output.find("strongly Newton non-degenerate: false") !=
          std::string::npos);
}

TEST_CASE("emitted polynomial strings round-trip") {
    RunResult r = run_cli("analyze --poly " + corpus("j10_case2_k3.mp") +
                          " --format json");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.output);
    std::string printed = j["polynomial"].get<std::string>();
    CHECK(to_string(parse(printed, {})) == printed);
}

TEST_CASE("svg output files") {
    std::string dir = "cli_svg_out";
    RunResult r = run_cli("analyze --poly " + corpus("j10_case4_k3.mp") +
                          " --format svg --out " + dir);
    CHECK(r.exit_code == 0);
    std::ifstream newton(dir + "/newton.svg"), fan(dir + "/fan.svg");
    std::stringstream ns;
    ns << newton.rdbuf();
    CHECK(ns.str().find("<svg") != std::string::npos);
    CHECK(fan.good());
}

TEST_CASE("json reports are byte-identical across runs") {
    std::string args = "certify --poly " + corpus("j10_case4_k3.mp") +
                       " --starts 200 --seed 42 --format json";
    RunResult a = run_cli(args), b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

}
