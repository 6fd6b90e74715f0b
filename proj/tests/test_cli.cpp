// End-to-end tests driving the installed CLI binary. The binary path arrives
// through the SQUEEZE_CLI compile definition.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

std::string bin() {
    return std::string(SQUEEZE_CLI);
}

int run(const std::string& args) {
    const std::string cmd = "\"" + bin() + "\" " + args + " > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

long line_count(const std::string& text) {
    long n = 0;
    for (const char ch : text)
        if (ch == '\n') ++n;
    return n;
}

nlohmann::json eval_json(const std::string& state_args) {
    const std::string path = "/tmp/sqz_cli_eval.json";
    REQUIRE(run("squeeze-eval " + state_args + " --output " + path) == 0);
    return nlohmann::json::parse(slurp(path));
}

}  // namespace

TEST_CASE("eval reports bosonic squeezing") {
    const auto vac = eval_json("--state fock:0");
    CHECK(vac["zeta"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(vac["xi"].is_null());

    const auto cat = eval_json("--state cat:0.7995:+");
    CHECK(cat["zeta"].get<double>() == doctest::Approx(0.443070915371).epsilon(1e-9));
    CHECK(cat["theta_star"].get<double>() ==
          doctest::Approx(std::numbers::pi / 2).epsilon(1e-9));
    CHECK(cat["zeta_tilde"].get<double>() < 0.0);
    CHECK(cat["mean_spin"].is_null());
}

TEST_CASE("eval reports spin squeezing") {
    const auto sc = eval_json("--state spincat:1:0.5:+");
    CHECK(sc["xi"].get<double>() == doctest::Approx(9.0 / 17.0).epsilon(1e-9));
    CHECK(sc["xi_tilde"].get<double>() == doctest::Approx(-8.0 / 17.0).epsilon(1e-9));
    CHECK(sc["xi_prime"].get<double>() == doctest::Approx(0.68).epsilon(1e-9));
    CHECK(sc["mean_spin"][2].get<double>() == doctest::Approx(-15.0 / 17.0).epsilon(1e-9));
    CHECK(sc["zeta"].is_null());

    const auto scs = eval_json("--state scs:2:0.3");
    CHECK(scs["xi"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(scs["xi_prime"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("eval invariant suites pass") {
    CHECK(run("squeeze-eval --state cat:0.7995:+ --check --output /dev/null") == 0);
    CHECK(run("squeeze-eval --state spincat:2:0.4:- --check --output /dev/null") == 0);
    CHECK(run("squeeze-eval --state coherent:0.6 --check --output /dev/null") == 0);
    CHECK(run("squeeze-eval --state dicke:2:1 --check --output /dev/null") == 0);
}

TEST_CASE("exit codes distinguish failure modes") {
    // validation problems: bad eta, malformed spec, missing required option,
    // unknown subcommand
    CHECK(run("squeeze-eval --state scs:1:1.5 --output /dev/null") == 2);
    CHECK(run("squeeze-eval --state nonsense --output /dev/null") == 2);
    CHECK(run("squeeze-eval") == 2);
    CHECK(run("no-such-command") == 2);

    // truncation rejection carries its own code
    CHECK(run("squeeze-eval --state coherent:3 --n-max 16 --output /dev/null") == 3);

    // help succeeds
    CHECK(run("--help") == 0);
    CHECK(run("dicke --help") == 0);
}

TEST_CASE("prop1 scan is deterministic and self-checking") {
    const std::string args =
        "prop1 --j-min 1 --j-max 4 --j-step 0.5 --eta-min 0.1 --eta-max 0.9 --eta-step 0.2 "
        "--check --output ";
    REQUIRE(run(args + "/tmp/sqz_cli_p1.csv") == 0);
    REQUIRE(run(args + "/tmp/sqz_cli_p2.csv") == 0);
    const std::string a = slurp("/tmp/sqz_cli_p1.csv");
    CHECK(a == slurp("/tmp/sqz_cli_p2.csv"));
    // 7 j values x 5 eta values x 2 parities + 2 header lines
    CHECK(line_count(a) == 7 * 5 * 2 + 2);
    CHECK(a.rfind("# squeeze prop1", 0) == 0);
    CHECK(a.find("j,eta,parity,xi,xi_tilde,F1,F2") != std::string::npos);
}

TEST_CASE("limit sequence passes its own checks") {
    REQUIRE(run("limit --j 5,10,20 --check --output /tmp/sqz_cli_lim.csv") == 0);
    const std::string text = slurp("/tmp/sqz_cli_lim.csv");
    CHECK(line_count(text) == 3 + 2);
    CHECK(run("limit --j 5,10,20 --parity - --check --output /dev/null") == 0);
    CHECK(run("limit --alpha2 -1 --output /dev/null") == 2);
    CHECK(run("limit --parity x --output /dev/null") == 2);
    // 2j must exceed |alpha|^2 for eta to stay inside the unit disk
    CHECK(run("limit --alpha2 2 --j 1 --output /dev/null") == 2);
}

TEST_CASE("dicke runs conserve and reproduce byte for byte across thread counts") {
    const std::string args = "dicke --atoms 4 --tau 0:3.141592653589793:16 --check --output ";
    const std::string cmd1 = "SQUEEZE_THREADS=1 \"" + bin() + "\" " + args +
                             "/tmp/sqz_cli_d1.csv > /dev/null 2>&1";
    const std::string cmd2 = "SQUEEZE_THREADS=2 \"" + bin() + "\" " + args +
                             "/tmp/sqz_cli_d2.csv > /dev/null 2>&1";
    REQUIRE(WEXITSTATUS(std::system(cmd1.c_str())) == 0);
    REQUIRE(WEXITSTATUS(std::system(cmd2.c_str())) == 0);
    const std::string a = slurp("/tmp/sqz_cli_d1.csv");
    CHECK(a == slurp("/tmp/sqz_cli_d2.csv"));
    CHECK(line_count(a) == 17 + 2);
    CHECK(a.find("tau,zeta_field,xi_atoms,xi_prime_atoms,parity,total_excitation,norm") !=
          std::string::npos);

    // the full-matrix path agrees through --check as well
    CHECK(run("dicke --atoms 2 --tau 0:3.141592653589793:8 --full-matrix --check "
              "--output /dev/null") == 0);
}

TEST_CASE("qfunc emits labeled grids and passes its checks") {
    REQUIRE(run("qfunc --atoms 2 --tau 0,1.5707963267948966 --plane atoms "
                "--grid -0.8:0.8:21 --check --output /tmp/sqz_cli_q.csv") == 0);
    const std::string text = slurp("/tmp/sqz_cli_q.csv");
    CHECK(text.rfind("# squeeze qfunc", 0) == 0);
    CHECK(text.find("\n# plane=atoms\n") != std::string::npos);
    CHECK(line_count(text) == 3 + 2 * 21 * 21);

    CHECK(run("qfunc --atoms 2 --tau 0 --plane field --grid -3:3:41 --check "
              "--output /dev/null") == 0);
    CHECK(run("qfunc --plane sideways --output /dev/null") == 2);
}
