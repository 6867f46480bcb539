// End-to-end tests of the command-line tool: each case launches the real
// binary (path in TRIHERM_BIN) as a subprocess and checks stdout plus the
// exit code.  Anything parallel is also checked for byte-identical output
// across job counts.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

// runs `TRIHERM_BIN <args>` with stderr dropped, capturing stdout
RunResult run_cli(const std::string& args, const std::string& env = "") {
    const char* bin = std::getenv("TRIHERM_BIN");
    if (!bin) throw std::runtime_error("TRIHERM_BIN is not set");
    std::string cmd = env + (env.empty() ? "" : " ") + bin + " " + args +
                      " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("cannot launch " + cmd);

    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

const char* kOrigin =
    R"({"x111":"0","x211":["0","0","0"],"x122":["0","0","0"],"x222":"0"})";
const char* kUnitCorners =
    R"({"x111":"1","x211":["0","0","0"],"x122":["0","0","0"],"x222":"1"})";
const char* kMiddleSlot =
    R"({"x111":"0","x211":["0","0","0"],"x122":["1","0","0"],"x222":"0"})";
const char* kLastCorner =
    R"({"x111":"0","x211":["0","0","0"],"x122":["0","0","0"],"x222":"1"})";

std::string q(const std::string& s) { return "'" + s + "'"; }

}  // namespace

TEST_CASE("classify reports the stratum in the exit code and the label") {
    auto ss = run_cli("classify --f \"-1,-1,0\" --point " + q(kUnitCorners));
    CHECK(ss.status == 0);
    CHECK(contains(ss.out, "\"label\": \"SemiStable\""));
    CHECK(contains(ss.out, "\"witness\""));
    CHECK(contains(ss.out, "\"normalized\""));
    CHECK(contains(ss.out, "\"transcript\""));

    auto s1 = run_cli("classify --point " + q(kMiddleSlot));
    CHECK(s1.status == 1);
    CHECK(contains(s1.out, "\"label\": \"S1\""));

    auto s2 = run_cli("classify --point " + q(kLastCorner));
    CHECK(s2.status == 2);
    CHECK(contains(s2.out, "\"label\": \"S2\""));

    auto zero = run_cli("classify --point " + q(kOrigin));
    CHECK(zero.status == 3);
    CHECK(contains(zero.out, "\"label\": \"Zero\""));
}

TEST_CASE("act applies the coordinate swap") {
    const char* tau =
        R"({"t1":"1","g2":[[["0","0","0"],["1","0","0"]],[["1","0","0"],["0","0","0"]]]})";
    const char* point =
        R"({"x111":"1","x211":["0","0","0"],"x122":["0","0","0"],"x222":"2"})";
    auto r = run_cli("act --g " + q(tau) + " --point " + q(point));
    CHECK(r.status == 0);
    CHECK(contains(r.out, "\"x111\": \"2\""));
    CHECK(contains(r.out, "\"x222\": \"1\""));
}

TEST_CASE("act rejects a non-invertible group element") {
    const char* singular =
        R"({"t1":"1","g2":[[["1","0","0"],["1","0","0"]],[["1","0","0"],["1","0","0"]]]})";
    auto r = run_cli("act --g " + q(singular) + " --point " + q(kUnitCorners));
    CHECK(r.status == 65);
}

TEST_CASE("invariant emits the quadratic form and the discriminant") {
    const char* mid =
        R"({"x111":"0","x211":["1","0","0"],"x122":["1","0","0"],"x222":"0"})";
    auto r = run_cli("invariant --point " + q(mid));
    CHECK(r.status == 0);
    CHECK(contains(r.out, "\"delta\": \"-3\""));
    CHECK(contains(r.out, "\"a\""));
    CHECK(contains(r.out, "\"b\""));
    CHECK(contains(r.out, "\"c\""));

    auto corners = run_cli("invariant --point " + q(kUnitCorners));
    CHECK(contains(corners.out, "\"delta\": \"1\""));
}

TEST_CASE("census prints the frozen tallies as CSV") {
    auto r = run_cli("census --q 3 --f \"-1,-1,0\"");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "q,f,n_total,n_zero,n_ss,n_s1,n_s2\n"
          "3,\"2,2,0\",6561,1,4320,2184,56\n");
}

TEST_CASE("census output is byte-identical across job counts") {
    auto one = run_cli("census --q 3 --f \"-1,-1,0\" --jobs 1");
    auto three = run_cli("census --q 3 --f \"-1,-1,0\" --jobs 3");
    auto env = run_cli("census --q 3 --f \"-1,-1,0\"", "TRIHERM_JOBS=5");
    CHECK(one.status == 0);
    CHECK(one.out == three.out);
    CHECK(one.out == env.out);
}

TEST_CASE("orbit finds the 56-point class over F_3") {
    auto r = run_cli("orbit --q 3 --f \"-1,-1,0\" --point " + q(kLastCorner));
    CHECK(r.status == 0);
    CHECK(contains(r.out, "\"size\": 56"));
}

TEST_CASE("orbit refuses an oversized field through the cap") {
    auto r = run_cli("orbit --q 5 --f \"1,1,0\" --cap 1000 --point " +
                     q(kLastCorner));
    CHECK(r.status == 65);
}

TEST_CASE("box-count at height zero is a unit mass at zero") {
    auto r = run_cli("box-count --height 0");
    CHECK(r.status == 0);
    CHECK(r.out == "delta,count\n0,1\n");
}

TEST_CASE("box-count at height one: determinism and the strata sidecar") {
    auto one = run_cli("box-count --height 1 --jobs 1");
    CHECK(one.status == 0);
    CHECK(contains(one.out, "delta,count\n"));
    CHECK(contains(one.out, "\n0,"));  // the degenerate bucket exists

    std::string sidecar = "/tmp/triherm_test_strata.csv";
    auto two = run_cli("box-count --height 1 --jobs 2 --strata-out " + sidecar);
    CHECK(two.status == 0);
    CHECK(one.out == two.out);

    std::ifstream in(sidecar);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() ==
          "label,count\n"
          "SemiStable,6060\n"
          "S1,460\n"
          "S2,40\n"
          "Zero,1\n");
    std::remove(sidecar.c_str());
}

TEST_CASE("dedekind reports both truncations with a tail estimate") {
    auto r = run_cli("dedekind --s 2 --prime-bound 100000");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "\"s\": 2"));
    CHECK(contains(r.out, "\"prime_bound\": 100000"));
    CHECK(contains(r.out, "\"value\": 1.10999731981"));
    CHECK(contains(r.out, "\"error\": 3e-05"));
    CHECK(contains(r.out, "\"euler_product\": 1.11000011391"));

    auto again = run_cli("dedekind --s 2 --prime-bound 100000");
    CHECK(r.out == again.out);
}

TEST_CASE("principal-part prints the full pole table") {
    auto r = run_cli("principal-part --flags \"d#,d1,d2\"");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "\"8\""));
    CHECK(contains(r.out, "\"coefficient\": \"PhiHat0*Vol\""));
    CHECK(contains(r.out, "\"coefficient\": \"-Phi0*Vol\""));
    CHECK(contains(r.out, "\"coefficient\": \"Sigma1_R2PhiHat\""));
    CHECK(contains(r.out, "\"coefficient\": \"-Sk10_R1Phi + Sk10_R1PhiHat\""));
    CHECK(contains(r.out,
                   "\"coefficient\": \"-3*Sk1m1_R1Phi - 3*Sk1m1_R1PhiHat\""));
}

TEST_CASE("principal-part applies substitutions from the inputs file") {
    std::string path = "/tmp/triherm_test_inputs.json";
    {
        std::ofstream os(path);
        os << R"({"Sk1m1_R1PhiHat":"Sk1m1_R1Phi"})";
    }
    auto r = run_cli("principal-part --flags \"d#,d1,d2\" --inputs " + path);
    CHECK(r.status == 0);
    CHECK(contains(r.out, "\"coefficient\": \"-6*Sk1m1_R1Phi\""));

    {
        std::ofstream os(path);
        os << R"({"Sk1m1_R1PhiHat":"0","Sk1m1_R1Phi":"0"})";
    }
    auto gone = run_cli("principal-part --flags \"d#,d1,d2\" --inputs " + path);
    CHECK(gone.status == 0);
    CHECK(!contains(gone.out, "\"order\": 2"));
    std::remove(path.c_str());
}

TEST_CASE("principal-part with no flags is the empty table") {
    auto r = run_cli("principal-part");
    CHECK(r.status == 0);
    CHECK(r.out == "{}\n");
}

TEST_CASE("selftest passes") {
    auto r = run_cli("selftest");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "selftest passed"));
    CHECK(!contains(r.out, "FAIL"));
}

TEST_CASE("usage problems exit with the usage code") {
    CHECK(run_cli("").status == 64);
    CHECK(run_cli("frobnicate").status == 64);
    CHECK(run_cli("census --f \"-1,-1,0\"").status == 64);  // missing --q
    CHECK(run_cli("--help").status == 0);
}

TEST_CASE("malformed data exits with the data code") {
    CHECK(run_cli("classify --point 'not json'").status == 65);
    CHECK(run_cli("classify --point '{\"x111\":\"1\"}'").status == 65);
    CHECK(run_cli("census --q 4 --f \"-1,-1,0\"").status == 65);
    CHECK(run_cli("census --q 9 --f \"-1,-1,0\"").status == 65);
    CHECK(run_cli("census --q 5 --f \"-1,0,0\"").status == 65);  // reducible
    CHECK(run_cli("dedekind --s 1").status == 65);
    CHECK(run_cli("dedekind --s 2 --f \"0,0,0\"").status == 65);
    CHECK(run_cli("box-count --height 1 --f \"1/2,0,0\"").status == 65);
    CHECK(run_cli("principal-part --flags dx").status == 65);
    CHECK(run_cli("principal-part --flags d1 --inputs /nonexistent.json")
              .status == 65);
}
