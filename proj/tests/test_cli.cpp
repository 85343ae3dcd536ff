// Golden-output tests for the command-line front end. The binary path and
// the data/golden directories arrive through environment variables set by
// the test harness. Timing lines ("# time: ...") are stripped before
// comparison; everything else must match byte for byte.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

std::string cli_path() {
    const char* p = std::getenv("SDR_CLI");
    REQUIRE(p != nullptr);
    return p;
}

std::string source_dir() {
    const char* p = std::getenv("SDR_TEST_DIR");
    REQUIRE(p != nullptr);
    return p;
}

struct RunResult {
    int exit_code;
    std::string output;  // timing lines removed
};

RunResult run_cli(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string raw;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) raw.append(buf.data(), n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

    std::istringstream lines(raw);
    std::string line, filtered;
    while (std::getline(lines, line)) {
        std::size_t at = line.find_first_not_of(" \t");
        if (at != std::string::npos && line.compare(at, 7, "# time:") == 0) continue;
        filtered += line + "\n";
    }
    return {code, filtered};
}

std::string golden(const std::string& name) {
    std::ifstream in(source_dir() + "/golden/" + name);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::string data(const std::string& name) { return source_dir() + "/data/" + name; }

void check_golden(const std::string& args, const std::string& golden_name, int expect_exit) {
    RunResult r = run_cli(args);
    CHECK(r.exit_code == expect_exit);
    CHECK(r.output == golden(golden_name));
}

}  // namespace

TEST_CASE("built-in verifications match their golden certificates") {
    check_golden("verify klein-identity", "klein_identity.txt", 0);
    check_golden("verify conic-identity", "conic_identity.txt", 0);
    check_golden("verify group-ring -p 3", "group_ring_p3.txt", 0);
    check_golden("verify quotient-map -p 7 -s 2", "quotient_map_7_2.txt", 0);
    check_golden("verify klein-birational", "klein_birational.txt", 0);
    check_golden("verify fermat7-effective", "fermat7_effective.txt", 0);
    check_golden("verify fermat7-two-torsion", "fermat7_two_torsion.txt", 0);
}

TEST_CASE("conic decisions match their golden certificates") {
    check_golden("conic qpoint 1 1 1", "conic_111.txt", 0);
    check_golden("conic qpoint 1 1 -1", "conic_11m1.txt", 0);
}

TEST_CASE("file-driven subcommands match their golden certificates") {
    check_golden("verify bitangent --curve " + data("klein.curve") + " --line 1,1,1",
                 "bitangent_klein.txt", 0);
    check_golden("verify bitangent --curve " + data("fermat4.curve") + " --line 0,0,1",
                 "bitangent_fermat4.txt", 1);
    check_golden("check pencil --curve " + data("conic_q.curve") + " --pencil " +
                     data("conic_unit.pencil"),
                 "check_pencil_ok.txt", 0);
    check_golden("check pencil --curve " + data("conic_q.curve") + " --pencil " +
                     data("conic_wrong.pencil"),
                 "check_pencil_bad.txt", 1);
    check_golden("search ff --curve " + data("conic_f3.curve") + " --n 2", "search_f3.txt", 0);
    check_golden("search ff --curve " + data("cubic_f2.curve") + " --n 3 --workers 1",
                 "search_f2_cubic.txt", 0);
    check_golden("smooth --curve " + data("klein.curve"), "smooth_klein.txt", 0);
}

TEST_CASE("identical inputs give byte-identical certificates") {
    for (const std::string args :
         {std::string("verify fermat7-two-torsion"),
          "search ff --curve " + data("conic_f3.curve") + " --n 2 --workers 2",
          "conic qpoint 1 1 -1"}) {
        RunResult a = run_cli(args);
        RunResult b = run_cli(args);
        CHECK(a.output == b.output);
        CHECK(a.exit_code == b.exit_code);
    }
}

TEST_CASE("errors exit with code 2 and a diagnostic") {
    CHECK(run_cli("verify quotient-map -p 7 -s 0").exit_code == 2);
    CHECK(run_cli("verify quotient-map -p 7 -s 6").exit_code == 2);
    CHECK(run_cli("smooth --curve /nonexistent.curve").exit_code == 2);
    CHECK(run_cli("definitely-not-a-subcommand").exit_code == 2);
    CHECK(run_cli("conic qpoint 1 -1 0").exit_code == 2);  // degenerate conic
    RunResult budget =
        run_cli("search ff --curve " + data("conic_f3.curve") + " --n 2 --budget 10");
    CHECK(budget.exit_code == 2);
    CHECK(budget.output.find("budget") != std::string::npos);
    // smoothness is refused when the characteristic divides the degree
    std::string f7curve = "/tmp/sdr_test_fermat7_f7.curve";
    {
        std::ofstream out(f7curve);
        out << "field: F7\nX0^7+X1^7+X2^7\n";
    }
    CHECK(run_cli("smooth --curve " + f7curve).exit_code == 2);
}

TEST_CASE("search worker count does not change the certificate") {
    RunResult w1 = run_cli("search ff --curve " + data("conic_f3.curve") + " --n 2 --workers 1");
    RunResult w3 = run_cli("search ff --curve " + data("conic_f3.curve") + " --n 2 --workers 3");
    CHECK(w1.output == w3.output);
}
