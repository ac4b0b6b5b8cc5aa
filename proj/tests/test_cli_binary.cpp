// End-to-end checks of the installed command-line surface: argument parsing,
// exit codes, and file output go through the real binary.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

int run_cli(const std::string& args) {
    std::string cmd = std::string(LAPINIT_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string problem(const char* name) {
    return std::string(LAPINIT_PROBLEM_DIR) + "/" + name;
}

}  // namespace

TEST_SUITE_BEGIN("cli_binary");

TEST_CASE("exit codes distinguish input and consistency failures") {
    CHECK(run_cli("solve " + problem("manometer.json")) == 0);
    CHECK(run_cli("solve /nonexistent/problem.json") == 1);
    CHECK(run_cli("solve " + problem("manometer.json") + " --method naive-lplus") == 2);
    CHECK(run_cli("solve " + problem("manometer.json") + " --method bogus") == 1);
    CHECK(run_cli("bogus-subcommand") != 0);
}

TEST_CASE("sample writes csv to a file") {
    std::string out = std::string(LAPINIT_TMP_DIR) + "/sample_out.csv";
    std::remove(out.c_str());
    CHECK(run_cli("sample " + problem("manometer.json") + " --t-end 2 --dt 0.5 --out " + out) == 0);
    std::ifstream file(out);
    REQUIRE(file.good());
    std::string header;
    std::getline(file, header);
    CHECK(header == "t,y_regular");
    int rows = 0;
    for (std::string line; std::getline(file, line);) ++rows;
    CHECK(rows == 5);
}

TEST_CASE("jumps and compare and verify run end to end") {
    CHECK(run_cli("jumps " + problem("biproper_impulse.json")) == 0);
    CHECK(run_cli("compare " + problem("first_order_impulse.json")) == 0);
    CHECK(run_cli("verify " + problem("first_order_impulse.json") +
                  " --epsilon 0.01 --epsilon 0.005 --t-end 2") == 0);
    CHECK(run_cli("solve " + problem("damped_oscillator_deltadot.json") + " --json") == 0);
    CHECK(run_cli("jumps " + problem("manometer.json") + " --json") == 0);
    CHECK(run_cli("compare " + problem("manometer.json") + " --json") == 0);
}

TEST_SUITE_END();
