#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

extern std::string g_test_binary_dir;

namespace {

struct CliResult {
    int status = -1;
    std::string out;  // stdout and stderr combined
};

std::string cli_binary() {
    if (const char* env = std::getenv("CANTOR_CLI_BIN")) {
        return env;
    }
    return g_test_binary_dir + "/cantor";
}

CliResult run_cli(const std::string& args) {
    CliResult result;
    std::string command = cli_binary() + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[512];
    while (std::fgets(buffer, sizeof(buffer), pipe) != nullptr) {
        result.out += buffer;
    }
    int raw = pclose(pipe);
    result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return result;
}

}  // namespace

TEST_CASE("cli retract") {
    CliResult r = run_cli("retract \"{0, 2, 22}\"");
    CHECK(r.status == 0);
    CHECK(r.out == "r = 0\nmaximal_even = {2}; residue = {0}\ncardinality = odd (3 points)\n");

    r = run_cli("retract \"{}\"");
    CHECK(r.status == 0);
    CHECK(r.out.find("r = 0 (even cardinality, extended value)") == 0);

    r = run_cli("retract \"{2}\"");
    CHECK(r.status == 0);
    CHECK(r.out.find("r = 2\n") == 0);

    r = run_cli("retract \"{0, 1}\"");
    CHECK(r.status == 1);
    CHECK(r.out.find("parse error") != std::string::npos);
}

TEST_CASE("cli witness") {
    CliResult r = run_cli("witness \"{2}\" 2 --depth 2");
    CHECK(r.status == 0);
    CHECK(r.out.find("gamma = {0, 2}") != std::string::npos);
    CHECK(r.out.find("verdict = pass") != std::string::npos);

    r = run_cli("witness \"{0, 2, 22}\" \"*\" --depth 3");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "x = 0\n"
          "v_x = 0\n"
          "maximal_even = {2}\n"
          "gamma = {0, 2}\n"
          "target = *\n"
          "H checked = 64 (complete)\n"
          "verdict = pass\n");

    r = run_cli("witness \"{0, 2}\" \"*\"");
    CHECK(r.status == 1);
    CHECK(r.out.find("odd cardinality") != std::string::npos);

    r = run_cli("witness \"{0, 2, 22}\" 2");
    CHECK(r.status == 1);
    CHECK(r.out.find("does not contain") != std::string::npos);
}

TEST_CASE("cli check") {
    CliResult r = run_cli("check 2 2 \"{0, 2}\" --depth 2");
    CHECK(r.status == 0);
    CHECK(r.out.find("verdict = pass") != std::string::npos);

    r = run_cli("check 0 0 \"{*}\" --depth 1");
    CHECK(r.status == 2);
    CHECK(r.out.find("counterexample H = {0, 2}") != std::string::npos);
}

TEST_CASE("cli enumerate") {
    CliResult r = run_cli("enumerate \"{0, 2}\" --depth 2");
    CHECK(r.status == 0);
    CHECK(r.out == "{}\n{0, 02}\n{2, 22}\n{0, 02, 2, 22}\ncount = 4\n");

    r = run_cli("enumerate \"{*}\" --depth 1");
    CHECK(r.status == 0);
    CHECK(r.out == "{}\n{0, 2}\ncount = 2\n");

    r = run_cli("enumerate \"{0}\"");
    CHECK(r.status == 1);
    CHECK(r.out.find("incomplete") != std::string::npos);

    r = run_cli("enumerate \"{0, 2}\" --depth 3 --cap 5");
    CHECK(r.status == 0);
    CHECK(r.out.find("count = 5 (truncated at cap)") != std::string::npos);
}

TEST_CASE("cli parse") {
    CHECK(run_cli("parse point 20").out == "2\n");
    CHECK(run_cli("parse element \"{22, 0}\"").out == "{0, 22}\n");
    CHECK(run_cli("parse cover \"{2, 0}\"").out == "{0, 2}\n");
    CHECK(run_cli("parse point 1").status == 1);
    CHECK(run_cli("parse kind x").status == 1);
}

TEST_CASE("cli campaign") {
    SUBCASE("single suite, lines format") {
        CliResult r = run_cli("campaign --suite group-laws --seed 5 --format lines");
        CHECK(r.status == 0);
        CHECK(r.out == "group-laws 800 0\n");
    }

    SUBCASE("full campaign is deterministic across processes") {
        std::string args = "campaign --seed 9 --cap 2000 --format lines";
        CliResult a = run_cli(args);
        CliResult b = run_cli(args);
        CHECK(a.status == 0);
        CHECK(a.out == b.out);
        // one line per suite
        CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 20);
    }

    SUBCASE("unknown suite is an input error") {
        CliResult r = run_cli("campaign --suite bogus");
        CHECK(r.status == 1);
        CHECK(r.out.find("unknown suite") != std::string::npos);
    }

    SUBCASE("config file") {
        std::string dir = std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp";
        std::string good = dir + "/cantor_cli_good.cfg";
        {
            std::ofstream out(good);
            out << "# quick run\n";
            out << "seed = 21\n";
            out << "max_set_size = 5\n";
            out << "suites = group-laws, endpoint-consistency\n";
        }
        CliResult r = run_cli("campaign --config " + good + " --format lines");
        CHECK(r.status == 0);
        CHECK(r.out == "endpoint-consistency 1000 0\ngroup-laws 800 0\n");

        std::string bad = dir + "/cantor_cli_bad.cfg";
        {
            std::ofstream out(bad);
            out << "seed = 21\n";
            out << "max_sizes = 5\n";
        }
        r = run_cli("campaign --config " + bad);
        CHECK(r.status == 1);
        CHECK(r.out.find(":2: unknown key 'max_sizes'") != std::string::npos);

        std::string corrupt = dir + "/cantor_cli_corrupt.cfg";
        {
            std::ofstream out(corrupt);
            out << "enum_depth = 1\n";  // below the prefix length of generated covers
            out << "suites = subgroup-closure\n";
        }
        r = run_cli("campaign --config " + corrupt);
        CHECK(r.status == 1);
        CHECK(r.out.find("below the cover's prefix length") != std::string::npos);
    }
}

TEST_CASE("cli usage errors") {
    CHECK(run_cli("").status == 1);
    CHECK(run_cli("retract").status == 1);
    CHECK(run_cli("--help").status == 0);
    CHECK(run_cli("nonsense").status == 1);
}
