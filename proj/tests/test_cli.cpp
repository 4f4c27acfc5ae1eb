#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <string>

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(KINGPACK_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, n);
    int status = pclose(pipe);
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string strip_elapsed(std::string text) {
    return std::regex_replace(text, std::regex("\"elapsed\": [^,\\n]*"),
                              "\"elapsed\": X");
}

std::filesystem::path temp_file(const char* name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("cli bounds") {
    auto res = run_cli("bounds --k 6");
    CHECK(res.code == 0);
    CHECK(res.out == "39 40\n");
    CHECK(run_cli("bounds --k 2").out == "9 9\n");
    CHECK(run_cli("bounds --k 4").out == "21 21\n");
}

TEST_CASE("cli oracle") {
    auto res = run_cli("oracle --w 7 --h 2");
    CHECK(res.code == 0);
    CHECK(res.out == "max=4\n");

    auto theorem = run_cli("oracle --w 7 --h 7 --force 4,4 --patterns ii,viii,ix");
    CHECK(theorem.code == 0);
    CHECK(theorem.out.substr(0, 4) == "max=");

    auto infeasible = run_cli("oracle --w 3 --h 3 --force 1,1 --force 2,2");
    CHECK(infeasible.code == 1);
    CHECK(infeasible.out == "infeasible\n");
}

TEST_CASE("cli verify") {
    // Color 2 repeated at king distance 2 under (1,6*): one violation.
    auto bad = temp_file("kingpack_bad.grid", "2 . .\n. . 2\n");
    auto res = run_cli("verify --coloring " + bad.string() + " --s 1,6*");
    CHECK(res.code == 1);
    CHECK(res.out.find("violation: color 2") != std::string::npos);

    auto good = temp_file("kingpack_good.grid", "1 2 3\n");
    auto ok = run_cli("verify --coloring " + good.string() + " --s 1,2*");
    CHECK(ok.code == 0);
    CHECK(ok.out == "valid\n");

    CHECK(run_cli("verify --coloring /nonexistent.grid --s 1,6*").code == 64);
}

TEST_CASE("cli refute and tasks") {
    auto res = run_cli("refute --task B-THM --radius 3");
    CHECK(res.code == 0);
    CHECK(res.out.find("REFUTED") != std::string::npos);

    auto budget = run_cli("refute --task B-THM --radius 3 --budget-nodes 1");
    CHECK(budget.code == 2);
    CHECK(budget.out.find("BUDGET_EXCEEDED") != std::string::npos);

    auto tasks = run_cli("tasks");
    CHECK(tasks.code == 0);
    CHECK(tasks.out.find("B-THM (binary) axioms: ii viii ix") != std::string::npos);
    CHECK(tasks.out.find("F-L3 (export)") != std::string::npos);
}

TEST_CASE("cli tile") {
    CHECK(run_cli("tile --p 3 --q 3 --s 1,2* --colors 9").code == 0);
    auto unsat = run_cli("tile --p 3 --q 3 --s 1,2* --colors 8");
    CHECK(unsat.code == 1);
    CHECK(unsat.out == "UNSAT\n");
}

TEST_CASE("cli encode and export-task emit DIMACS") {
    auto enc = run_cli("encode --w 1 --h 1 --colors 1 --s 1,6*");
    CHECK(enc.code == 0);
    CHECK(enc.out.find("p cnf 1 1") != std::string::npos);

    auto exp = run_cli("export-task --task F-L1 --radius 0");
    CHECK(exp.code == 0);
    CHECK(exp.out.find("p cnf 195 ") != std::string::npos);  // 5*1*39 vars

    auto solved = run_cli("encode --w 2 --h 2 --colors 4 --s 1,6* --solve");
    CHECK(solved.code == 0);
    CHECK(solved.out.substr(0, 4) == "SAT\n");
}

TEST_CASE("cli json determinism") {
    std::string cmd = "--json refute --task B-THM --radius 3 --seed 7";
    auto a = run_cli(cmd);
    auto b = run_cli(cmd);
    CHECK(a.code == 0);
    CHECK(strip_elapsed(a.out) == strip_elapsed(b.out));
    CHECK(a.out.find("\"tool\"") != std::string::npos);
    CHECK(a.out.find("\"argv\"") != std::string::npos);

    auto bounds_a = run_cli("--json bounds --k 6");
    auto bounds_b = run_cli("--json bounds --k 6");
    CHECK(bounds_a.out == bounds_b.out);
    CHECK(bounds_a.out.find("\"lower\": 39") != std::string::npos);
}

TEST_CASE("cli usage errors exit 64") {
    CHECK(run_cli("bounds").code == 64);
    CHECK(run_cli("refute").code == 64);
    CHECK(run_cli("no-such-command").code == 64);
    CHECK(run_cli("bounds --k 5").code == 64);  // odd tail rejected
}
