// Acceptance suite: one test case per criterion, each printing a single
// PASS/FAIL line so the run log doubles as the acceptance report.
#include "doctest.h"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kingpack/encoder.hpp"
#include "kingpack/oracle.hpp"
#include "kingpack/prover.hpp"
#include "kingpack/tiling.hpp"

using namespace kingpack;

namespace {

const SSequence kS16({1}, 6);
const SSequence kS12({1}, 2);

void report(int criterion, bool ok, const std::string& detail) {
    std::cout << "ACCEPTANCE " << criterion << ": " << (ok ? "PASS" : "FAIL")
              << " — " << detail << "\n";
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

// Minimal DIMACS sanity check: header matches the body, literals in range.
bool dimacs_valid(const std::string& text, int expect_vars) {
    std::istringstream in(text);
    std::string line;
    int vars = -1;
    long long clauses = -1, seen = 0;
    while (std::getline(in, line)) {
        if (line.empty()) return false;
        if (line[0] == 'c') continue;
        if (line.rfind("p cnf ", 0) == 0) {
            if (vars >= 0) return false;
            std::istringstream hdr(line.substr(6));
            if (!(hdr >> vars >> clauses)) return false;
            continue;
        }
        if (vars < 0) return false;
        std::istringstream body(line);
        int lit, last = -1;
        while (body >> lit) {
            last = lit;
            if (lit != 0 && (std::abs(lit) < 1 || std::abs(lit) > vars))
                return false;
        }
        if (last != 0) return false;
        ++seen;
    }
    return vars == expect_vars && seen == clauses;
}

}  // namespace

TEST_CASE("criterion 1: bounds table") {
    bool ok = bounds_for_tail(2) == Bounds{9, 9} &&
              bounds_for_tail(4) == Bounds{21, 21} &&
              bounds_for_tail(6) == Bounds{39, 40};
    report(1, ok, "bounds (9,9) (21,21) (39,40) for k=2,4,6");
    CHECK(ok);
}

TEST_CASE("criterion 2: census reproduction") {
    bool ok = max_color1(2, 2, {}, {}).max == 1;
    ok = ok && max_color1(7, 7, {}, {}).max == 16;

    auto optima = enumerate_optima(7, 2, {}, {});
    ok = ok && !optima.empty();
    for (const auto& placement : optima) {
        std::set<int> cols;
        for (GridCoord g : placement) cols.insert(g.x);
        ok = ok && placement.size() == 4 && cols == std::set<int>{1, 3, 5, 7};
    }
    report(2, ok, "2x2 max 1; 7x2 max 4 on columns {1,3,5,7}; 7x7 max 16");
    CHECK(ok);
}

TEST_CASE("criterion 3: theorem partition count") {
    auto res = max_color1(7, 7, {{4, 4}}, lemma4_entries({"ii", "viii", "ix"}));
    int floor = min_color1_per_window(7, 7, 39, kS16).value;
    bool ok = res.status == CensusResult::Status::OK && res.max <= 9 &&
              res.max < floor && floor == 11;
    report(3, ok,
           "forced center with (ii),(viii),(ix): max " +
               std::to_string(res.max) + " <= 9 < 11 = window floor");
    CHECK(ok);
}

TEST_CASE("criterion 4: lemma counting checks") {
    bool ok = true;
    std::string detail;
    for (const auto& tag : lemma_counting_tags()) {
        auto res = lemma_counting_check(tag);
        ok = ok && res.ok && res.paper_bound == 10;
        if (!detail.empty()) detail += ", ";
        detail += "(" + res.tag + ") " + std::to_string(res.bound) + "<=10";
    }
    report(4, ok, "in-window bounds " + detail);
    CHECK(ok);
}

TEST_CASE("criterion 5: binary refutation suite") {
    bool ok = true;
    std::string detail;
    for (const auto& task : standard_tasks()) {
        if (!task.binary) continue;
        ProofBudget budget;
        budget.max_seconds = 600.0;
        ProofResult last;
        bool refuted = false;
        for (int radius = 1; radius <= 12 && !refuted; ++radius) {
            last = refute_at_radius(task, radius, budget);
            refuted = last.status == ProofResult::Status::REFUTED;
        }
        if (!detail.empty()) detail += ", ";
        if (refuted) {
            detail += task.tag + "@r" + std::to_string(last.radius);
        } else {
            // Reportable experimental outcome, not a silent pass.
            detail += task.tag + " NOT REFUTED <= r12 (flagged)";
            ok = false;
        }
        CHECK(refuted);
    }
    report(5, ok, "refuted at first sufficient radius: " + detail);
    CHECK(ok);
}

TEST_CASE("criterion 6: k=2 exact value in both directions") {
    auto t0 = std::chrono::steady_clock::now();
    auto nine = search_periodic(3, 3, kS12, 9);
    double t_nine = seconds_since(t0);
    bool ok = nine.status == SolveResult::Status::SAT && nine.coloring &&
              verify_periodic(*nine.coloring, kS12) && t_nine < 1.0;

    t0 = std::chrono::steady_clock::now();
    auto eight = search_periodic(3, 3, kS12, 8);
    double t_eight = seconds_since(t0);
    ok = ok && eight.status == SolveResult::Status::UNSAT && t_eight < 1.0;

    // Plane-side certificate: some window w,h <= 12 rejects 8 colors
    // outright (no torus), certifying chi_S >= 9; overall budget 5 minutes.
    t0 = std::chrono::steady_clock::now();
    std::string window = "none";
    bool plane_unsat = false;
    for (auto [w, h] : std::vector<std::pair<int, int>>{
             {3, 3}, {4, 3}, {4, 4}, {5, 4}, {5, 5}, {6, 5}, {6, 6},
             {7, 7}, {8, 8}, {9, 9}, {10, 10}, {11, 11}, {12, 12}}) {
        double left = 300.0 - seconds_since(t0);
        if (left <= 0) break;
        auto [cnf, vm] = encode_window(w, h, 8, kS12);
        SolveBudget budget;
        budget.max_seconds = left;
        auto res = solve(cnf, budget);
        if (res.status == SolveResult::Status::UNSAT) {
            plane_unsat = true;
            window = std::to_string(w) + "x" + std::to_string(h);
            break;
        }
        if (res.status == SolveResult::Status::UNKNOWN) break;
    }
    ok = ok && plane_unsat;
    report(6, ok,
           "3x3 torus: 9 colors SAT, 8 colors UNSAT (<1s each); plane window " +
               window + " UNSAT with 8 colors");
    CHECK(ok);
}

TEST_CASE("criterion 7: encoder integrity") {
    auto [cnf, vm] = encode_window(2, 2, 4, kS16);
    // Independent recount of the closed form: 4 ALO + 4*C(4,2) AMO
    // + 6 cell pairs * 4 colors all within reach.
    size_t expected = 4 + 4 * 6 + 6 * 4;
    bool ok = expected == 52 && cnf.clauses.size() == 52;

    auto res = solve(cnf);
    ok = ok && res.status == SolveResult::Status::SAT;
    if (res.status == SolveResult::Status::SAT)
        ok = ok && verify_coloring(decode(res.model, vm), kS16).valid();

    std::ostringstream a, b;
    export_dimacs(cnf, a);
    export_dimacs(cnf, b);
    ok = ok && a.str() == b.str() && dimacs_valid(a.str(), cnf.num_vars);
    report(7, ok, "2x2/4-color recount = 52, SAT decode verifies, "
                  "DIMACS re-export byte-identical");
    CHECK(ok);
}

TEST_CASE("criterion 8: property suites") {
    // The randomized suites live in the property_tests binary; run it and
    // require every suite green with >= 1000 cases each (enforced by the
    // kCases constant inside; the assertion count confirms the volume).
    std::string cmd = std::string(KINGPACK_PROPERTY_TESTS_PATH) + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    bool ok = WIFEXITED(status) && WEXITSTATUS(status) == 0 &&
              out.find("Status: SUCCESS!") != std::string::npos;
    report(8, ok, "randomized property suites (>=1000 cases each) all green");
    CHECK(ok);
}

TEST_CASE("criterion 9: lemma export artifacts") {
    bool ok = true;
    for (const char* tag : {"i", "iii"}) {
        for (int radius = 2; radius <= 6; ++radius) {
            auto [cnf, vm] = export_task(tag, radius, 39, kS16);
            std::ostringstream a, b;
            export_dimacs(cnf, a);
            export_dimacs(cnf, b);
            ok = ok && a.str() == b.str() && dimacs_valid(a.str(), cnf.num_vars);
            if (std::string(tag) == "i")
                ok = ok && cnf.num_vars == (5 + 2 * radius) * (1 + 2 * radius) * 39;
        }
    }
    report(9, ok,
           "F-L1/F-L3 DIMACS valid and deterministic at radii 2..6 "
           "(UNSAT status experimental only; not claimed)");
    CHECK(ok);
}
