#pragma once

#include <vector>

#include "kingpack/cnf.hpp"

namespace kingpack {

struct SolveBudget {
    long long max_conflicts = -1;  // negative = unlimited
    double max_seconds = -1.0;
};

struct SolveResult {
    enum class Status { SAT, UNSAT, UNKNOWN };
    Status status = Status::UNKNOWN;
    std::vector<bool> model;  // index var-1; valid when SAT
    long long decisions = 0;
    long long conflicts = 0;
    double elapsed = 0.0;
};

// Complete CDCL search (two-watched-literal propagation, first-UIP clause
// learning, activity-ordered decisions, Luby restarts). Deterministic on a
// single thread when run without a wall-clock budget.
SolveResult solve(const CnfInstance& cnf, const SolveBudget& budget = {});

}  // namespace kingpack
