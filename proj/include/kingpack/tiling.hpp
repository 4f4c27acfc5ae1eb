#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "kingpack/coloring.hpp"
#include "kingpack/solver.hpp"

namespace kingpack {

// True iff the toroidal coloring is a valid S-packing coloring of the plane
// tiling it induces, including the self-translate condition. A true result
// certifies chi_S <= num_colors for the infinite grid.
bool verify_periodic(const Coloring& c, const SSequence& s);

struct PeriodicSearchOutcome {
    SolveResult::Status status = SolveResult::Status::UNKNOWN;
    std::optional<Coloring> coloring;  // present when SAT
    long long decisions = 0;
    long long conflicts = 0;
    double elapsed = 0.0;
};

// Searches for a p x q toroidal coloring with the given palette by solving
// the torus window encoding; a returned coloring always passes
// verify_periodic. One cell is pinned to the last color when colors
// 2..num_colors are interchangeable (all share the tail distance), which
// keeps the decision answer unchanged.
PeriodicSearchOutcome search_periodic(int p, int q, const SSequence& s,
                                      int num_colors,
                                      const SolveBudget& budget = {});

// Appends one JSON line describing a sweep cell outcome to the ledger.
void append_sweep_record(std::ostream& ledger, int p, int q, const SSequence& s,
                         int num_colors, const PeriodicSearchOutcome& outcome);

}  // namespace kingpack
