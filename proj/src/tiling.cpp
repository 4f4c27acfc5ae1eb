#include "kingpack/tiling.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "kingpack/encoder.hpp"

namespace kingpack {

bool verify_periodic(const Coloring& c, const SSequence& s) {
    if (!c.torus()) throw std::invalid_argument("coloring has no torus periods");
    return verify_coloring(c, s).valid();
}

PeriodicSearchOutcome search_periodic(int p, int q, const SSequence& s,
                                      int num_colors, const SolveBudget& budget) {
    if (p < 1 || q < 1) throw std::invalid_argument("periods must be >= 1");
    TorusPeriods torus{p, q};
    std::map<GridCoord, int> fixed;
    // Pinning one cell to the last color is answer-preserving only when the
    // torus cannot be monochromatic in color 1 and colors 2..num_colors are
    // mutually interchangeable (translate the witness cell to (1,1), then
    // permute tail colors).
    if (p * q >= 2 && num_colors >= 2 && s.value(2) == s.value(num_colors))
        fixed[{1, 1}] = num_colors;
    auto [cnf, vm] = encode_window(p, q, num_colors, s, fixed, torus);

    SolveResult solved = solve(cnf, budget);
    PeriodicSearchOutcome outcome;
    outcome.status = solved.status;
    outcome.decisions = solved.decisions;
    outcome.conflicts = solved.conflicts;
    outcome.elapsed = solved.elapsed;
    if (solved.status == SolveResult::Status::SAT) {
        Coloring c = decode(solved.model, vm, torus);
        if (!verify_periodic(c, s))
            throw std::runtime_error("decoded torus model fails verification");
        outcome.coloring = std::move(c);
    }
    return outcome;
}

void append_sweep_record(std::ostream& ledger, int p, int q, const SSequence& s,
                         int num_colors, const PeriodicSearchOutcome& outcome) {
    const char* status = outcome.status == SolveResult::Status::SAT
                             ? "SAT"
                             : outcome.status == SolveResult::Status::UNSAT
                                   ? "UNSAT"
                                   : "UNKNOWN";
    ledger << "{\"p\":" << p << ",\"q\":" << q << ",\"s\":\"" << s.to_string()
           << "\",\"colors\":" << num_colors << ",\"status\":\"" << status
           << "\",\"decisions\":" << outcome.decisions
           << ",\"conflicts\":" << outcome.conflicts
           << ",\"elapsed\":" << outcome.elapsed << "}\n";
}

}  // namespace kingpack
