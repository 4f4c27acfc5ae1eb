#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kingpack/coloring.hpp"
#include "kingpack/geometry.hpp"
#include "kingpack/pattern.hpp"
#include "kingpack/sequence.hpp"

namespace kingpack {

enum class CellState : uint8_t { FREE, ONE, NOTONE };

// Color-1 relaxation of a finite window: cell states under independence,
// forbidden patterns, and per-window pigeonhole floors. Any valid coloring
// of the plane restricts to a satisfying assignment, so a refutation here
// transfers to the full problem.
class BinaryModel {
public:
    BinaryModel(int width, int height, const SSequence& s, int num_colors,
                std::vector<PatternSet> forbidden);

    int width() const { return width_; }
    int height() const { return height_; }
    bool is_one(int x, int y) const { return state(x, y) == CellState::ONE; }

    CellState state(int x, int y) const { return states_[index(x, y)]; }
    void assign(int x, int y, CellState st);

    int tracked_window_count() const;
    int window_floor() const;
    Rect tracked_window(int i) const;
    const std::vector<PatternSet>& forbidden() const;

    int free_count() const;
    int one_count() const;

private:
    friend struct PropagationPass;

    int index(int x, int y) const { return (y - 1) * width_ + (x - 1); }

    struct Static;  // geometry, placements, tracked windows; shared
    int width_;
    int height_;
    std::shared_ptr<const Static> fixed_;
    std::vector<CellState> states_;
};

enum class PropOutcome { FIXPOINT, CONFLICT };

struct ConflictInfo {
    std::string rule;  // "independence" / "pattern" / "floor"
    GridCoord where;
};

// Runs the deterministic rules to fixpoint: ONE forces NOTONE on all eight
// neighbors; a forbidden placement with all but one ONE cell decided forces
// the last cell NOTONE (all decided: conflict); a tracked window at its
// floor forces its FREE cells ONE (below floor: conflict).
PropOutcome propagate(BinaryModel& m, ConflictInfo* info = nullptr);

struct RefutationTask {
    std::string tag;
    // Assumed patterns with their anchor offsets from the inflated window's
    // base anchor; empty pattern list is allowed.
    std::vector<std::pair<Pattern, GridCoord>> assumed;
    std::vector<std::string> axioms;  // lemma tags treated as forbidden
    int radius = 7;
    SSequence s = SSequence({1}, 6);
    int num_colors = 39;
    bool binary = true;  // false: full-encoding export task (F-L1 / F-L3)
};

struct ProofBudget {
    long long max_nodes = -1;  // negative = unlimited
    double max_seconds = -1.0;
};

struct ProofResult {
    enum class Status { REFUTED, SATURATED, BUDGET_EXCEEDED };
    Status status = Status::BUDGET_EXCEEDED;
    long long nodes = 0;
    long long conflicts = 0;
    double elapsed = 0.0;
    int radius = 0;
    std::optional<BinaryModel> model;  // present when SATURATED
};

// Builds the window (assumed bounding box inflated by the task radius) and
// searches by propagate-then-branch, ONE branch first, picking the FREE
// cell of the most-constrained tracked window. REFUTED only when every
// branch conflicts.
ProofResult refute(const RefutationTask& task, const ProofBudget& budget = {});

// Same task at an explicit radius.
ProofResult refute_at_radius(const RefutationTask& task, int radius,
                             const ProofBudget& budget = {});

// The registry: binary tasks B-L2, B-L4..B-L9, B-THM plus the export-only
// tags F-L1 and F-L3.
const std::vector<RefutationTask>& standard_tasks();
const RefutationTask& standard_task(std::string_view tag);

}  // namespace kingpack
