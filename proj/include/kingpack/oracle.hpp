#pragma once

#include <string_view>
#include <vector>

#include "kingpack/geometry.hpp"
#include "kingpack/pattern.hpp"

namespace kingpack {

// Exhaustive census of color-1 placements in a small window under
// independence (no two ONEs at king distance <= 1), optional forced cells,
// and forbidden pattern sets. Ground truth for the counting arguments.

struct CensusResult {
    enum class Status { OK, INFEASIBLE };
    Status status = Status::OK;
    int max = -1;  // -1 when the forced cells themselves are inconsistent
    std::vector<GridCoord> witness;
};

inline constexpr int kDefaultCellCap = 64;

// `blocked` cells may never be ONE; they model knowledge imported from
// outside the window (e.g. the shadow of a color-1 square just past its
// edge).
CensusResult max_color1(int w, int h, const std::vector<GridCoord>& forced_ones,
                        const std::vector<PatternSet>& forbidden,
                        const std::vector<GridCoord>& blocked = {},
                        int cell_cap = kDefaultCellCap);

// All placements attaining the maximum, in deterministic order (rows from
// the bottom, columns left to right, lexicographic across placements).
std::vector<std::vector<GridCoord>> enumerate_optima(
    int w, int h, const std::vector<GridCoord>& forced_ones,
    const std::vector<PatternSet>& forbidden,
    const std::vector<GridCoord>& blocked = {}, int cell_cap = kDefaultCellCap);

struct LemmaCountResult {
    std::string tag;
    int bound = -1;        // census maximum on the lemma's own window
    int paper_bound = -1;  // the in-window count the argument needs
    bool ok = false;       // bound <= paper_bound
};

// Re-derives the stated in-window count bound for lemma tags "v", "vi",
// "viii" by running the census with the lemma's forced cells and axiom
// patterns.
LemmaCountResult lemma_counting_check(std::string_view tag);
std::vector<std::string> lemma_counting_tags();

}  // namespace kingpack
