#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "kingpack/cnf.hpp"
#include "kingpack/coloring.hpp"
#include "kingpack/pattern.hpp"
#include "kingpack/solver.hpp"

namespace kingpack {

// (cell, color) <-> variable id, cells row-major from the bottom row,
// colors fastest.
class VarMap {
public:
    VarMap(int width, int height, int num_colors)
        : width_(width), height_(height), num_colors_(num_colors) {}

    int width() const { return width_; }
    int height() const { return height_; }
    int num_colors() const { return num_colors_; }
    int total_vars() const { return width_ * height_ * num_colors_; }

    int var(GridCoord cell, int color) const;
    std::pair<GridCoord, int> cell_color(int var) const;

private:
    int width_, height_, num_colors_;
};

// Full-color window (or torus) instance: exactly one color per cell,
// pairwise distance clauses per color, unit clauses for fixed cells.
std::pair<CnfInstance, VarMap> encode_window(
    int w, int h, int num_colors, const SSequence& s,
    const std::map<GridCoord, int>& fixed = {},
    std::optional<TorusPeriods> torus = std::nullopt);

// Color-1-only relaxation of a window: one variable per cell, independence
// and forbidden-pattern clauses, an at-least-floor counter per fully
// contained tracked window, units for the assumed cells. Cross-check
// artifact for the binary refutation engine; cell (x,y) is variable
// (y-1)*w + x.
CnfInstance encode_binary_abstraction(int w, int h, const SSequence& s,
                                      int num_colors,
                                      const std::vector<GridCoord>& assumed_ones,
                                      const std::vector<PatternSet>& axioms);

// Per-cell colors from a SAT model of the matching window instance.
// Throws if some cell has zero or several true color variables.
Coloring decode(const std::vector<bool>& model, const VarMap& vm,
                std::optional<TorusPeriods> torus = std::nullopt);

// Full-color export instance for lemma tag "i" or "iii": the pattern's ONE
// cells fixed to color 1 inside a window inflated by `radius`; UNSAT at any
// radius certifies the lemma.
std::pair<CnfInstance, VarMap> export_task(std::string_view tag, int radius,
                                           int num_colors, const SSequence& s);

}  // namespace kingpack
