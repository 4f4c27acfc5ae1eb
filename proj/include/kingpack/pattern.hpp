#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kingpack/coloring.hpp"
#include "kingpack/geometry.hpp"

namespace kingpack {

// Rectangular matrix over {ONE, ANY}: a color-1 pattern. ONE marks a cell
// that must carry color 1, ANY is unconstrained. Text form uses '1'/'x'
// with the first line as the top row.
class Pattern {
public:
    Pattern(int rows, int cols, std::vector<uint8_t> ones);

    static Pattern parse(std::string_view text);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    // r is 1-based from the top, c 1-based from the left, matching the
    // matrix as written.
    bool one_at(int r, int c) const {
        return ones_[static_cast<size_t>(r - 1) * cols_ + (c - 1)] != 0;
    }
    int one_count() const;

    Pattern rotated_cw() const;
    Pattern mirrored() const;  // horizontal flip
    // Lexicographically least matrix over all eight dihedral images.
    Pattern canonical() const;

    std::string to_string() const;

    friend auto operator<=>(const Pattern&, const Pattern&) = default;

private:
    int rows_;
    int cols_;
    std::vector<uint8_t> ones_;  // row-major, top row first
};

struct PatternSet {
    std::string name;
    std::vector<Pattern> patterns;  // distinct, deterministically ordered
};

// All distinct images of p under the dihedral group of the square.
PatternSet dihedral_closure(const Pattern& p, std::string name = "");

// The nine forbidden-pattern matrices, each closed under the dihedral
// group, in order, tagged "i".."ix".
const std::vector<PatternSet>& lemma4_library();
const PatternSet& lemma4_entry(std::string_view tag);

// The exclusion rules implied by a_1 = 1: horizontal/vertical dominoes and
// the two 2x2 diagonal pairs, as one pattern set.
const PatternSet& independence_patterns();

// Resolves a list of tags like {"ii","viii"} to their library entries.
std::vector<PatternSet> lemma4_entries(const std::vector<std::string>& tags);

struct Occurrence {
    int pattern_index = 0;
    GridCoord anchor;  // bottom-left grid cell of the placement
    friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

// Grid is anything exposing width(), height() and a color-1 test via
// is_one(x, y) with 1-based coordinates.
template <class Grid>
bool matches_at(const Grid& grid, const Pattern& p, GridCoord anchor) {
    if (anchor.x < 1 || anchor.y < 1 ||
        anchor.x + p.cols() - 1 > grid.width() ||
        anchor.y + p.rows() - 1 > grid.height())
        throw std::out_of_range("pattern overhangs the grid");
    for (int r = 1; r <= p.rows(); ++r)
        for (int c = 1; c <= p.cols(); ++c) {
            if (!p.one_at(r, c)) continue;
            // Matrix row 1 is the top of the placement.
            int x = anchor.x + c - 1;
            int y = anchor.y + (p.rows() - r);
            if (!grid.is_one(x, y)) return false;
        }
    return true;
}

template <class Grid>
std::vector<Occurrence> find_occurrences(const Grid& grid, const PatternSet& ps) {
    std::vector<Occurrence> out;
    for (int i = 0; i < static_cast<int>(ps.patterns.size()); ++i) {
        const Pattern& p = ps.patterns[i];
        for (int y = 1; y + p.rows() - 1 <= grid.height(); ++y)
            for (int x = 1; x + p.cols() - 1 <= grid.width(); ++x)
                if (matches_at(grid, p, {x, y})) out.push_back({i, {x, y}});
    }
    return out;
}

// Adapter presenting a Coloring's color-1 cells to the matchers.
struct ColorOneView {
    const Coloring& coloring;
    int width() const { return coloring.width(); }
    int height() const { return coloring.height(); }
    bool is_one(int x, int y) const { return coloring.at(x, y) == 1; }
};

}  // namespace kingpack
