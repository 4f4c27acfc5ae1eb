#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <vector>

#include "kingpack/geometry.hpp"
#include "kingpack/sequence.hpp"

namespace kingpack {

inline constexpr int kUnassigned = 0;

struct TorusPeriods {
    int p = 1;
    int q = 1;
    friend bool operator==(const TorusPeriods&, const TorusPeriods&) = default;
};

// Finite rectangular color assignment; cell (1,1) is bottom-left. Color ids
// run 1..num_colors; 0 means unassigned. When torus is set, the coloring is
// read as a p x q fundamental domain with p = width, q = height.
class Coloring {
public:
    Coloring(int width, int height, int num_colors,
             std::optional<TorusPeriods> torus = std::nullopt);

    int width() const { return width_; }
    int height() const { return height_; }
    int num_colors() const { return num_colors_; }
    const std::optional<TorusPeriods>& torus() const { return torus_; }

    int at(int x, int y) const;
    int at(GridCoord c) const { return at(c.x, c.y); }
    void set(int x, int y, int color);
    void set(GridCoord c, int color) { set(c.x, c.y, color); }

    bool in_range(int x, int y) const {
        return x >= 1 && x <= width_ && y >= 1 && y <= height_;
    }

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    int width_;
    int height_;
    int num_colors_;
    std::optional<TorusPeriods> torus_;
    std::vector<int> cells_;  // row-major, row 1 first
};

// Two same-colored cells closer than the sequence allows.
struct Violation {
    GridCoord cell_a;
    GridCoord cell_b;
    int color = 0;
    int distance = 0;
    int required = 0;  // a_color; violation means distance <= required
    friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerifyReport {
    std::vector<Violation> violations;
    int skipped_cells = 0;  // unassigned cells the check passed over
    bool valid() const { return violations.empty(); }
};

// Every unordered same-color pair at distance <= a_color (toroidal distance
// when the coloring is a torus). On a torus, a used color i with
// min(p,q) <= a_i conflicts with its own translate and is reported too.
VerifyReport verify_coloring(const Coloring& c, const SSequence& s);

// Number of color-1 cells inside r (the count written c(G) in the
// literature).
int color1_count(const Coloring& c, const Rect& r);

// Contents rotated clockwise by 90 degrees * quarter_turns.
Coloring rotate_coloring(const Coloring& c, int quarter_turns);

// Colors in 2..num_colors absent from r.
std::set<int> window_missing_colors(const Coloring& c, const Rect& r);

// True iff r is a 7x7 window with 12 color-1 cells whose four unit shifts
// all have exactly 11.
bool is_critical(const Coloring& c, const Rect& r);

struct Bounds {
    long long lower = 0;
    long long upper = 0;
    friend bool operator==(const Bounds&, const Bounds&) = default;
};

// Closed-form bounds on chi_S of the infinite king grid for S = (1,k,k,...),
// k even: lower 3k^2/4 + 3k/2 + 3, upper ceil((3k^2+7k+8)/4).
Bounds bounds_for_tail(long long k);

struct WindowFloor {
    int value = 0;
    // False when the window diameter exceeds some a_i (i >= 2), in which
    // case the pigeonhole floor does not apply and value is 0.
    bool applicable = false;
};

// Pigeonhole floor on color-1 cells in any w x h window of a valid coloring:
// w*h - (num_colors - 1), provided every color >= 2 fits at most once.
WindowFloor min_color1_per_window(int w, int h, int num_colors, const SSequence& s);

// Text format: optional "# torus p q" header, then height lines of width
// tokens (color id or '.'), first line is the TOP row.
Coloring load_coloring(std::istream& in, int num_colors);
void save_coloring(const Coloring& c, std::ostream& out);

}  // namespace kingpack
