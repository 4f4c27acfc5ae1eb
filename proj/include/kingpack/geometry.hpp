#pragma once

#include <compare>
#include <cstdlib>

namespace kingpack {

// Square of the grid. (1,1) is the bottom-left of a window, x grows
// rightward, y grows upward.
struct GridCoord {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const GridCoord&, const GridCoord&) = default;
};

// A width x height window with a given bottom-left origin.
struct Rect {
    GridCoord origin;
    int width = 1;
    int height = 1;

    bool contains(GridCoord c) const {
        return c.x >= origin.x && c.x < origin.x + width &&
               c.y >= origin.y && c.y < origin.y + height;
    }
    friend auto operator<=>(const Rect&, const Rect&) = default;
};

// King-move distance.
int chebyshev_distance(GridCoord a, GridCoord b);

// King-move distance on a p x q torus.
int toroidal_distance(GridCoord a, GridCoord b, int p, int q);

// The window translated by (dx, dy); same extent.
Rect shift_window(const Rect& r, int dx, int dy);

}  // namespace kingpack
