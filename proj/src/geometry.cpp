#include "kingpack/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace kingpack {

int chebyshev_distance(GridCoord a, GridCoord b) {
    return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
}

int toroidal_distance(GridCoord a, GridCoord b, int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("torus periods must be >= 1");
    int dx = std::abs(a.x - b.x) % p;
    int dy = std::abs(a.y - b.y) % q;
    dx = std::min(dx, p - dx);
    dy = std::min(dy, q - dy);
    return std::max(dx, dy);
}

Rect shift_window(const Rect& r, int dx, int dy) {
    Rect out = r;
    out.origin.x += dx;
    out.origin.y += dy;
    return out;
}

}  // namespace kingpack
