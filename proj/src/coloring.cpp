#include "kingpack/coloring.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace kingpack {

Coloring::Coloring(int width, int height, int num_colors,
                   std::optional<TorusPeriods> torus)
    : width_(width), height_(height), num_colors_(num_colors),
      torus_(torus), cells_(static_cast<size_t>(width) * height, kUnassigned) {
    if (width < 1 || height < 1) throw std::invalid_argument("degenerate grid");
    if (num_colors < 1) throw std::invalid_argument("need at least one color");
    if (torus_ && (torus_->p != width_ || torus_->q != height_))
        throw std::invalid_argument("torus periods must equal the grid extent");
}

int Coloring::at(int x, int y) const {
    if (!in_range(x, y)) throw std::out_of_range("cell outside grid");
    return cells_[static_cast<size_t>(y - 1) * width_ + (x - 1)];
}

void Coloring::set(int x, int y, int color) {
    if (!in_range(x, y)) throw std::out_of_range("cell outside grid");
    if (color < 0 || color > num_colors_)
        throw std::invalid_argument("color id out of range");
    cells_[static_cast<size_t>(y - 1) * width_ + (x - 1)] = color;
}

VerifyReport verify_coloring(const Coloring& c, const SSequence& s) {
    VerifyReport report;
    std::vector<GridCoord> assigned;
    assigned.reserve(static_cast<size_t>(c.width()) * c.height());
    for (int y = 1; y <= c.height(); ++y)
        for (int x = 1; x <= c.width(); ++x) {
            int col = c.at(x, y);
            if (col == kUnassigned) {
                ++report.skipped_cells;
            } else {
                assigned.push_back({x, y});
            }
        }

    const auto& torus = c.torus();
    for (size_t i = 0; i < assigned.size(); ++i) {
        for (size_t j = i + 1; j < assigned.size(); ++j) {
            GridCoord a = assigned[i], b = assigned[j];
            int col = c.at(a);
            if (col != c.at(b)) continue;
            int d = torus ? toroidal_distance(a, b, torus->p, torus->q)
                          : chebyshev_distance(a, b);
            int req = s.value(col);
            if (d <= req) report.violations.push_back({a, b, col, d, req});
        }
    }

    if (torus) {
        // A color whose required distance reaches the smaller period clashes
        // with its own planar translate; report once per used color.
        std::set<int> flagged;
        int min_period = std::min(torus->p, torus->q);
        for (GridCoord cell : assigned) {
            int col = c.at(cell);
            if (flagged.count(col)) continue;
            int req = s.value(col);
            if (min_period <= req) {
                GridCoord translate =
                    torus->p <= torus->q ? GridCoord{cell.x + torus->p, cell.y}
                                         : GridCoord{cell.x, cell.y + torus->q};
                report.violations.push_back({cell, translate, col, min_period, req});
                flagged.insert(col);
            }
        }
    }
    return report;
}

int color1_count(const Coloring& c, const Rect& r) {
    int n = 0;
    for (int y = r.origin.y; y < r.origin.y + r.height; ++y)
        for (int x = r.origin.x; x < r.origin.x + r.width; ++x) {
            if (!c.in_range(x, y)) throw std::out_of_range("window outside grid");
            if (c.at(x, y) == 1) ++n;
        }
    return n;
}

Coloring rotate_coloring(const Coloring& c, int quarter_turns) {
    int t = ((quarter_turns % 4) + 4) % 4;
    if (t == 0) return c;
    int w = c.width(), h = c.height();
    int nw = (t % 2 == 0) ? w : h;
    int nh = (t % 2 == 0) ? h : w;
    std::optional<TorusPeriods> torus;
    if (c.torus()) torus = TorusPeriods{nw, nh};
    Coloring out(nw, nh, c.num_colors(), torus);
    for (int y = 1; y <= h; ++y)
        for (int x = 1; x <= w; ++x) {
            // Clockwise quarter turn: (x, y) -> (y, w + 1 - x).
            int nx, ny;
            switch (t) {
                case 1: nx = y; ny = w + 1 - x; break;
                case 2: nx = w + 1 - x; ny = h + 1 - y; break;
                default: nx = h + 1 - y; ny = x; break;
            }
            out.set(nx, ny, c.at(x, y));
        }
    return out;
}

std::set<int> window_missing_colors(const Coloring& c, const Rect& r) {
    std::set<int> missing;
    for (int col = 2; col <= c.num_colors(); ++col) missing.insert(col);
    for (int y = r.origin.y; y < r.origin.y + r.height; ++y)
        for (int x = r.origin.x; x < r.origin.x + r.width; ++x) {
            if (!c.in_range(x, y)) throw std::out_of_range("window outside grid");
            missing.erase(c.at(x, y));
        }
    return missing;
}

bool is_critical(const Coloring& c, const Rect& r) {
    if (r.width != 7 || r.height != 7)
        throw std::invalid_argument("critical subgraphs are 7x7");
    if (color1_count(c, r) != 12) return false;
    for (auto [dx, dy] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}})
        if (color1_count(c, shift_window(r, dx, dy)) != 11) return false;
    return true;
}

Bounds bounds_for_tail(long long k) {
    if (k < 2 || k % 2 != 0)
        throw std::invalid_argument("tail must be even and >= 2");
    Bounds b;
    b.lower = 3 * k * k / 4 + 3 * k / 2 + 3;
    b.upper = (3 * k * k + 7 * k + 8 + 3) / 4;  // ceiling
    return b;
}

WindowFloor min_color1_per_window(int w, int h, int num_colors, const SSequence& s) {
    if (w < 1 || h < 1 || num_colors < 1)
        throw std::invalid_argument("degenerate window");
    int diameter = std::max(w, h) - 1;
    // Colors >= 2 fit at most once iff the diameter is within every a_i,
    // i >= 2; the sequence is non-decreasing so a_2 is the binding one.
    if (num_colors >= 2 && diameter > s.value(2)) return {0, false};
    int v = w * h - (num_colors - 1);
    return {std::max(0, v), true};
}

Coloring load_coloring(std::istream& in, int num_colors) {
    std::optional<TorusPeriods> torus;
    std::vector<std::vector<int>> rows;  // file order: top row first
    std::string line;
    size_t width = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream hs(line.substr(1));
            std::string word;
            hs >> word;
            if (word == "torus") {
                TorusPeriods t;
                if (!(hs >> t.p >> t.q))
                    throw std::invalid_argument("bad torus header");
                torus = t;
            }
            continue;
        }
        std::istringstream ls(line);
        std::vector<int> row;
        std::string tok;
        while (ls >> tok) {
            if (tok == ".") {
                row.push_back(kUnassigned);
            } else {
                try {
                    row.push_back(std::stoi(tok));
                } catch (const std::exception&) {
                    throw std::invalid_argument("bad cell token: " + tok);
                }
            }
        }
        if (row.empty()) continue;
        if (width == 0) width = row.size();
        if (row.size() != width) throw std::invalid_argument("ragged grid rows");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("empty coloring file");
    if (num_colors <= 0) {
        for (const auto& row : rows)
            for (int v : row) num_colors = std::max(num_colors, v);
        if (num_colors <= 0) num_colors = 1;
    }
    int h = static_cast<int>(rows.size());
    Coloring c(static_cast<int>(width), h, num_colors, torus);
    for (int y = 1; y <= h; ++y)
        for (int x = 1; x <= static_cast<int>(width); ++x)
            c.set(x, y, rows[h - y][x - 1]);  // flip: file top row is y = h
    return c;
}

void save_coloring(const Coloring& c, std::ostream& out) {
    if (c.torus()) out << "# torus " << c.torus()->p << " " << c.torus()->q << "\n";
    for (int y = c.height(); y >= 1; --y) {
        for (int x = 1; x <= c.width(); ++x) {
            if (x > 1) out << " ";
            int col = c.at(x, y);
            if (col == kUnassigned)
                out << ".";
            else
                out << col;
        }
        out << "\n";
    }
}

}  // namespace kingpack
