#include "kingpack/encoder.hpp"

#include <stdexcept>
#include <string>

namespace kingpack {

int VarMap::var(GridCoord cell, int color) const {
    if (cell.x < 1 || cell.x > width_ || cell.y < 1 || cell.y > height_)
        throw std::out_of_range("cell outside window");
    if (color < 1 || color > num_colors_)
        throw std::invalid_argument("color outside palette");
    int cell_index = (cell.y - 1) * width_ + (cell.x - 1);
    return cell_index * num_colors_ + color;
}

std::pair<GridCoord, int> VarMap::cell_color(int var) const {
    if (var < 1 || var > total_vars()) throw std::out_of_range("bad variable id");
    int cell_index = (var - 1) / num_colors_;
    int color = (var - 1) % num_colors_ + 1;
    return {{cell_index % width_ + 1, cell_index / width_ + 1}, color};
}

std::pair<CnfInstance, VarMap> encode_window(int w, int h, int num_colors,
                                             const SSequence& s,
                                             const std::map<GridCoord, int>& fixed,
                                             std::optional<TorusPeriods> torus) {
    if (w < 1 || h < 1 || num_colors < 1)
        throw std::invalid_argument("degenerate window");
    if (torus && (torus->p != w || torus->q != h))
        throw std::invalid_argument("torus periods must equal the window extent");
    VarMap vm(w, h, num_colors);
    CnfInstance cnf;
    cnf.num_vars = vm.total_vars();
    cnf.add_comment("window " + std::to_string(w) + "x" + std::to_string(h) +
                    " colors=" + std::to_string(num_colors) + " s=" + s.to_string() +
                    (torus ? " torus" : ""));

    // Exactly one color per cell: at-least-one plus pairwise at-most-one.
    for (int y = 1; y <= h; ++y)
        for (int x = 1; x <= w; ++x) {
            std::vector<int> alo;
            for (int col = 1; col <= num_colors; ++col)
                alo.push_back(vm.var({x, y}, col));
            cnf.add_clause(alo);
            for (int c1 = 1; c1 <= num_colors; ++c1)
                for (int c2 = c1 + 1; c2 <= num_colors; ++c2)
                    cnf.add_clause({-vm.var({x, y}, c1), -vm.var({x, y}, c2)});
        }

    // Distance clauses: same color within reach is forbidden.
    for (int y1 = 1; y1 <= h; ++y1)
        for (int x1 = 1; x1 <= w; ++x1) {
            GridCoord a{x1, y1};
            int ia = (y1 - 1) * w + (x1 - 1);
            for (int y2 = 1; y2 <= h; ++y2)
                for (int x2 = 1; x2 <= w; ++x2) {
                    GridCoord b{x2, y2};
                    int ib = (y2 - 1) * w + (x2 - 1);
                    if (ib <= ia) continue;
                    int d = torus ? toroidal_distance(a, b, torus->p, torus->q)
                                  : chebyshev_distance(a, b);
                    for (int col = 1; col <= num_colors; ++col)
                        if (d <= s.value(col))
                            cnf.add_clause({-vm.var(a, col), -vm.var(b, col)});
                }
        }

    for (const auto& [cell, color] : fixed) {
        if (color < 1 || color > num_colors)
            throw std::invalid_argument("fixed color outside palette");
        cnf.add_clause({vm.var(cell, color)});
    }
    return {std::move(cnf), vm};
}

CnfInstance encode_binary_abstraction(int w, int h, const SSequence& s,
                                      int num_colors,
                                      const std::vector<GridCoord>& assumed_ones,
                                      const std::vector<PatternSet>& axioms) {
    CnfInstance cnf;
    cnf.num_vars = w * h;
    cnf.add_comment("binary abstraction " + std::to_string(w) + "x" +
                    std::to_string(h) + " colors=" + std::to_string(num_colors) +
                    " s=" + s.to_string());
    auto cell_var = [w](int x, int y) { return (y - 1) * w + x; };

    // Independence: no two ONEs at king distance 1.
    for (int y = 1; y <= h; ++y)
        for (int x = 1; x <= w; ++x)
            for (auto [dx, dy] :
                 {std::pair{1, 0}, {0, 1}, {1, 1}, {1, -1}}) {
                int nx = x + dx, ny = y + dy;
                if (nx < 1 || nx > w || ny < 1 || ny > h) continue;
                cnf.add_clause({-cell_var(x, y), -cell_var(nx, ny)});
            }

    // Forbidden patterns: negation of every fully placed image.
    for (const auto& ps : axioms)
        for (const auto& p : ps.patterns)
            for (int ay = 1; ay + p.rows() - 1 <= h; ++ay)
                for (int ax = 1; ax + p.cols() - 1 <= w; ++ax) {
                    std::vector<int> clause;
                    for (int r = 1; r <= p.rows(); ++r)
                        for (int c = 1; c <= p.cols(); ++c)
                            if (p.one_at(r, c))
                                clause.push_back(
                                    -cell_var(ax + c - 1, ay + p.rows() - r));
                    cnf.add_clause(clause);
                }

    // Pigeonhole floor per fully contained tracked window.
    int side = s.value(2) + 1;
    WindowFloor floor = min_color1_per_window(side, side, num_colors, s);
    if (floor.applicable && floor.value > 0 && side <= w && side <= h) {
        for (int oy = 1; oy + side - 1 <= h; ++oy)
            for (int ox = 1; ox + side - 1 <= w; ++ox) {
                std::vector<int> lits;
                for (int y = oy; y < oy + side; ++y)
                    for (int x = ox; x < ox + side; ++x)
                        lits.push_back(cell_var(x, y));
                add_at_least_k(cnf, lits, floor.value);
            }
    }

    for (GridCoord c : assumed_ones) {
        if (c.x < 1 || c.x > w || c.y < 1 || c.y > h)
            throw std::invalid_argument("assumed cell outside window");
        cnf.add_clause({cell_var(c.x, c.y)});
    }
    return cnf;
}

Coloring decode(const std::vector<bool>& model, const VarMap& vm,
                std::optional<TorusPeriods> torus) {
    if (static_cast<int>(model.size()) < vm.total_vars())
        throw std::invalid_argument("model shorter than the variable map");
    Coloring out(vm.width(), vm.height(), vm.num_colors(), torus);
    for (int y = 1; y <= vm.height(); ++y)
        for (int x = 1; x <= vm.width(); ++x) {
            int found = 0;
            for (int col = 1; col <= vm.num_colors(); ++col) {
                if (model[vm.var({x, y}, col) - 1]) {
                    if (found != 0)
                        throw std::runtime_error("cell with two true colors");
                    found = col;
                }
            }
            if (found == 0) throw std::runtime_error("cell with no true color");
            out.set(x, y, found);
        }
    return out;
}

std::pair<CnfInstance, VarMap> export_task(std::string_view tag, int radius,
                                           int num_colors, const SSequence& s) {
    if (tag != "i" && tag != "iii")
        throw std::invalid_argument("export tasks cover lemma tags i and iii");
    if (radius < 0) throw std::invalid_argument("radius must be >= 0");
    // The matrix as written, not a closure image.
    const Pattern original = Pattern::parse(tag == "i" ? "1x1x1" : "1x1\nxxx\n1x1");
    int w = original.cols() + 2 * radius;
    int h = original.rows() + 2 * radius;
    std::map<GridCoord, int> fixed;
    for (int r = 1; r <= original.rows(); ++r)
        for (int c = 1; c <= original.cols(); ++c)
            if (original.one_at(r, c))
                fixed[{radius + c, radius + (original.rows() - r) + 1}] = 1;
    auto [cnf, vm] = encode_window(w, h, num_colors, s, fixed);
    cnf.comments.insert(cnf.comments.begin(),
                        "export task F-L" + std::string(tag == "i" ? "1" : "3") +
                            " radius=" + std::to_string(radius));
    return {std::move(cnf), vm};
}

}  // namespace kingpack
