#include "kingpack/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace kingpack {

namespace {

// One forbidden-pattern placement, pre-sliced into per-row bitmasks.
// row_masks[0] is the placement's bottom row; top_row = bottom + height - 1.
struct Placement {
    int top_row;  // 1-based grid row at which the placement completes
    int bottom_row;
    std::vector<uint64_t> row_masks;
};

struct Search {
    int w, h;
    std::vector<uint64_t> forced;          // per row, 1-based shifted to 0
    std::vector<uint64_t> blocked;         // cells that may never be ONE
    std::vector<std::vector<uint64_t>> row_options;  // valid masks per row
    std::vector<std::vector<Placement>> by_top_row;  // index: row 1..h
    std::vector<int> suffix_bound;         // rows y..h ignoring interaction
    std::vector<uint64_t> chosen;

    bool feasible = true;

    Search(int w_, int h_, const std::vector<GridCoord>& forced_ones,
           const std::vector<PatternSet>& forbidden,
           const std::vector<GridCoord>& blocked_cells)
        : w(w_), h(h_), forced(h_ + 1, 0), blocked(h_ + 1, 0),
          by_top_row(h_ + 1) {
        for (GridCoord c : forced_ones) {
            if (c.x < 1 || c.x > w || c.y < 1 || c.y > h)
                throw std::invalid_argument("forced cell outside window");
            forced[c.y] |= uint64_t{1} << (c.x - 1);
        }
        for (GridCoord c : blocked_cells) {
            if (c.x < 1 || c.x > w || c.y < 1 || c.y > h)
                throw std::invalid_argument("blocked cell outside window");
            blocked[c.y] |= uint64_t{1} << (c.x - 1);
        }
        for (int y = 1; y <= h; ++y)
            if (forced[y] & blocked[y]) {
                feasible = false;
                return;
            }

        row_options.resize(h + 1);
        for (int y = 1; y <= h; ++y) {
            generate_masks(y);
            if (row_options[y].empty()) feasible = false;
        }

        for (const auto& ps : forbidden)
            for (const auto& p : ps.patterns) {
                if (p.rows() > h || p.cols() > w) continue;
                for (int ay = 1; ay + p.rows() - 1 <= h; ++ay)
                    for (int ax = 1; ax + p.cols() - 1 <= w; ++ax) {
                        Placement pl;
                        pl.bottom_row = ay;
                        pl.top_row = ay + p.rows() - 1;
                        pl.row_masks.resize(p.rows());
                        for (int r = 1; r <= p.rows(); ++r)
                            for (int c = 1; c <= p.cols(); ++c)
                                if (p.one_at(r, c))
                                    pl.row_masks[p.rows() - r] |=
                                        uint64_t{1} << (ax + c - 2);
                        by_top_row[pl.top_row].push_back(std::move(pl));
                    }
            }

        suffix_bound.assign(h + 2, 0);
        for (int y = h; y >= 1; --y) {
            int best = 0;
            for (uint64_t m : row_options[y])
                best = std::max(best, std::popcount(m));
            suffix_bound[y] = suffix_bound[y + 1] + best;
        }
        chosen.assign(h + 1, 0);
    }

    // All masks without horizontally adjacent bits that contain the row's
    // forced bits, in increasing numeric order.
    void generate_masks(int y) {
        std::vector<uint64_t> out;
        uint64_t must = forced[y];
        if (must & (must << 1)) return;  // forced cells already adjacent
        std::function<void(int, uint64_t)> rec = [&](int bit, uint64_t mask) {
            if (bit >= w) {
                if ((mask & must) == must) out.push_back(mask);
                return;
            }
            rec(bit + 1, mask);
            if ((bit == 0 || !(mask & (uint64_t{1} << (bit - 1)))) &&
                !(blocked[y] & (uint64_t{1} << bit)))
                rec(bit + 1, mask | (uint64_t{1} << bit));
        };
        rec(0, 0);
        std::sort(out.begin(), out.end());
        row_options[y] = std::move(out);
    }

    bool row_compatible(int y, uint64_t mask) const {
        if (y > 1) {
            uint64_t prev = chosen[y - 1];
            if (mask & (prev | (prev << 1) | (prev >> 1))) return false;
        }
        return true;
    }

    bool pattern_hit(int y) const {
        for (const Placement& pl : by_top_row[y]) {
            bool all = true;
            for (int dy = 0; dy < static_cast<int>(pl.row_masks.size()); ++dy) {
                uint64_t need = pl.row_masks[dy];
                if ((chosen[pl.bottom_row + dy] & need) != need) {
                    all = false;
                    break;
                }
            }
            if (all) return true;
        }
        return false;
    }

    std::vector<GridCoord> cells_of(const std::vector<uint64_t>& rows_) const {
        std::vector<GridCoord> out;
        for (int y = 1; y <= h; ++y)
            for (int x = 1; x <= w; ++x)
                if (rows_[y] & (uint64_t{1} << (x - 1))) out.push_back({x, y});
        return out;
    }
};

}  // namespace

CensusResult max_color1(int w, int h, const std::vector<GridCoord>& forced_ones,
                        const std::vector<PatternSet>& forbidden,
                        const std::vector<GridCoord>& blocked, int cell_cap) {
    if (w < 1 || h < 1) throw std::invalid_argument("degenerate window");
    if (w * h > cell_cap) throw std::invalid_argument("window exceeds cell cap");
    if (w > 62) throw std::invalid_argument("window too wide for bitmask rows");

    Search s(w, h, forced_ones, forbidden, blocked);
    CensusResult result;
    if (!s.feasible) {
        result.status = CensusResult::Status::INFEASIBLE;
        return result;
    }

    int best = -1;
    std::vector<uint64_t> best_rows;
    std::function<void(int, int)> dfs = [&](int y, int count) {
        if (count + s.suffix_bound[y] <= best) return;
        if (y > h) {
            best = count;
            best_rows = s.chosen;
            return;
        }
        for (uint64_t mask : s.row_options[y]) {
            if (!s.row_compatible(y, mask)) continue;
            s.chosen[y] = mask;
            if (!s.pattern_hit(y)) dfs(y + 1, count + std::popcount(mask));
            s.chosen[y] = 0;
        }
    };
    dfs(1, 0);

    if (best < 0) {
        result.status = CensusResult::Status::INFEASIBLE;
        return result;
    }
    result.max = best;
    result.witness = s.cells_of(best_rows);
    return result;
}

std::vector<std::vector<GridCoord>> enumerate_optima(
    int w, int h, const std::vector<GridCoord>& forced_ones,
    const std::vector<PatternSet>& forbidden,
    const std::vector<GridCoord>& blocked, int cell_cap) {
    CensusResult top = max_color1(w, h, forced_ones, forbidden, blocked, cell_cap);
    if (top.status != CensusResult::Status::OK) return {};

    Search s(w, h, forced_ones, forbidden, blocked);
    std::vector<std::vector<GridCoord>> optima;
    std::function<void(int, int)> dfs = [&](int y, int count) {
        if (count + s.suffix_bound[y] < top.max) return;
        if (y > h) {
            if (count == top.max) optima.push_back(s.cells_of(s.chosen));
            return;
        }
        for (uint64_t mask : s.row_options[y]) {
            if (!s.row_compatible(y, mask)) continue;
            s.chosen[y] = mask;
            if (!s.pattern_hit(y)) dfs(y + 1, count + std::popcount(mask));
            s.chosen[y] = 0;
        }
    };
    dfs(1, 0);
    return optima;
}

namespace {

struct LemmaCountSpec {
    const char* tag;
    std::vector<GridCoord> forced;
    std::vector<GridCoord> blocked;
    std::vector<std::string> axioms;
    int paper_bound;
};

// Forced cells are the color-1 squares fixed by the respective counting
// argument inside its own 7x7 window; for "vi" the window is the one
// shifted down-left by one, so the derived color-1 cells land inside it.
// Two further color-1 squares sit just outside that shifted window, one
// past the top edge and one past the right edge; their king-distance
// shadows reach back in and block (4,7) and (7,7).
const std::vector<LemmaCountSpec>& lemma_count_registry() {
    static const std::vector<LemmaCountSpec> registry = {
        {"v", {{2, 2}, {2, 4}, {4, 2}}, {}, {"ii", "iii", "iv"}, 10},
        {"vi",
         {{3, 2}, {5, 3}, {7, 3}, {2, 4}, {4, 5}, {6, 5}, {2, 6}},
         {{4, 7}, {7, 7}},
         {"i", "ii", "v"},
         10},
        {"viii", {{3, 4}, {5, 4}}, {}, {"ii", "v", "vii"}, 10},
    };
    return registry;
}

}  // namespace

LemmaCountResult lemma_counting_check(std::string_view tag) {
    for (const auto& spec : lemma_count_registry()) {
        if (spec.tag != tag) continue;
        CensusResult census = max_color1(7, 7, spec.forced,
                                         lemma4_entries(spec.axioms),
                                         spec.blocked);
        LemmaCountResult out;
        out.tag = spec.tag;
        out.paper_bound = spec.paper_bound;
        out.bound = census.max;
        out.ok = census.status == CensusResult::Status::INFEASIBLE ||
                 census.max <= spec.paper_bound;
        return out;
    }
    throw std::invalid_argument("unknown lemma counting tag: " + std::string(tag));
}

std::vector<std::string> lemma_counting_tags() {
    std::vector<std::string> out;
    for (const auto& spec : lemma_count_registry()) out.emplace_back(spec.tag);
    return out;
}

}  // namespace kingpack
