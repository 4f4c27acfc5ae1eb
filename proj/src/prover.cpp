#include "kingpack/prover.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace kingpack {

struct BinaryModel::Static {
    std::vector<PatternSet> forbidden;
    // Forbidden placements as flat cell-index lists.
    std::vector<std::vector<int>> placements;
    std::vector<Rect> tracked;  // row-major by origin
    int floor = 0;
    // Per cell: tracked windows containing it (indices into `tracked`).
    std::vector<std::vector<int>> cell_windows;
};

BinaryModel::BinaryModel(int width, int height, const SSequence& s,
                         int num_colors, std::vector<PatternSet> forbidden)
    : width_(width), height_(height),
      states_(static_cast<size_t>(width) * height, CellState::FREE) {
    if (width < 1 || height < 1) throw std::invalid_argument("degenerate window");
    auto fixed = std::make_shared<Static>();
    fixed->forbidden = std::move(forbidden);

    for (const auto& ps : fixed->forbidden)
        for (const auto& p : ps.patterns)
            for (int ay = 1; ay + p.rows() - 1 <= height; ++ay)
                for (int ax = 1; ax + p.cols() - 1 <= width; ++ax) {
                    std::vector<int> cells;
                    for (int r = 1; r <= p.rows(); ++r)
                        for (int c = 1; c <= p.cols(); ++c)
                            if (p.one_at(r, c))
                                cells.push_back(index(ax + c - 1,
                                                      ay + p.rows() - r));
                    fixed->placements.push_back(std::move(cells));
                }

    int side = s.value(2) + 1;
    WindowFloor floor = min_color1_per_window(side, side, num_colors, s);
    if (floor.applicable && floor.value > 0 && side <= width && side <= height) {
        fixed->floor = floor.value;
        for (int oy = 1; oy + side - 1 <= height; ++oy)
            for (int ox = 1; ox + side - 1 <= width; ++ox)
                fixed->tracked.push_back(Rect{{ox, oy}, side, side});
    }
    fixed->cell_windows.resize(states_.size());
    for (int i = 0; i < static_cast<int>(fixed->tracked.size()); ++i) {
        const Rect& r = fixed->tracked[i];
        for (int y = r.origin.y; y < r.origin.y + r.height; ++y)
            for (int x = r.origin.x; x < r.origin.x + r.width; ++x)
                fixed->cell_windows[index(x, y)].push_back(i);
    }
    fixed_ = std::move(fixed);
}

void BinaryModel::assign(int x, int y, CellState st) {
    if (x < 1 || x > width_ || y < 1 || y > height_)
        throw std::out_of_range("cell outside window");
    states_[index(x, y)] = st;
}

int BinaryModel::tracked_window_count() const {
    return static_cast<int>(fixed_->tracked.size());
}
int BinaryModel::window_floor() const { return fixed_->floor; }
Rect BinaryModel::tracked_window(int i) const { return fixed_->tracked.at(i); }
const std::vector<PatternSet>& BinaryModel::forbidden() const {
    return fixed_->forbidden;
}

int BinaryModel::free_count() const {
    return static_cast<int>(
        std::count(states_.begin(), states_.end(), CellState::FREE));
}
int BinaryModel::one_count() const {
    return static_cast<int>(
        std::count(states_.begin(), states_.end(), CellState::ONE));
}

struct PropagationPass {
    BinaryModel& m;
    ConflictInfo* info;
    bool changed = false;

    GridCoord coord(int idx) const {
        return {idx % m.width_ + 1, idx / m.width_ + 1};
    }

    bool conflict(const char* rule, GridCoord where) {
        if (info) *info = {rule, where};
        return true;
    }

    // Returns true on conflict.
    bool independence() {
        for (int y = 1; y <= m.height(); ++y)
            for (int x = 1; x <= m.width(); ++x) {
                if (m.state(x, y) != CellState::ONE) continue;
                for (int dy = -1; dy <= 1; ++dy)
                    for (int dx = -1; dx <= 1; ++dx) {
                        if (dx == 0 && dy == 0) continue;
                        int nx = x + dx, ny = y + dy;
                        if (nx < 1 || nx > m.width() || ny < 1 || ny > m.height())
                            continue;
                        CellState st = m.state(nx, ny);
                        if (st == CellState::ONE)
                            return conflict("independence", {nx, ny});
                        if (st == CellState::FREE) {
                            m.assign(nx, ny, CellState::NOTONE);
                            changed = true;
                        }
                    }
            }
        return false;
    }

    bool patterns() {
        for (const auto& cells : m.fixed_->placements) {
            int free_idx = -1;
            int frees = 0;
            bool dead = false;
            for (int idx : cells) {
                CellState st = m.states_[idx];
                if (st == CellState::NOTONE) {
                    dead = true;
                    break;
                }
                if (st == CellState::FREE) {
                    ++frees;
                    free_idx = idx;
                }
            }
            if (dead) continue;
            if (frees == 0) return conflict("pattern", coord(cells.front()));
            if (frees == 1) {
                m.states_[free_idx] = CellState::NOTONE;
                changed = true;
            }
        }
        return false;
    }

    bool floors() {
        int floor = m.fixed_->floor;
        for (const Rect& r : m.fixed_->tracked) {
            int ones = 0, frees = 0;
            for (int y = r.origin.y; y < r.origin.y + r.height; ++y)
                for (int x = r.origin.x; x < r.origin.x + r.width; ++x) {
                    CellState st = m.state(x, y);
                    if (st == CellState::ONE) ++ones;
                    else if (st == CellState::FREE) ++frees;
                }
            if (ones + frees < floor) return conflict("floor", r.origin);
            if (ones + frees == floor && frees > 0) {
                for (int y = r.origin.y; y < r.origin.y + r.height; ++y)
                    for (int x = r.origin.x; x < r.origin.x + r.width; ++x)
                        if (m.state(x, y) == CellState::FREE) {
                            m.assign(x, y, CellState::ONE);
                            changed = true;
                        }
            }
        }
        return false;
    }
};

PropOutcome propagate(BinaryModel& m, ConflictInfo* info) {
    for (;;) {
        PropagationPass pass{m, info};
        if (pass.independence()) return PropOutcome::CONFLICT;
        if (pass.patterns()) return PropOutcome::CONFLICT;
        if (pass.floors()) return PropOutcome::CONFLICT;
        if (!pass.changed) return PropOutcome::FIXPOINT;
    }
}

namespace {

struct RefuteSearch {
    ProofBudget budget;
    std::chrono::steady_clock::time_point start;
    long long nodes = 0;
    long long conflicts = 0;
    bool out_of_budget = false;
    std::optional<BinaryModel> saturated;

    bool budget_exceeded() {
        if (budget.max_nodes >= 0 && nodes >= budget.max_nodes) return true;
        if (budget.max_seconds >= 0 && (nodes & 0xff) == 0) {
            double secs = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - start)
                              .count();
            if (secs > budget.max_seconds) return true;
        }
        return false;
    }

    // Most-constrained tracked window: least slack (#ONE + #FREE - floor)
    // among those with a FREE cell; ties fall to the earlier window in
    // row-major order. Returns the first FREE cell of that window, or
    // nullopt when no tracked window has a FREE cell left.
    std::optional<GridCoord> pick_branch_cell(const BinaryModel& m) const {
        int floor = m.window_floor();
        int best_slack = -1;
        std::optional<GridCoord> best_cell;
        for (int i = 0; i < m.tracked_window_count(); ++i) {
            Rect r = m.tracked_window(i);
            int ones = 0, frees = 0;
            GridCoord first_free{0, 0};
            for (int y = r.origin.y; y < r.origin.y + r.height; ++y)
                for (int x = r.origin.x; x < r.origin.x + r.width; ++x) {
                    CellState st = m.state(x, y);
                    if (st == CellState::ONE) ++ones;
                    else if (st == CellState::FREE) {
                        if (frees == 0) first_free = {x, y};
                        ++frees;
                    }
                }
            if (frees == 0) continue;
            int slack = ones + frees - floor;
            if (best_slack < 0 || slack < best_slack) {
                best_slack = slack;
                best_cell = first_free;
            }
        }
        return best_cell;
    }

    // True iff the subtree is fully refuted.
    bool dfs(BinaryModel m) {
        ++nodes;
        if (out_of_budget || saturated) return false;
        if (budget_exceeded()) {
            out_of_budget = true;
            return false;
        }
        if (propagate(m) == PropOutcome::CONFLICT) {
            ++conflicts;
            return true;
        }
        auto cell = pick_branch_cell(m);
        if (!cell) {
            // Cells outside every tracked window carry no floor; resolving
            // them NOTONE cannot complete a pattern or break independence.
            for (int y = 1; y <= m.height(); ++y)
                for (int x = 1; x <= m.width(); ++x)
                    if (m.state(x, y) == CellState::FREE)
                        m.assign(x, y, CellState::NOTONE);
            saturated = std::move(m);
            return false;
        }
        BinaryModel one_branch = m;
        one_branch.assign(cell->x, cell->y, CellState::ONE);
        if (!dfs(std::move(one_branch))) return false;
        m.assign(cell->x, cell->y, CellState::NOTONE);
        return dfs(std::move(m));
    }
};

}  // namespace

ProofResult refute_at_radius(const RefutationTask& task, int radius,
                             const ProofBudget& budget) {
    if (!task.binary)
        throw std::invalid_argument("task " + task.tag + " is export-only");
    if (radius < 0) throw std::invalid_argument("radius must be >= 0");

    // Bounding box of the assumed ONE cells in task-local coordinates.
    int bw = 1, bh = 1;
    for (const auto& [p, off] : task.assumed) {
        bw = std::max(bw, off.x + p.cols());
        bh = std::max(bh, off.y + p.rows());
    }
    int w = bw + 2 * radius;
    int h = bh + 2 * radius;

    BinaryModel model(w, h, task.s, task.num_colors,
                      lemma4_entries(task.axioms));
    for (const auto& [p, off] : task.assumed)
        for (int r = 1; r <= p.rows(); ++r)
            for (int c = 1; c <= p.cols(); ++c)
                if (p.one_at(r, c))
                    model.assign(radius + off.x + c,
                                 radius + off.y + (p.rows() - r) + 1,
                                 CellState::ONE);

    RefuteSearch search;
    search.budget = budget;
    search.start = std::chrono::steady_clock::now();
    bool refuted = search.dfs(std::move(model));

    ProofResult result;
    result.nodes = search.nodes;
    result.conflicts = search.conflicts;
    result.radius = radius;
    result.elapsed = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - search.start)
                         .count();
    if (refuted) {
        result.status = ProofResult::Status::REFUTED;
    } else if (search.saturated) {
        result.status = ProofResult::Status::SATURATED;
        result.model = std::move(search.saturated);
    } else {
        result.status = ProofResult::Status::BUDGET_EXCEEDED;
    }
    return result;
}

ProofResult refute(const RefutationTask& task, const ProofBudget& budget) {
    return refute_at_radius(task, task.radius, budget);
}

const std::vector<RefutationTask>& standard_tasks() {
    static const std::vector<RefutationTask> tasks = [] {
        SSequence s({1}, 6);
        auto binary = [&](const char* tag, const char* pattern,
                          std::vector<std::string> axioms) {
            RefutationTask t;
            t.tag = tag;
            t.assumed = {{Pattern::parse(pattern), {0, 0}}};
            t.axioms = std::move(axioms);
            t.s = s;
            t.num_colors = 39;
            t.binary = true;
            return t;
        };
        auto exported = [&](const char* tag, const char* pattern) {
            RefutationTask t;
            t.tag = tag;
            t.assumed = {{Pattern::parse(pattern), {0, 0}}};
            t.s = s;
            t.num_colors = 39;
            t.binary = false;
            return t;
        };
        return std::vector<RefutationTask>{
            binary("B-L2", "1xx1", {"i"}),
            binary("B-L4", "xxx1\n1xxx\nxxxx\n1x1x", {"iii"}),
            binary("B-L5", "1xx\nxxx\n1x1", {"ii", "iii", "iv"}),
            binary("B-L6", "1x1x\nxxxx\nx1x1", {"i", "ii", "v"}),
            binary("B-L7", "x1x\nxxx\n1x1", {"ii", "v", "vi"}),
            binary("B-L8", "1x1", {"ii", "v", "vii"}),
            binary("B-L9", "xx1\n1xx", {"ii", "viii"}),
            binary("B-THM", "1", {"ii", "viii", "ix"}),
            exported("F-L1", "1x1x1"),
            exported("F-L3", "1x1\nxxx\n1x1"),
        };
    }();
    return tasks;
}

const RefutationTask& standard_task(std::string_view tag) {
    for (const auto& t : standard_tasks())
        if (t.tag == tag) return t;
    throw std::invalid_argument("unknown task tag: " + std::string(tag));
}

}  // namespace kingpack
