#include "kingpack/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>

namespace kingpack {

namespace {

// lit encoding: 2*v for v, 2*v+1 for its negation (v 0-based).
inline int enc(int dimacs_lit) {
    int v = std::abs(dimacs_lit) - 1;
    return 2 * v + (dimacs_lit < 0 ? 1 : 0);
}
inline int neg(int lit) { return lit ^ 1; }
inline int var_of(int lit) { return lit >> 1; }

long long luby(long long x) {
    // Restart-interval multiplier: 1,1,2,1,1,2,4,...
    long long size = 1, seq = 0;
    while (size < x + 1) {
        ++seq;
        size = 2 * size + 1;
    }
    while (size - 1 != x) {
        size = (size - 1) >> 1;
        --seq;
        x = x % size;
    }
    return 1LL << seq;
}

class Cdcl {
public:
    explicit Cdcl(const CnfInstance& cnf) : nvars_(cnf.num_vars) {
        value_.assign(nvars_, -1);
        phase_.assign(nvars_, 0);
        level_.assign(nvars_, 0);
        reason_.assign(nvars_, -1);
        activity_.assign(nvars_, 0.0);
        seen_.assign(nvars_, 0);
        watches_.assign(2 * static_cast<size_t>(nvars_), {});

        for (const auto& clause : cnf.clauses) {
            std::vector<int> lits;
            lits.reserve(clause.size());
            for (int l : clause) lits.push_back(enc(l));
            std::sort(lits.begin(), lits.end());
            lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
            bool tautology = false;
            for (size_t i = 0; i + 1 < lits.size(); ++i)
                if (lits[i + 1] == neg(lits[i])) tautology = true;
            if (tautology) continue;
            if (lits.size() == 1) {
                if (!enqueue(lits[0], -1)) {
                    root_conflict_ = true;
                    return;
                }
                continue;
            }
            add_clause(std::move(lits));
        }
    }

    SolveResult run(const SolveBudget& budget) {
        SolveResult result;
        auto start = std::chrono::steady_clock::now();
        auto elapsed = [&] {
            return std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                .count();
        };

        if (root_conflict_) {
            result.status = SolveResult::Status::UNSAT;
            result.elapsed = elapsed();
            return result;
        }

        long long restart_count = 0;
        long long conflicts_until_restart = 256 * luby(restart_count);
        long long conflicts_this_restart = 0;

        for (;;) {
            int confl = propagate();
            if (confl >= 0) {
                ++conflicts_;
                ++conflicts_this_restart;
                if (decision_level() == 0) {
                    result.status = SolveResult::Status::UNSAT;
                    break;
                }
                std::vector<int> learnt;
                int back_level = 0;
                analyze(confl, learnt, back_level);
                backtrack(back_level);
                if (learnt.size() == 1) {
                    enqueue(learnt[0], -1);
                } else {
                    int idx = add_clause(learnt);
                    enqueue(learnt[0], idx);
                }
                var_inc_ *= 1.0 / 0.95;
                if (var_inc_ > 1e100) rescale_activity();
                if (budget.max_conflicts >= 0 && conflicts_ >= budget.max_conflicts) {
                    result.status = SolveResult::Status::UNKNOWN;
                    break;
                }
                if (budget.max_seconds >= 0 && (conflicts_ & 0x3ff) == 0 &&
                    elapsed() > budget.max_seconds) {
                    result.status = SolveResult::Status::UNKNOWN;
                    break;
                }
            } else {
                if (conflicts_this_restart >= conflicts_until_restart) {
                    backtrack(0);
                    ++restart_count;
                    conflicts_until_restart = 256 * luby(restart_count);
                    conflicts_this_restart = 0;
                    continue;
                }
                int next = pick_branch_var();
                if (next < 0) {
                    result.status = SolveResult::Status::SAT;
                    result.model.resize(nvars_);
                    for (int v = 0; v < nvars_; ++v) result.model[v] = value_[v] == 1;
                    break;
                }
                ++decisions_;
                trail_lim_.push_back(static_cast<int>(trail_.size()));
                enqueue(2 * next + (phase_[next] ? 0 : 1), -1);
            }
        }
        result.decisions = decisions_;
        result.conflicts = conflicts_;
        result.elapsed = elapsed();
        return result;
    }

private:
    int nvars_;
    std::vector<std::vector<int>> clauses_;
    std::vector<std::vector<int>> watches_;  // per lit: clause indices
    std::vector<int8_t> value_;              // per var: -1 / 0 / 1
    std::vector<int8_t> phase_;
    std::vector<int> level_;
    std::vector<int> reason_;
    std::vector<double> activity_;
    std::vector<int8_t> seen_;
    std::vector<int> trail_;
    std::vector<int> trail_lim_;
    size_t qhead_ = 0;
    double var_inc_ = 1.0;
    long long decisions_ = 0;
    long long conflicts_ = 0;
    bool root_conflict_ = false;

    int decision_level() const { return static_cast<int>(trail_lim_.size()); }

    int8_t lit_value(int lit) const {
        int8_t v = value_[var_of(lit)];
        if (v < 0) return -1;
        return (lit & 1) ? static_cast<int8_t>(1 - v) : v;
    }

    int add_clause(std::vector<int> lits) {
        int idx = static_cast<int>(clauses_.size());
        watches_[lits[0]].push_back(idx);
        watches_[lits[1]].push_back(idx);
        clauses_.push_back(std::move(lits));
        return idx;
    }

    bool enqueue(int lit, int reason) {
        int v = var_of(lit);
        int8_t val = lit_value(lit);
        if (val == 0) return false;
        if (val == 1) return true;
        value_[v] = (lit & 1) ? 0 : 1;
        phase_[v] = value_[v];
        level_[v] = decision_level();
        reason_[v] = reason;
        trail_.push_back(lit);
        return true;
    }

    // Returns conflicting clause index or -1.
    int propagate() {
        while (qhead_ < trail_.size()) {
            int lit = trail_[qhead_++];
            int flit = neg(lit);  // lit became true, watchers of its negation move
            std::vector<int>& ws = watches_[flit];
            size_t keep = 0;
            for (size_t i = 0; i < ws.size(); ++i) {
                int ci = ws[i];
                std::vector<int>& cl = clauses_[ci];
                if (cl[0] == flit) std::swap(cl[0], cl[1]);
                // cl[1] == flit now
                if (lit_value(cl[0]) == 1) {
                    ws[keep++] = ci;
                    continue;
                }
                bool moved = false;
                for (size_t k = 2; k < cl.size(); ++k) {
                    if (lit_value(cl[k]) != 0) {
                        std::swap(cl[1], cl[k]);
                        watches_[cl[1]].push_back(ci);
                        moved = true;
                        break;
                    }
                }
                if (moved) continue;
                ws[keep++] = ci;
                if (!enqueue(cl[0], ci)) {
                    for (size_t j = i + 1; j < ws.size(); ++j) ws[keep++] = ws[j];
                    ws.resize(keep);
                    return ci;
                }
            }
            ws.resize(keep);
        }
        return -1;
    }

    void bump(int v) {
        activity_[v] += var_inc_;
        if (activity_[v] > 1e100) rescale_activity();
    }

    void rescale_activity() {
        for (double& a : activity_) a *= 1e-100;
        var_inc_ *= 1e-100;
    }

    void analyze(int confl, std::vector<int>& learnt, int& back_level) {
        learnt.clear();
        learnt.push_back(0);  // placeholder for the asserting literal
        int counter = 0;
        int lit = -1;
        size_t index = trail_.size();

        for (;;) {
            const std::vector<int>& cl = clauses_[confl];
            for (size_t k = (lit == -1 ? 0 : 1); k < cl.size(); ++k) {
                int q = cl[k];
                int v = var_of(q);
                if (seen_[v] || level_[v] == 0) continue;
                seen_[v] = 1;
                bump(v);
                if (level_[v] == decision_level())
                    ++counter;
                else
                    learnt.push_back(q);
            }
            do {
                lit = trail_[--index];
            } while (!seen_[var_of(lit)]);
            seen_[var_of(lit)] = 0;
            --counter;
            if (counter == 0) break;
            confl = reason_[var_of(lit)];
        }
        learnt[0] = neg(lit);

        back_level = 0;
        size_t max_pos = 1;
        for (size_t i = 1; i < learnt.size(); ++i) {
            int lv = level_[var_of(learnt[i])];
            if (lv > back_level) {
                back_level = lv;
                max_pos = i;
            }
        }
        if (learnt.size() > 1) std::swap(learnt[1], learnt[max_pos]);
        for (size_t i = 1; i < learnt.size(); ++i) seen_[var_of(learnt[i])] = 0;
    }

    void backtrack(int target_level) {
        if (decision_level() <= target_level) return;
        int bound = trail_lim_[target_level];
        for (int i = static_cast<int>(trail_.size()) - 1; i >= bound; --i)
            value_[var_of(trail_[i])] = -1;
        trail_.resize(bound);
        trail_lim_.resize(target_level);
        qhead_ = trail_.size();
    }

    int pick_branch_var() const {
        int best = -1;
        double best_act = -1.0;
        for (int v = 0; v < nvars_; ++v) {
            if (value_[v] >= 0) continue;
            if (activity_[v] > best_act) {
                best_act = activity_[v];
                best = v;
            }
        }
        return best;
    }
};

}  // namespace

SolveResult solve(const CnfInstance& cnf, const SolveBudget& budget) {
    if (cnf.num_vars == 0) {
        SolveResult r;
        r.status = SolveResult::Status::SAT;
        return r;
    }
    Cdcl solver(cnf);
    return solver.run(budget);
}

}  // namespace kingpack
