#include "kingpack/cnf.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace kingpack {

void CnfInstance::add_clause(std::vector<int> lits) {
    if (lits.empty()) throw std::invalid_argument("empty clause");
    for (int lit : lits) {
        int v = std::abs(lit);
        if (v < 1 || v > num_vars)
            throw std::invalid_argument("literal references unknown variable");
    }
    clauses.push_back(std::move(lits));
}

void export_dimacs(const CnfInstance& cnf, std::ostream& out) {
    for (const auto& c : cnf.comments) out << "c " << c << "\n";
    out << "p cnf " << cnf.num_vars << " " << cnf.clauses.size() << "\n";
    for (const auto& clause : cnf.clauses) {
        for (int lit : clause) out << lit << " ";
        out << "0\n";
    }
}

void add_at_least_k(CnfInstance& cnf, const std::vector<int>& lits, int floor) {
    int n = static_cast<int>(lits.size());
    if (floor <= 0) return;
    if (floor > n) {
        // Unsatisfiable by construction; keep the instance well-formed.
        int v = cnf.new_var();
        cnf.add_comment("at-least-" + std::to_string(floor) + " over " +
                        std::to_string(n) + " literals: contradiction");
        cnf.add_clause({v});
        cnf.add_clause({-v});
        return;
    }
    if (floor == n) {
        for (int lit : lits) cnf.add_clause({lit});
        return;
    }
    // At least `floor` of lits true == at most n - floor of their negations
    // true; sequential counter over the negations.
    int cap = n - floor;
    std::vector<std::vector<int>> reg(n + 1, std::vector<int>(cap + 1, 0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= cap; ++j) reg[i][j] = cnf.new_var();
    auto neg = [&](int i) { return -lits[i - 1]; };  // y_i

    cnf.add_clause({-neg(1), reg[1][1]});
    for (int j = 2; j <= cap; ++j) cnf.add_clause({-reg[1][j]});
    for (int i = 2; i <= n; ++i) {
        cnf.add_clause({-neg(i), reg[i][1]});
        cnf.add_clause({-reg[i - 1][1], reg[i][1]});
        for (int j = 2; j <= cap; ++j) {
            cnf.add_clause({-neg(i), -reg[i - 1][j - 1], reg[i][j]});
            cnf.add_clause({-reg[i - 1][j], reg[i][j]});
        }
        cnf.add_clause({-neg(i), -reg[i - 1][cap]});
    }
}

}  // namespace kingpack
