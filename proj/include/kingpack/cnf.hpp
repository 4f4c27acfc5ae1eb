#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kingpack {

// Propositional instance: positive literals are variable ids 1..num_vars,
// negative literals their negations.
struct CnfInstance {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
    std::vector<std::string> comments;

    int new_var() { return ++num_vars; }

    void add_clause(std::vector<int> lits);
    void add_comment(std::string text) { comments.push_back(std::move(text)); }
};

// Standard DIMACS CNF: "c" comment lines, "p cnf <vars> <clauses>" header,
// zero-terminated clause lines. Byte-stable for identical instances.
void export_dimacs(const CnfInstance& cnf, std::ostream& out);

// Appends clauses forcing at least `floor` of `lits` true, via a sequential
// counter over fresh auxiliary variables.
void add_at_least_k(CnfInstance& cnf, const std::vector<int>& lits, int floor);

}  // namespace kingpack
