#include "doctest.h"

#include <algorithm>
#include <set>

#include "kingpack/oracle.hpp"

using namespace kingpack;

namespace {

bool witness_consistent(const std::vector<GridCoord>& cells,
                        const std::vector<PatternSet>& forbidden, int w, int h) {
    for (size_t i = 0; i < cells.size(); ++i)
        for (size_t j = i + 1; j < cells.size(); ++j)
            if (chebyshev_distance(cells[i], cells[j]) <= 1) return false;
    Coloring c(std::max(w, 1), std::max(h, 1), 2);
    for (int y = 1; y <= h; ++y)
        for (int x = 1; x <= w; ++x) c.set(x, y, 2);
    for (GridCoord g : cells) c.set(g, 1);
    for (const auto& ps : forbidden)
        if (!find_occurrences(ColorOneView{c}, ps).empty()) return false;
    return true;
}

}  // namespace

TEST_CASE("max_color1 unconstrained census") {
    CHECK(max_color1(2, 2, {}, {}).max == 1);
    CHECK(max_color1(7, 2, {}, {}).max == 4);
    CHECK(max_color1(7, 7, {}, {}).max == 16);
    CHECK(max_color1(1, 1, {}, {}).max == 1);
}

TEST_CASE("max_color1 with forced center and theorem axioms") {
    auto res = max_color1(7, 7, {{4, 4}}, lemma4_entries({"ii", "viii", "ix"}));
    REQUIRE(res.status == CensusResult::Status::OK);
    CHECK(res.max <= 9);
    CHECK(witness_consistent(res.witness, lemma4_entries({"ii", "viii", "ix"}), 7, 7));
    CHECK(std::find(res.witness.begin(), res.witness.end(), GridCoord{4, 4}) !=
          res.witness.end());
}

TEST_CASE("max_color1 infeasible forced input") {
    auto res = max_color1(3, 3, {{1, 1}, {2, 1}}, {});
    CHECK(res.status == CensusResult::Status::INFEASIBLE);
    // Diagonal conflict crosses rows.
    auto diag = max_color1(3, 3, {{1, 1}, {2, 2}}, {});
    CHECK(diag.status == CensusResult::Status::INFEASIBLE);
    // Forced cells completing a forbidden pattern.
    auto pat = max_color1(3, 1, {{1, 1}, {3, 1}}, lemma4_entries({"viii"}));
    CHECK(pat.status == CensusResult::Status::INFEASIBLE);
}

TEST_CASE("max_color1 guards") {
    CHECK_THROWS_AS(max_color1(9, 9, {}, {}), std::invalid_argument);
    CHECK_NOTHROW(max_color1(9, 9, {}, {}, {}, 81));
    CHECK_THROWS_AS(max_color1(3, 3, {{5, 5}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(max_color1(3, 3, {}, {}, {{0, 1}}), std::invalid_argument);
}

TEST_CASE("max_color1 with blocked cells") {
    // Blocking the only remaining spots drops the 2x2 census to zero... or
    // makes a forced cell infeasible when they overlap.
    CHECK(max_color1(2, 2, {}, {}, {{1, 1}, {2, 1}, {1, 2}, {2, 2}}).max == 0);
    CHECK(max_color1(3, 1, {}, {}, {{2, 1}}).max == 2);
    auto clash = max_color1(2, 2, {{1, 1}}, {}, {{1, 1}});
    CHECK(clash.status == CensusResult::Status::INFEASIBLE);
}

TEST_CASE("enumerate_optima") {
    SUBCASE("7x2 optima all use columns 1,3,5,7") {
        auto optima = enumerate_optima(7, 2, {}, {});
        CHECK_FALSE(optima.empty());
        for (const auto& placement : optima) {
            REQUIRE(placement.size() == 4);
            std::set<int> cols;
            for (GridCoord g : placement) cols.insert(g.x);
            CHECK(cols == std::set<int>{1, 3, 5, 7});
        }
    }
    SUBCASE("2x2 has one optimum per cell") {
        auto optima = enumerate_optima(2, 2, {}, {});
        CHECK(optima.size() == 4);
    }
    SUBCASE("1x1 single optimum") {
        auto optima = enumerate_optima(1, 1, {}, {});
        REQUIRE(optima.size() == 1);
        CHECK(optima[0] == std::vector<GridCoord>{{1, 1}});
    }
}

TEST_CASE("lemma_counting_check reproduces the in-window bounds") {
    for (const auto& tag : lemma_counting_tags()) {
        auto res = lemma_counting_check(tag);
        CAPTURE(tag);
        CHECK(res.paper_bound == 10);
        CHECK(res.bound <= res.paper_bound);
        CHECK(res.ok);
    }
    CHECK_THROWS_AS(lemma_counting_check("ii"), std::invalid_argument);
}
