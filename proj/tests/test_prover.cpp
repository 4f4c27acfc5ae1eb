#include "doctest.h"

#include "kingpack/prover.hpp"

using namespace kingpack;

namespace {

const SSequence kS16({1}, 6);

Coloring to_coloring(const BinaryModel& m) {
    Coloring c(m.width(), m.height(), 2);
    for (int y = 1; y <= m.height(); ++y)
        for (int x = 1; x <= m.width(); ++x)
            c.set(x, y, m.is_one(x, y) ? 1 : 2);
    return c;
}

}  // namespace

TEST_CASE("propagate rule (a): independence") {
    SUBCASE("a ONE shades all eight neighbours") {
        BinaryModel m(3, 3, kS16, 39, {});
        m.assign(2, 2, CellState::ONE);
        CHECK(propagate(m) == PropOutcome::FIXPOINT);
        for (int y = 1; y <= 3; ++y)
            for (int x = 1; x <= 3; ++x)
                if (x != 2 || y != 2) CHECK(m.state(x, y) == CellState::NOTONE);
    }
    SUBCASE("two adjacent ONEs conflict") {
        BinaryModel m(3, 3, kS16, 39, {});
        m.assign(1, 1, CellState::ONE);
        m.assign(2, 2, CellState::ONE);
        ConflictInfo info;
        CHECK(propagate(m, &info) == PropOutcome::CONFLICT);
        CHECK(info.rule == "independence");
    }
}

TEST_CASE("propagate rule (b): forbidden patterns") {
    PatternSet row{"viii", {Pattern::parse("1x1")}};

    SUBCASE("fully decided placement conflicts") {
        BinaryModel m(3, 1, kS16, 39, {row});
        m.assign(1, 1, CellState::ONE);
        m.assign(3, 1, CellState::ONE);
        ConflictInfo info;
        CHECK(propagate(m, &info) == PropOutcome::CONFLICT);
        CHECK(info.rule == "pattern");
    }
    SUBCASE("all but one decided forces the last cell NOTONE") {
        BinaryModel m(3, 1, kS16, 39, {row});
        m.assign(1, 1, CellState::ONE);
        CHECK(propagate(m) == PropOutcome::FIXPOINT);
        CHECK(m.state(2, 1) == CellState::NOTONE);  // independence
        CHECK(m.state(3, 1) == CellState::NOTONE);  // pattern completion
    }
}

TEST_CASE("propagate rule (c): tracked window floors") {
    // 7x7 window under (1,6*) with 39 colors carries a floor of 11.
    BinaryModel m(7, 7, kS16, 39, {});
    REQUIRE(m.tracked_window_count() == 1);
    REQUIRE(m.window_floor() == 11);

    SUBCASE("tight window promotes its FREE cells to ONE") {
        // Keep 11 of the 16 lattice cells FREE, everything else NOTONE.
        int kept = 0;
        for (int y = 1; y <= 7; ++y)
            for (int x = 1; x <= 7; ++x) {
                bool lattice = x % 2 == 1 && y % 2 == 1;
                if (lattice && kept < 11) {
                    ++kept;
                    continue;
                }
                m.assign(x, y, CellState::NOTONE);
            }
        CHECK(propagate(m) == PropOutcome::FIXPOINT);
        CHECK(m.one_count() == 11);
        CHECK(m.free_count() == 0);
    }
    SUBCASE("window below its floor conflicts") {
        int kept = 0;
        for (int y = 1; y <= 7; ++y)
            for (int x = 1; x <= 7; ++x) {
                if (x % 2 == 1 && y % 2 == 1 && kept < 10) {
                    ++kept;
                    continue;
                }
                m.assign(x, y, CellState::NOTONE);
            }
        ConflictInfo info;
        CHECK(propagate(m, &info) == PropOutcome::CONFLICT);
        CHECK(info.rule == "floor");
    }
}

TEST_CASE("refute: horizontal domino dies at the root") {
    RefutationTask task;
    task.tag = "domino";
    task.assumed = {{Pattern::parse("11"), {0, 0}}};
    task.radius = 2;
    auto res = refute(task);
    CHECK(res.status == ProofResult::Status::REFUTED);
    CHECK(res.radius == 2);
    CHECK(res.conflicts >= 1);
}

TEST_CASE("refute: empty assumption saturates on a 9x9 window") {
    RefutationTask task;
    task.tag = "empty";
    task.radius = 4;  // 1x1 bounding box inflated to 9x9
    auto res = refute(task);
    REQUIRE(res.status == ProofResult::Status::SATURATED);
    REQUIRE(res.model);
    const BinaryModel& m = *res.model;
    CHECK(m.width() == 9);
    CHECK(m.free_count() == 0);

    // Saturated models satisfy independence and every tracked floor. Only
    // color 1 is meaningful in the projection; the filler color is not a
    // claim about the full coloring.
    Coloring c = to_coloring(m);
    for (const Violation& v : verify_coloring(c, kS16).violations)
        CHECK(v.color != 1);
    for (int i = 0; i < m.tracked_window_count(); ++i)
        CHECK(color1_count(c, m.tracked_window(i)) >= m.window_floor());
}

TEST_CASE("refute: B-THM is refuted on the single 7x7 window") {
    // Center ONE plus axioms (ii),(viii),(ix) cap the window at 9 < 11.
    auto res = refute_at_radius(standard_task("B-THM"), 3);
    CHECK(res.status == ProofResult::Status::REFUTED);
}

TEST_CASE("refute: determinism of search statistics") {
    auto a = refute_at_radius(standard_task("B-THM"), 3);
    auto b = refute_at_radius(standard_task("B-THM"), 3);
    CHECK(a.status == b.status);
    CHECK(a.nodes == b.nodes);
    CHECK(a.conflicts == b.conflicts);
}

TEST_CASE("refute: budgets are honoured") {
    ProofBudget tiny;
    tiny.max_nodes = 1;
    auto res = refute_at_radius(standard_task("B-THM"), 3, tiny);
    CHECK(res.status == ProofResult::Status::BUDGET_EXCEEDED);
    CHECK(res.nodes <= 1);
}

TEST_CASE("standard task registry") {
    const auto& tasks = standard_tasks();
    REQUIRE(tasks.size() == 10);
    int binary = 0, exported = 0;
    for (const auto& t : tasks) (t.binary ? binary : exported)++;
    CHECK(binary == 8);
    CHECK(exported == 2);

    CHECK(standard_task("B-THM").axioms ==
          std::vector<std::string>{"ii", "viii", "ix"});
    CHECK(standard_task("B-L9").axioms == std::vector<std::string>{"ii", "viii"});
    CHECK(standard_task("B-L2").axioms == std::vector<std::string>{"i"});
    CHECK_FALSE(standard_task("F-L1").binary);
    CHECK_FALSE(standard_task("F-L3").binary);
    CHECK_THROWS_AS(standard_task("B-L1"), std::invalid_argument);

    // Export-only tasks cannot be run through the binary engine.
    CHECK_THROWS_AS(refute(standard_task("F-L1")), std::invalid_argument);
}

TEST_CASE("binary model guards") {
    CHECK_THROWS_AS(BinaryModel(0, 3, kS16, 39, {}), std::invalid_argument);
    BinaryModel m(2, 2, kS16, 39, {});
    CHECK_THROWS_AS(m.assign(3, 1, CellState::ONE), std::out_of_range);
    CHECK(m.tracked_window_count() == 0);  // too small for a 7x7 window

    RefutationTask task;
    task.tag = "bad";
    CHECK_THROWS_AS(refute_at_radius(task, -1), std::invalid_argument);
}
