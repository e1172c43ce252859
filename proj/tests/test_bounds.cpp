#include "pcenter/bounds.hpp"

#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "pcenter/algorithm.hpp"
#include "pcenter/model.hpp"

using namespace pcenter;

TEST_CASE("combinatorial bounds on hand instances") {
    Instance inst = testutil::t3();
    CHECK(lb0(inst) == 0.0);
    CHECK(ub0(inst) == 4.0);

    Instance off_diagonal(2, 2, 1, {3, 7, 8, 2});
    CHECK(lb0(off_diagonal) == 3.0);
    CHECK(ub0(off_diagonal) == 7.0);

    Bounds b = initial_bounds(inst);
    CHECK(b.lb == 0.0);
    CHECK(b.ub == 4.0);
    CHECK(b.provenance == BoundProvenance::lb0ub0);
}

TEST_CASE("pmed1 initial bounds match the published values") {
    Instance inst = testutil::load_pmed(1);
    CHECK(lb0(inst) == 0.0);
    CHECK(ub0(inst) == 186.0);
}

TEST_CASE("snapping bounds moves both ends up to ladder members") {
    DistanceLadder ladder = build_ladder(testutil::t3());
    Bounds snapped = snap_to_ladder({1.0, 4.5, BoundProvenance::user}, ladder);
    CHECK(snapped.lb == 2.0);
    CHECK(snapped.ub == 5.0);
    CHECK(snapped.provenance == BoundProvenance::user);

    CHECK(snap_to_ladder({0.0, 99.0, BoundProvenance::user}, ladder).ub == 5.0);
    CHECK(snap_to_ladder({4.0, 4.0, BoundProvenance::user}, ladder).lb == 4.0);
    CHECK_THROWS_AS(snap_to_ladder({3.0, 1.0, BoundProvenance::user}, ladder),
                    std::invalid_argument);
    CHECK_THROWS_AS(snap_to_ladder({6.0, 7.0, BoundProvenance::user}, ladder),
                    std::invalid_argument);
}

TEST_CASE("clamping pins small distances to lb and marks large ones with ub + 1") {
    Instance inst = testutil::t3();
    Instance clamped = clamp_distances(inst, {2.0, 4.0, BoundProvenance::user});
    CHECK(std::vector<double>(clamped.distances().begin(), clamped.distances().end()) ==
          std::vector<double>{2, 2, 5, 2, 2, 4, 5, 4, 2});

    Instance twice = clamp_distances(clamped, {2.0, 4.0, BoundProvenance::user});
    CHECK(std::vector<double>(twice.distances().begin(), twice.distances().end()) ==
          std::vector<double>(clamped.distances().begin(), clamped.distances().end()));
}

TEST_CASE("fixture table parses and looks up rows") {
    FixtureTable table =
        FixtureTable::parse("instance,n,p,opt,lb,ub\nfoo,10,2,7,3,9\nbar,20,4,5,2,8\n");
    CHECK(table.rows().size() == 2);
    const FixtureRow* row = table.find("bar");
    REQUIRE(row != nullptr);
    CHECK(row->n == 20);
    CHECK(row->p == 4);
    CHECK(row->opt == 5.0);
    CHECK(row->lb == 2.0);
    CHECK(row->ub == 8.0);
    CHECK(table.find("baz") == nullptr);
}

TEST_CASE("fixture table rejects malformed input") {
    CHECK_THROWS_AS(FixtureTable::parse(""), ParseError);
    CHECK_THROWS_AS(FixtureTable::parse("a,b,c\n"), ParseError);
    CHECK_THROWS_AS(FixtureTable::parse("instance,n,p,opt,lb,ub\nfoo,10,2\n"), ParseError);
    CHECK_THROWS_AS(FixtureTable::parse("instance,n,p,opt,lb,ub\nfoo,10,2,x,3,9\n"), ParseError);
    CHECK_THROWS_AS(FixtureTable::load("/no/such/file.csv"), ParseError);
}

TEST_CASE("the shipped fixture covers the forty pmed instances") {
    FixtureTable table = FixtureTable::load(testutil::data_path("fixtures/orlib_bounds.csv"));
    CHECK(table.rows().size() == 40);
    const FixtureRow* pmed1 = table.find("pmed1");
    REQUIRE(pmed1 != nullptr);
    CHECK(pmed1->n == 100);
    CHECK(pmed1->p == 5);
    CHECK(pmed1->opt == 127.0);
    CHECK(pmed1->lb == 59.0);
    CHECK(pmed1->ub == 133.0);
    const FixtureRow* pmed10 = table.find("pmed10");
    REQUIRE(pmed10 != nullptr);
    CHECK(pmed10->opt == 20.0);
    CHECK(pmed10->lb == 11.0);
    CHECK(pmed10->ub == 44.0);
}

TEST_CASE("lb_star reaches the optimum on the hand instance") {
    const auto& cfg = testutil::solver_config();
    if (!cfg) return;
    Instance inst = testutil::t3();
    CHECK(lb_star(FormulationId::cp1, inst, initial_bounds(inst), *cfg) == 4.0);
}
