#include "pcenter/lp_format.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "pcenter/formulations.hpp"

using namespace pcenter;

namespace {

// One variable of every bound shape the writer distinguishes.
Model sample_model() {
    const double inf = std::numeric_limits<double>::infinity();
    Model m;
    m.variables.push_back({"y_1", VarKind::binary, 0.0, 1.0});
    m.variables.push_back({"y_2", VarKind::binary, 0.0, 0.0});
    m.variables.push_back({"R", VarKind::continuous, 0.0, inf});
    m.variables.push_back({"w", VarKind::continuous, 0.5, 2.0});
    m.variables.push_back({"g", VarKind::general_integer, 0.0, 7.0});
    m.objective.terms = {{2, 1.0}, {3, 2.5}};
    m.objective.offset = 3.0;
    m.constraints.push_back({"c1", {{0, 1.0}, {1, -1.0}}, Sense::ge, 1.0});
    m.constraints.push_back({"c2", {{2, 1.0}, {4, 4.0}}, Sense::le, 9.0});
    m.constraints.push_back({"c3", {{3, -1.0}}, Sense::eq, 0.0});
    return m;
}

} // namespace

TEST_CASE("writer emits the fixed section order with exact spacing") {
    CHECK(write_lp_file(sample_model()) ==
          "Minimize\n"
          " obj: 1 R + 2.5 w\n"
          "Subject To\n"
          " c1: 1 y_1 - 1 y_2 >= 1\n"
          " c2: 1 R + 4 g <= 9\n"
          " c3: -1 w = 0\n"
          "Bounds\n"
          " y_2 <= 0\n"
          " 0.5 <= w <= 2\n"
          " g <= 7\n"
          "Generals\n"
          " g\n"
          "Binaries\n"
          " y_1\n"
          " y_2\n"
          "End\n");
}

TEST_CASE("relaxation drops integrality but keeps every bound") {
    Model relaxed = relax(sample_model());
    for (const auto& v : relaxed.variables) CHECK(v.kind == VarKind::continuous);
    CHECK(write_lp_file(relaxed) ==
          "Minimize\n"
          " obj: 1 R + 2.5 w\n"
          "Subject To\n"
          " c1: 1 y_1 - 1 y_2 >= 1\n"
          " c2: 1 R + 4 g <= 9\n"
          " c3: -1 w = 0\n"
          "Bounds\n"
          " y_1 <= 1\n"
          " y_2 <= 0\n"
          " 0.5 <= w <= 2\n"
          " g <= 7\n"
          "End\n");
}

TEST_CASE("an empty objective still yields valid LP text") {
    Model m;
    m.variables.push_back({"a", VarKind::continuous, 0.0,
                           std::numeric_limits<double>::infinity()});
    CHECK(write_lp_file(m) == "Minimize\n obj: 0 a\nEnd\n");
}

TEST_CASE("writer rejects names the format cannot carry") {
    Model m;
    m.variables.push_back({"has space", VarKind::continuous, 0.0, 1.0});
    CHECK_THROWS_AS(write_lp_file(m), std::logic_error);

    Model digit;
    digit.variables.push_back({"2x", VarKind::continuous, 0.0, 1.0});
    CHECK_THROWS_AS(write_lp_file(digit), std::logic_error);

    Model label;
    label.variables.push_back({"x", VarKind::continuous, 0.0, 1.0});
    label.constraints.push_back({"bad label", {{0, 1.0}}, Sense::le, 1.0});
    CHECK_THROWS_AS(write_lp_file(label), std::logic_error);
}

TEST_CASE("cp2 files declare the rank variable as a bounded general") {
    Model cp2 = build_formulation(FormulationId::cp2, testutil::t3());
    std::string text = write_lp_file(cp2);
    CHECK(text.find("Generals\n r\n") != std::string::npos);
    CHECK(text.find(" r <= 3\n") != std::string::npos);
    CHECK(text.find("Binaries\n y_1\n y_2\n y_3\n") != std::string::npos);
}

TEST_CASE("p1 files keep pinned assignment variables pinned") {
    Model pinned = build_p1(testutil::t3(), 4.0);
    std::string text = write_lp_file(pinned);
    CHECK(text.find(" x_1_3 <= 0\n") != std::string::npos);
    CHECK(text.find(" x_3_1 <= 0\n") != std::string::npos);
    // the same holds for the relaxation file
    std::string relaxed = write_lp_file(relax(pinned));
    CHECK(relaxed.find(" x_1_3 <= 0\n") != std::string::npos);
}
