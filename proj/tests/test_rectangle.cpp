#include <doctest.h>

#include <map>

#include "lcone/rectangle.hpp"

using namespace lcone;

TEST_SUITE_BEGIN("rectangle");

TEST_CASE("single rectangle fixtures") {
    // components of LRL- at rank 5, left to right
    auto cs = components(parse_partial_quiver(5, "LRL-"));
    REQUIRE(cs.size() == 3);

    RectangleGrid g0 = rectangle_of(5, cs[0]); // L, a=4, b=6
    CHECK(g0.U == 1);
    CHECK(g0.V == 4);
    CHECK(g0.base == 1); // column of labels 1,2,3,4

    RectangleGrid g1 = rectangle_of(5, cs[1]); // R, a=3, b=5
    CHECK(g1.U == 2);
    CHECK(g1.V == 3);
    CHECK(g1.base == 2);
    // corner labels: left b-1, top b-a, right n+1-a, bottom n
    CHECK(g1.base + (g1.V - 1) == 4);
    CHECK(g1.base == 2);
    CHECK(g1.base + (g1.U - 1) == 3);
    CHECK(g1.base + (g1.U - 1) + (g1.V - 1) == 5);

    RectangleGrid g2 = rectangle_of(5, cs[2]); // L, a=2, b=4
    CHECK(g2.U == 3);
    CHECK(g2.V == 2);
    CHECK(g2.base == 1);

    RectangleGrid rho1 = rectangle_of_simple(2, 1);
    CHECK(rho1.U == 2);
    CHECK(rho1.V == 1);
    CHECK(rho1.base == 1);
}

TEST_CASE("glued diagram fixture") {
    RectangleDiagram d = diagram(parse_partial_quiver(5, "LRL-"));
    // labels 2 and 3 in the middle carry multiplicity 2
    std::map<int, int> mult_count;
    int total_cells = 0;
    for (const DiagramCell& c : d.cells) {
        ++total_cells;
        if (c.mult == 2) ++mult_count[c.label];
    }
    CHECK(mult_count == std::map<int, int>{{2, 1}, {3, 1}});
    CHECK(total_cells == 9);

    REQUIRE(d.box_rows.size() == 3);
    CHECK(d.box_rows[0].count == 1);
    CHECK(d.box_rows[1].count == 3);
    CHECK(d.box_rows[2].count == 2);
    CHECK(d.central_index == 2);
}

TEST_CASE("tiny diagrams") {
    RectangleDiagram dR = diagram(parse_partial_quiver(2, "R"));
    REQUIRE(dR.cells.size() == 1);
    CHECK(dR.cells[0].label == 2);
    CHECK(dR.cells[0].mult == 1);

    RectangleDiagram dL = diagram(parse_partial_quiver(2, "L"));
    REQUIRE(dL.cells.size() == 1);
    CHECK(dL.cells[0].label == 1);

    CHECK(mu(diagram(parse_partial_quiver(3, "L-"))) ==
          std::vector<int>{2, 1});
}

TEST_CASE("reading sequence and monomial fixture") {
    RectangleDiagram d = diagram(parse_partial_quiver(5, "LRL-"));
    CHECK(mu(d) == std::vector<int>{4, 5, 2, 3, 3, 4, 1, 2, 2, 3, 1});
    std::vector<std::pair<int, int>> want = {{4, 1}, {5, 1}, {2, 1}, {3, 2},
                                             {4, 1}, {1, 1}, {2, 2}, {3, 1},
                                             {1, 1}};
    CHECK(monomial_word(d) == want);
}

TEST_CASE("root set and indicator fixtures") {
    RectangleDiagram d = diagram(parse_partial_quiver(5, "LRL-"));
    std::set<PositiveRoot> want = {{1, 2}, {2, 3}, {3, 4},
                                   {4, 6}, {1, 4}, {2, 5}};
    CHECK(s_set(d) == want);
    CHECK(v_vector(d) ==
          std::vector<int>{0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 1});

    RectangleDiagram dR = diagram(parse_partial_quiver(2, "R"));
    CHECK(s_set(dR) == std::set<PositiveRoot>{{2, 3}});
    CHECK(v_vector(dR) == std::vector<int>{1, 0, 0});

    RectangleDiagram dL = diagram(parse_partial_quiver(2, "L"));
    CHECK(s_set(dL) == std::set<PositiveRoot>{{1, 2}});
    CHECK(v_vector(dL) == std::vector<int>{0, 0, 1});
}

TEST_CASE("simple diagrams") {
    // the rank-n diagram of a simple index j is one rectangle; its root
    // set is {alpha_{1+c, n+2-j+c} : 0 <= c <= j-1}
    for (int n = 2; n <= 5; ++n)
        for (int j = 1; j <= n; ++j) {
            RectangleDiagram d = diagram_simple(n, j);
            std::set<PositiveRoot> want;
            for (int c = 0; c < j; ++c)
                want.insert({1 + c, n + 2 - j + c});
            CHECK(s_set(d) == want);
            CHECK((int)d.cells.size() == j * (n + 1 - j));
        }
}

TEST_CASE("diagrams stay consistent across all partial quivers") {
    for (int n = 2; n <= 6; ++n)
        for (const PartialQuiver& P : all_partial_quivers(n)) {
            RectangleDiagram d = diagram(P); // glue assertions live inside
            long long mult_sum = 0;
            for (const DiagramCell& c : d.cells) mult_sum += c.mult;
            CHECK((int)mu(d).size() == mult_sum);
            CHECK(d.central_index >= 0);
            CHECK(d.central_index <= (int)d.box_rows.size());
        }
}

TEST_SUITE_END();
