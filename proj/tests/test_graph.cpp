#include "oracles.hpp"

#include "placement/graph.hpp"

#include <doctest.h>

using namespace placement;

TEST_CASE("neighbors") {
    CHECK(neighbors(oracle::clique(3), 0) == std::vector<VertexId>{1, 2});
    CHECK(neighbors(ColoredGraph(1, {}), 0).empty());
    CHECK(neighbors(oracle::path(3), 1) == std::vector<VertexId>{0, 2});
    CHECK_THROWS_AS(neighbors(oracle::path(3), 3), Error);
}

TEST_CASE("construction rejects malformed graphs") {
    std::vector<Edge> loop{{0, 0}}, parallel{{0, 1}, {1, 0}}, outside{{0, 2}};
    CHECK_THROWS_AS(ColoredGraph(2, loop), Error);
    CHECK_THROWS_AS(ColoredGraph(2, parallel), Error);
    CHECK_THROWS_AS(ColoredGraph(2, outside), Error);
    std::vector<Edge> ok{{1, 0}};
    CHECK_THROWS_AS(ColoredGraph(2, ok, {CellColor::Uncolored}), Error);
}

TEST_CASE("adjacency is symmetric and edges are normalized") {
    std::vector<Edge> e{{2, 0}, {1, 2}};
    ColoredGraph g(3, e);
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(2, 0));
    CHECK_FALSE(g.adjacent(0, 1));
    CHECK(g.edge_count() == 2);
}

TEST_CASE("same_color_component") {
    ColoredGraph tri = oracle::clique(3).with_coloring(std::vector<CellColor>(3, CellColor::LeftOwned));
    CHECK(same_color_component(tri, 0) == std::vector<VertexId>{0, 1, 2});

    ColoredGraph bwb = oracle::path(3).with_coloring(
        {CellColor::LeftOwned, CellColor::RightOwned, CellColor::LeftOwned});
    CHECK(same_color_component(bwb, 0) == std::vector<VertexId>{0});

    ColoredGraph single = ColoredGraph(1, {}).with_color(0, CellColor::LeftOwned);
    CHECK(same_color_component(single, 0) == std::vector<VertexId>{0});

    CHECK_THROWS_AS(same_color_component(oracle::path(2), 0), Error);
}

TEST_CASE("component_has_liberty") {
    ColoredGraph lone = ColoredGraph(1, {}).with_color(0, CellColor::LeftOwned);
    std::vector<VertexId> c0{0};
    CHECK_FALSE(component_has_liberty(lone, c0));

    ColoredGraph pair = oracle::path(2).with_color(0, CellColor::LeftOwned);
    CHECK(component_has_liberty(pair, c0));

    // L-L component whose only outside neighbor is Right.
    ColoredGraph blocked = oracle::path(3).with_coloring(
        {CellColor::LeftOwned, CellColor::LeftOwned, CellColor::RightOwned});
    std::vector<VertexId> c01{0, 1};
    CHECK_FALSE(component_has_liberty(blocked, c01));
}

TEST_CASE("euler_bound_check") {
    CHECK(euler_bound_check(oracle::clique(4)));
    CHECK_FALSE(euler_bound_check(oracle::clique(5)));
    CHECK(euler_bound_check(oracle::path(2)));
    CHECK(euler_bound_check(ColoredGraph()));
}

TEST_CASE("coloring helpers") {
    ColoredGraph g = oracle::path(3).with_color(0, CellColor::LeftOwned).with_color(2, CellColor::RightOwned);
    CHECK(g.uncolored_count() == 1);
    ColoredGraph s = g.color_swapped();
    CHECK(s.color(0) == CellColor::RightOwned);
    CHECK(s.color(2) == CellColor::LeftOwned);
    CHECK(s.same_structure(g));
    CHECK(s.color_swapped() == g);
    CHECK(swapped(CellColor::Uncolored) == CellColor::Uncolored);
    CHECK(opponent(PlayerColor::Left) == PlayerColor::Right);
    CHECK(player_from_char('R') == PlayerColor::Right);
    CHECK_THROWS_AS(player_from_char('x'), Error);
}
