#include "oracles.hpp"

#include "placement/rulesets.hpp"

#include <doctest.h>

#include <random>

using namespace placement;

namespace {

const CellColor U = CellColor::Uncolored, L = CellColor::LeftOwned, R = CellColor::RightOwned;

ColoredGraph colored_path(std::vector<CellColor> c) { return oracle::path(c.size()).with_coloring(std::move(c)); }

}  // namespace

TEST_CASE("col_legal") {
    CHECK(col_legal(colored_path({L, R})));
    CHECK_FALSE(col_legal(colored_path({L, L})));
    CHECK(col_legal(oracle::clique(4)));
}

TEST_CASE("col_moves") {
    CHECK(col_moves(ColoredGraph(1, {}), PlayerColor::Left) == std::vector<VertexId>{0});
    ColoredGraph g = colored_path({L, U});
    CHECK(col_moves(g, PlayerColor::Left).empty());
    CHECK(col_moves(g, PlayerColor::Right) == std::vector<VertexId>{1});
    CHECK_THROWS_AS(col_moves(colored_path({L, L, U}), PlayerColor::Left), Error);
}

TEST_CASE("nogo_legal") {
    CHECK_FALSE(nogo_legal(ColoredGraph(1, {}).with_color(0, L)));
    CHECK(nogo_legal(colored_path({L, U})));
    CHECK(nogo_legal(oracle::clique(3)));
}

TEST_CASE("nogo_moves") {
    CHECK(nogo_moves(oracle::path(2), PlayerColor::Left) == std::vector<VertexId>{0, 1});
    CHECK(nogo_moves(ColoredGraph(1, {}), PlayerColor::Left).empty());
    CHECK(nogo_moves(ColoredGraph(1, {}), PlayerColor::Right).empty());
    // Right at 1 would take the last liberty of Left's stone at 0.
    ColoredGraph g = colored_path({L, U, U});
    auto right = nogo_moves(g, PlayerColor::Right);
    CHECK(std::find(right.begin(), right.end(), 1) == right.end());
    CHECK(nogo_moves(g, PlayerColor::Left) == std::vector<VertexId>{1, 2});
}

TEST_CASE("fjords_moves") {
    ColoredGraph g = colored_path({L, U});
    CHECK(fjords_moves(g, PlayerColor::Left) == std::vector<VertexId>{1});
    CHECK(fjords_moves(g, PlayerColor::Right).empty());
    CHECK(fjords_moves(oracle::clique(3), PlayerColor::Left).empty());
    CHECK(fjords_moves(oracle::clique(3), PlayerColor::Right).empty());
}

TEST_CASE("apply_placement") {
    ColoredGraph g(1, {});
    ColoredGraph a = apply_placement(RulesetTag::Col, g, 0, PlayerColor::Left);
    CHECK(a.color(0) == L);
    CHECK(a.same_structure(g));
    CHECK(col_moves(a, PlayerColor::Right).empty());
    CHECK_THROWS_AS(apply_placement(RulesetTag::Col, a, 0, PlayerColor::Right), Error);
    CHECK_THROWS_AS(apply_placement(RulesetTag::GraphNoGo, g, 0, PlayerColor::Left), Error);
    CHECK_THROWS_AS(apply_placement(RulesetTag::GraphFjords, g, 0, PlayerColor::Left), Error);

    ColoredGraph p = oracle::path(4);
    ColoredGraph q = apply_placement(RulesetTag::GraphNoGo, p, 2, PlayerColor::Right);
    CHECK(q.vertex_count() == 4);
    CHECK(q.edge_count() == 3);
    for (VertexId v : {0u, 1u, 3u}) CHECK(q.color(v) == U);
}

TEST_CASE("move sets agree with the brute-force oracle") {
    std::mt19937_64 rng(7);
    std::size_t checked = 0;
    for (std::size_t n = 0; n <= 4; ++n) {
        oracle::for_each_labeled_graph(n, [&](const ColoredGraph& g) {
            for (int k = 0; k < 3; ++k) {
                ColoredGraph c = oracle::random_coloring(g, rng);
                for (RulesetTag r : {RulesetTag::Col, RulesetTag::GraphNoGo, RulesetTag::GraphFjords}) {
                    if (!oracle::board_ok(r, c)) {
                        CHECK_THROWS_AS(placement_moves(r, c, PlayerColor::Left), Error);
                        continue;
                    }
                    for (PlayerColor p : {PlayerColor::Left, PlayerColor::Right}) {
                        REQUIRE(placement_moves(r, c, p) == oracle::moves(r, c, p));
                        ++checked;
                    }
                }
            }
        });
    }
    CHECK(checked > 500);
}

TEST_CASE("btcl positions through the generic interface") {
    std::vector<BtclArc> arcs = {{0, 1, PlayerColor::Left, false, 2}, {1, 0, PlayerColor::Right, false, 2}};
    Position pos = Position::btcl(BtclMachine(2, arcs, 0));
    auto moves = legal_moves(pos, PlayerColor::Left);
    // Flipping the goal would leave vertex 1 with no in-weight.
    REQUIRE(moves.size() == 1);
    CHECK(std::get<BtclMove>(moves[0]).is_pass());
    CHECK_THROWS_AS(pos.board(), Error);
    CHECK(ruleset_from_string("fjords") == RulesetTag::GraphFjords);
    CHECK_THROWS_AS(ruleset_from_string("go"), Error);
    CHECK_FALSE(is_placement(RulesetTag::Btcl));
}
