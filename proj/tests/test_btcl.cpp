#include "placement/btcl.hpp"

#include <doctest.h>

using namespace placement;

namespace {

// Vertex 0 is fed by two weight-1 arcs from 1 and 2; each of those is fed by
// a weight-2 arc. Arc 0 (1->0, Left) is the goal.
BtclMachine small() {
    std::vector<BtclArc> arcs = {
        {1, 0, PlayerColor::Left, false, 1},  {2, 0, PlayerColor::Right, false, 1},
        {0, 1, PlayerColor::Left, false, 2},  {0, 2, PlayerColor::Right, false, 2},
        {3, 0, PlayerColor::Left, false, 2},  {0, 3, PlayerColor::Right, false, 2},
    };
    return BtclMachine(4, arcs, 0);
}

}  // namespace

TEST_CASE("in-weight") {
    BtclMachine m = small();
    CHECK(btcl_in_weight(m, 0) == 4);
    CHECK(btcl_in_weight(m, 1) == 2);
    CHECK(btcl_in_weight(m, 3) == 2);
    CHECK(btcl_legal(m));
    // A vertex with no incoming arc is rejected at construction.
    std::vector<BtclArc> none = {{0, 1, PlayerColor::Left, false, 2}, {1, 0, PlayerColor::Left, false, 2}};
    CHECK_THROWS_AS(BtclMachine(3, none, 0), Error);
}

TEST_CASE("machine validation") {
    CHECK(btcl_legal(BtclMachine()));
    std::vector<BtclArc> bad_weight = {{0, 1, PlayerColor::Left, false, 3}};
    CHECK_THROWS_AS(BtclMachine(2, bad_weight, 0), Error);
    std::vector<BtclArc> right_goal = {{0, 1, PlayerColor::Right, false, 2}, {1, 0, PlayerColor::Left, false, 2}};
    CHECK_THROWS_AS(BtclMachine(2, right_goal, 0), Error);
    std::vector<BtclArc> one = {{0, 1, PlayerColor::Left, false, 1}, {1, 0, PlayerColor::Left, false, 2}};
    CHECK_THROWS_AS(BtclMachine(2, one, 0), Error);
    std::vector<BtclArc> loop = {{0, 0, PlayerColor::Left, false, 2}};
    CHECK_THROWS_AS(BtclMachine(1, loop, 0), Error);
}

TEST_CASE("moves and flips") {
    BtclMachine m = small();
    auto left = btcl_moves(m, PlayerColor::Left);
    // Arc 0 reversal would leave vertex 0 with in-weight 3: legal. Arc 2
    // reversal leaves vertex 1 with 0: illegal. Arc 4 leaves vertex 0 with 2.
    CHECK(left == std::vector<BtclMove>{BtclMove::flip(0), BtclMove::flip(4), BtclMove::pass()});
    auto right = btcl_moves(m, PlayerColor::Right);
    CHECK(std::find(right.begin(), right.end(), BtclMove::flip(0)) == right.end());

    BtclMachine after = btcl_apply(m, PlayerColor::Left, BtclMove::flip(4));
    CHECK(after.arc(4).tail == 0);
    CHECK(after.arc(4).head == 3);
    CHECK(after.arc(4).flipped);
    CHECK_FALSE(btcl_left_has_won(after));
    auto again = btcl_moves(after, PlayerColor::Left);
    CHECK(std::find(again.begin(), again.end(), BtclMove::flip(4)) == again.end());
    CHECK_THROWS_AS(btcl_apply(after, PlayerColor::Left, BtclMove::flip(4)), Error);
    CHECK_THROWS_AS(btcl_apply(after, PlayerColor::Right, BtclMove::flip(0)), Error);
}

TEST_CASE("goal flip and passes end the game") {
    BtclMachine m = small();
    CHECK_FALSE(btcl_left_has_won(m));
    BtclMachine won = btcl_apply(m, PlayerColor::Left, BtclMove::flip(0));
    CHECK(btcl_left_has_won(won));
    CHECK(won.game_over());
    CHECK(btcl_moves(won, PlayerColor::Right).empty());

    BtclMachine p1 = btcl_apply(m, PlayerColor::Left, BtclMove::pass());
    CHECK(p1.consecutive_passes() == 1);
    BtclMachine p2 = btcl_apply(p1, PlayerColor::Right, BtclMove::pass());
    CHECK(p2.consecutive_passes() == 2);
    CHECK(p2.game_over());
    CHECK_FALSE(btcl_left_has_won(p2));
    BtclMachine reset = btcl_apply(p1, PlayerColor::Right, BtclMove::flip(1));
    CHECK(reset.consecutive_passes() == 0);
}

TEST_CASE("vertex kinds") {
    CHECK(vertex_kind_from_string(to_string(VertexKind::Choice)) == VertexKind::Choice);
    CHECK_THROWS_AS(vertex_kind_from_string("nand"), Error);
    std::vector<BtclArc> arcs = {{0, 1, PlayerColor::Left, false, 2}, {1, 0, PlayerColor::Left, false, 2}};
    CHECK_THROWS_AS(BtclMachine(2, arcs, 0, {VertexKind::Goal}), Error);
    BtclMachine m(2, arcs, 0, {VertexKind::Goal, VertexKind::Terminal});
    CHECK(m.kind(0) == VertexKind::Goal);
}
