#include "oracles.hpp"

#include "placement/solver.hpp"
#include "placement/reductions.hpp"
#include "placement/text_format.hpp"

#include <doctest.h>

#include <random>

using namespace placement;

namespace {

constexpr PlayerColor Lf = PlayerColor::Left, Rt = PlayerColor::Right;

Position col(ColoredGraph g) { return Position::placement(RulesetTag::Col, std::move(g)); }

}  // namespace

TEST_CASE("outcome classes") {
    CHECK(outcome_from_winners(Lf, Lf) == OutcomeClass::L);
    CHECK(outcome_from_winners(Rt, Rt) == OutcomeClass::R);
    CHECK(outcome_from_winners(Lf, Rt) == OutcomeClass::N);
    CHECK(outcome_from_winners(Rt, Lf) == OutcomeClass::P);
    CHECK(mirrored(OutcomeClass::L) == OutcomeClass::R);
    CHECK(mirrored(OutcomeClass::N) == OutcomeClass::N);
    CHECK(to_string(OutcomeClass::P) == "P");
}

TEST_CASE("winner_from examples") {
    CHECK(winner_from(col(ColoredGraph(1, {})), Lf) == Lf);
    CHECK(winner_from(Position::placement(RulesetTag::GraphNoGo, ColoredGraph(1, {})), Lf) == Rt);
    CHECK(winner_from(col(oracle::path(2)), Lf) == Rt);
}

TEST_CASE("outcome_class examples") {
    CHECK(outcome_class(col(ColoredGraph(1, {}))) == OutcomeClass::N);
    CHECK(outcome_class(col(oracle::path(2))) == OutcomeClass::P);
    ColoredGraph fj = oracle::path(2).with_color(0, CellColor::LeftOwned);
    CHECK(outcome_class(Position::placement(RulesetTag::GraphFjords, fj)) == OutcomeClass::L);
}

TEST_CASE("stats") {
    SolveResult empty = solve_with_stats(col(ColoredGraph()), Lf);
    CHECK(empty.stats.nodes_expanded == 1);
    CHECK(*empty.winner == Rt);

    Solver s;
    Position p = col(oracle::path(5));
    SolveResult first = s.solve(p, Lf);
    SolveResult second = s.solve(p, Lf);
    CHECK(first.winner == second.winner);
    CHECK(second.stats.table_hits >= 1);
    CHECK(first.stats.max_depth <= 5);
    CHECK(s.table_size() > 0);
    s.clear();
    CHECK(s.table_size() == 0);
}

TEST_CASE("solver agrees with plain minimax") {
    std::mt19937_64 rng(11);
    for (std::size_t n = 0; n <= 5; ++n) {
        oracle::for_each_graph_up_to_iso(n, [&](const ColoredGraph& g) {
            for (int k = 0; k < 4; ++k) {
                ColoredGraph c = oracle::random_coloring(g, rng);
                for (RulesetTag r : {RulesetTag::Col, RulesetTag::GraphNoGo, RulesetTag::GraphFjords}) {
                    if (!oracle::board_ok(r, c)) continue;
                    Position pos = Position::placement(r, c);
                    for (PlayerColor p : {Lf, Rt}) {
                        PlayerColor expected = oracle::mover_wins(r, c, p) ? p : opponent(p);
                        REQUIRE(winner_from(pos, p) == expected);
                    }
                }
            }
        });
    }
}

TEST_CASE("witness is a winning move") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        ColoredGraph g = oracle::random_coloring(oracle::random_graph(6, 0.4, rng), rng);
        for (RulesetTag r : {RulesetTag::Col, RulesetTag::GraphNoGo, RulesetTag::GraphFjords}) {
            if (!oracle::board_ok(r, g)) continue;
            Position pos = Position::placement(r, g);
            SolveResult res = solve_with_stats(pos, Lf);
            if (*res.winner != Lf) {
                CHECK_FALSE(res.witness.has_value());
                continue;
            }
            REQUIRE(res.witness.has_value());
            CHECK(winner_from(apply_move(pos, Lf, *res.witness), Rt) == Lf);
        }
    }
}

TEST_CASE("workers do not change results") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
        ColoredGraph g = oracle::random_graph(9, 0.3, rng);
        for (RulesetTag r : {RulesetTag::Col, RulesetTag::GraphNoGo}) {
            Position pos = Position::placement(r, g);
            CHECK(outcome_class(pos, {0, 4}) == outcome_class(pos, {0, 1}));
        }
    }
}

TEST_CASE("budget") {
    Position pos = col(oracle::path(12));
    SolveResult res = solve_with_stats(pos, Lf, {10, 1});
    CHECK(res.budget_exceeded());
    CHECK_THROWS_AS(winner_from(pos, Lf, {10, 1}), BudgetExceeded);
    CHECK_THROWS_AS(outcome_class(pos, {10, 4}), BudgetExceeded);
}

TEST_CASE("btcl search") {
    for (auto [formula, left_wins] : std::vector<std::pair<std::string, bool>>{
             {"(1)", true}, {"(1|2)", true}, {"(1)&(2)", false}}) {
        BtclMachine m = build_pos_cnf_machine(parse_pos_cnf(formula));
        CHECK(winner_from(Position::btcl(m), Lf) == (left_wins ? Lf : Rt));
    }
}

TEST_CASE("canonical_key") {
    Position p = col(oracle::path(3));
    Position copy = p;
    CHECK(canonical_key(p) == canonical_key(copy));
    Position moved = apply_move(p, Lf, Move{VertexId{1}});
    CHECK(canonical_key(p) != canonical_key(moved));
    CHECK(canonical_key(p) != canonical_key(Position::placement(RulesetTag::GraphNoGo, oracle::path(3))));
    CHECK(canonical_key(p).find(serialize_graph(p.board())) != std::string::npos);

    BtclMachine m = build_pos_cnf_machine(parse_pos_cnf("(1)"));
    Position b = Position::btcl(m);
    Position passed = apply_move(b, Lf, Move{BtclMove::pass()});
    CHECK(canonical_key(b) != canonical_key(passed));
}

TEST_CASE("invalid positions are rejected") {
    ColoredGraph bad = oracle::path(2).with_coloring({CellColor::LeftOwned, CellColor::LeftOwned});
    CHECK_THROWS_AS(winner_from(col(bad), Lf), Error);
}
