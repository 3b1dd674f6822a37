#ifndef PLACEMENT_RULESETS_HPP
#define PLACEMENT_RULESETS_HPP

#include "placement/btcl.hpp"
#include "placement/graph.hpp"

#include <string_view>
#include <variant>
#include <vector>

namespace placement {

enum class RulesetTag : std::uint8_t { Col, GraphNoGo, GraphFjords, Btcl };

std::string_view to_string(RulesetTag r);
/// Accepts the CLI spellings `col`, `nogo`, `fjords`, `btcl`.
RulesetTag ruleset_from_string(std::string_view s);

bool is_placement(RulesetTag r);

// Col: no edge joins two vertices of the same player color.
bool col_legal(const ColoredGraph& g);
std::vector<VertexId> col_moves(const ColoredGraph& g, PlayerColor p);

// Graph-NoGo: every single-color component keeps an uncolored neighbor.
bool nogo_legal(const ColoredGraph& g);
std::vector<VertexId> nogo_moves(const ColoredGraph& g, PlayerColor p);

// Graph-Fjords: a new mark must touch a mark of the same player.
std::vector<VertexId> fjords_moves(const ColoredGraph& g, PlayerColor p);

/// Board-level legality predicate of a placement ruleset (always true for
/// Fjords).
bool board_legal(RulesetTag r, const ColoredGraph& g);

/// Sorted legal placements for `p`. Throws if the board itself is illegal.
std::vector<VertexId> placement_moves(RulesetTag r, const ColoredGraph& g, PlayerColor p);

/// Colors `v` for `p` after checking it is a legal move under `r`.
ColoredGraph apply_placement(RulesetTag r, const ColoredGraph& g, VertexId v, PlayerColor p);

/// Ruleset-agnostic recoloring; only checks that `v` is uncolored.
ColoredGraph apply_placement(const ColoredGraph& g, VertexId v, PlayerColor p);

/**
 * A game position: a board for the three placement games or a machine for
 * BTCL. The side to move is not part of the position.
 */
struct Position {
    RulesetTag ruleset = RulesetTag::Col;
    std::variant<ColoredGraph, BtclMachine> state;

    static Position placement(RulesetTag r, ColoredGraph g);
    static Position btcl(BtclMachine m);

    const ColoredGraph& board() const;
    const BtclMachine& machine() const;

    /// Throws if the position violates its ruleset's invariants.
    void validate() const;

    friend bool operator==(const Position&, const Position&) = default;
};

using Move = std::variant<VertexId, BtclMove>;

std::vector<Move> legal_moves(const Position& pos, PlayerColor p);
Position apply_move(const Position& pos, PlayerColor p, const Move& mv);

}  // namespace placement

#endif
