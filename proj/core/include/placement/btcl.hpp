#ifndef PLACEMENT_BTCL_HPP
#define PLACEMENT_BTCL_HPP

#include "placement/graph.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace placement {

struct BtclArc {
    VertexId tail = 0;
    VertexId head = 0;
    PlayerColor owner = PlayerColor::Left;
    bool flipped = false;
    int weight = 1;

    friend bool operator==(const BtclArc&, const BtclArc&) = default;
};

/// Role annotation for machine vertices. Logic vertices use the six
/// constraint-logic vertex types; `Terminal` marks support and sink
/// vertices that only exist to make the initial orientation legal.
enum class VertexKind : std::uint8_t {
    Unspecified,
    Variable,
    Goal,
    And,
    Or,
    Choice,
    Split,
    Terminal,
};

std::string_view to_string(VertexKind k);
VertexKind vertex_kind_from_string(std::string_view s);

/// A flip of one arc, or a pass (`arc` empty).
struct BtclMove {
    std::optional<std::size_t> arc;

    static BtclMove pass() { return {}; }
    static BtclMove flip(std::size_t a) { return {a}; }
    bool is_pass() const { return !arc.has_value(); }
    friend bool operator==(const BtclMove&, const BtclMove&) = default;
};

/**
 * Bounded two-player constraint logic machine.
 *
 * Arcs are stored in their current orientation. `consecutive_passes` counts
 * trailing passes; the game ends at two.
 */
class BtclMachine {
public:
    BtclMachine() = default;
    /// Validates weights, endpoints, that the goal is a Left arc, and that the
    /// initial orientation is legal.
    BtclMachine(std::size_t vertex_count, std::vector<BtclArc> arcs, std::size_t goal_arc,
                std::vector<VertexKind> kinds = {});

    std::size_t vertex_count() const { return vertex_count_; }
    const std::vector<BtclArc>& arcs() const { return arcs_; }
    const BtclArc& arc(std::size_t i) const;
    std::size_t goal_arc() const { return goal_arc_; }
    int consecutive_passes() const { return consecutive_passes_; }

    /// Per-vertex kinds; empty when the machine carries no annotation.
    const std::vector<VertexKind>& kinds() const { return kinds_; }
    VertexKind kind(VertexId v) const;

    bool game_over() const;

    friend bool operator==(const BtclMachine&, const BtclMachine&) = default;

private:
    friend BtclMachine btcl_apply(const BtclMachine& m, PlayerColor p, BtclMove mv);

    std::size_t vertex_count_ = 0;
    std::vector<BtclArc> arcs_;
    std::size_t goal_arc_ = 0;
    int consecutive_passes_ = 0;
    std::vector<VertexKind> kinds_;
};

/// Sum of weights of arcs currently pointing into `v`.
int btcl_in_weight(const BtclMachine& m, VertexId v);

/// Every vertex has in-weight at least 2.
bool btcl_legal(const BtclMachine& m);

/// Unflipped arcs owned by `p` whose reversal keeps the orientation legal,
/// in arc order, followed by Pass. Empty once the game is over.
std::vector<BtclMove> btcl_moves(const BtclMachine& m, PlayerColor p);

/// Applies a move for `p`; throws on anything outside `btcl_moves(m, p)`.
BtclMachine btcl_apply(const BtclMachine& m, PlayerColor p, BtclMove mv);

bool btcl_left_has_won(const BtclMachine& m);

}  // namespace placement

#endif
