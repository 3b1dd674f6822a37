#ifndef PLACEMENT_SOLVER_HPP
#define PLACEMENT_SOLVER_HPP

#include "placement/rulesets.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

namespace placement {

enum class OutcomeClass : std::uint8_t { L, R, N, P };

std::string_view to_string(OutcomeClass c);
OutcomeClass outcome_from_winners(PlayerColor left_first, PlayerColor right_first);
/// Exchanges the roles of Left and Right (L <-> R; N and P are fixed).
OutcomeClass mirrored(OutcomeClass c);

struct SolveStats {
    std::uint64_t nodes_expanded = 0;
    std::uint64_t table_hits = 0;
    std::uint64_t max_depth = 0;
};

struct SolverOptions {
    /// Maximum number of expanded nodes per solve; 0 means unlimited.
    std::uint64_t node_budget = 0;
    /// Worker threads for root-level parallelism; 1 is the deterministic
    /// reference mode.
    unsigned workers = 1;
};

struct SolveResult {
    /// Empty when the node budget ran out.
    std::optional<PlayerColor> winner;
    SolveStats stats;
    /// One winning first move for the mover, if the mover wins and has one.
    std::optional<Move> witness;

    bool budget_exceeded() const { return !winner.has_value(); }
};

class BudgetExceeded : public Error {
public:
    BudgetExceeded() : Error("node budget exceeded") {}
};

/**
 * Exhaustive AND/OR search with a transposition table.
 *
 * Placement games use normal play. BTCL ends when the goal arc is flipped
 * (Left wins) or after two consecutive passes (Right wins). The table
 * survives between calls as long as the board structure (or the machine's
 * arcs) is unchanged; it is cleared automatically otherwise.
 */
class Solver {
public:
    explicit Solver(SolverOptions options = {});
    ~Solver();
    Solver(Solver&&) noexcept;
    Solver& operator=(Solver&&) noexcept;

    SolveResult solve(const Position& pos, PlayerColor mover);
    std::size_t table_size() const;
    void clear();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Throws BudgetExceeded when `options.node_budget` is exhausted.
PlayerColor winner_from(const Position& pos, PlayerColor mover, SolverOptions options = {});
OutcomeClass outcome_class(const Position& pos, SolverOptions options = {});
SolveResult solve_with_stats(const Position& pos, PlayerColor mover, SolverOptions options = {});

/// Ruleset name followed by the canonical text serialization of the board or
/// machine (including flip and pass state for BTCL).
std::string canonical_key(const Position& pos);

}  // namespace placement

#endif
