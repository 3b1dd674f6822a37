#ifndef PLACEMENT_VERIFY_HPP
#define PLACEMENT_VERIFY_HPP

#include "placement/reductions.hpp"
#include "placement/rulesets.hpp"
#include "placement/solver.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace placement {

struct Failure {
    std::string position;
    std::string expected;
    std::string actual;

    friend bool operator==(const Failure&, const Failure&) = default;
};

enum class Verdict : std::uint8_t { Pass, Fail, Inconclusive };

std::string_view to_string(Verdict v);

/// `passed` is true iff `first_failure` is empty. A report that ran out of
/// budget without finding a failure is inconclusive, not passed.
struct VerificationReport {
    bool passed = true;
    std::uint64_t checks_run = 0;
    std::optional<Failure> first_failure;
    bool inconclusive = false;

    Verdict verdict() const;
    /// Records one check; keeps the first failure only.
    void check(bool ok, const std::function<Failure()>& describe);
    void fail(Failure f);
    /// Associative: failures keep their order, counts add.
    void merge(const VerificationReport& other);
};

/// `{"verdict", "passed", "checks_run", "first_failure": {position, expected, actual} | null}`.
std::string to_json(const VerificationReport& r, int indent = -1);
std::string to_text(const VerificationReport& r);

/// No F-role vertex is a legal NoGo move for either player in any position
/// reachable within `depth` plies (either player starting).
VerificationReport verify_forbidden_vertices(const ColoredGraph& image, const ReductionMap& map, std::size_t depth);

/// Plays v and v_A in lockstep; at each pair and for both players the Col
/// moves map exactly onto the image's NoGo moves, all of which are A-role.
VerificationReport verify_move_bijection(const ColoredGraph& src, const ColoredGraph& image, const ReductionMap& map,
                                         std::size_t depth);

/// Outcome classes agree. Budget exhaustion yields an inconclusive report.
/// With `mirror`, the image's class is compared to the mirrored source class.
VerificationReport verify_outcome_equivalence(const Position& src, const Position& image,
                                              SolverOptions options = {}, bool mirror = false);

/// Checks the gadget's behavioral contract for every clamp of its inputs.
/// Supports Col and Graph-Fjords fragments.
VerificationReport gadget_truth_table(const ColoredGraph& fragment, const GadgetSpec& spec, RulesetTag ruleset,
                                      std::size_t incentive = 0);

/// Integer value of a placement position: the v for which adding -v makes it
/// a second-player win. Empty if no integer in [-limit, limit] qualifies.
std::optional<int> integer_value(RulesetTag ruleset, const ColoredGraph& g, int limit, SolverOptions options = {});

/// Calls `fn` for every labeled graph on n <= max_vertices vertices and every
/// Col-legal coloring of it.
void for_each_col_position(std::size_t max_vertices, const std::function<void(const ColoredGraph&)>& fn);

struct SweepOptions {
    /// Largest max_vertices accepted; larger requests are refused as
    /// inconclusive.
    std::size_t vertex_limit = 5;
    unsigned workers = 1;
    std::uint64_t node_budget = 0;
};

VerificationReport exhaustive_reduction_sweep(std::size_t max_vertices, const SweepOptions& options = {});

// --- negative controls ---------------------------------------------------

/// Col to NoGo image of `src` whose vertex 0 has lost its seed pair: v_B and
/// v_W are left uncolored. Requires a source with at least one vertex.
Reduction corrupt_without_seed_pair(const ColoredGraph& src);

/// Col to NoGo image of `src` with the last edge's e_W vertex deleted.
/// Requires a source with at least one edge.
Reduction corrupt_without_edge_white(const ColoredGraph& src);

}  // namespace placement

#endif
