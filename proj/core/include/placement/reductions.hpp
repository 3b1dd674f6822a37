#ifndef PLACEMENT_REDUCTIONS_HPP
#define PLACEMENT_REDUCTIONS_HPP

#include "placement/btcl.hpp"
#include "placement/graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace placement {

/// Role of an image vertex. For the Col to Graph-NoGo construction these are
/// the four per-vertex copies and the two per-edge vertices.
enum class ImageRole : std::uint8_t { B, W, F, A, EdgeB, EdgeW, GadgetInternal };

std::string_view to_string(ImageRole r);
ImageRole image_role_from_string(std::string_view s);

struct ReductionMap {
    /// Source vertex to its representative image vertex (v to v_A).
    std::map<VertexId, VertexId> source_to_image;
    /// Role of every image vertex, indexed by image vertex.
    std::vector<ImageRole> roles;

    std::vector<VertexId> vertices_with(ImageRole r) const;
    /// Throws unless roles cover `image_vertex_count` vertices exactly and
    /// every mapped image vertex exists.
    void validate(std::size_t image_vertex_count) const;

    friend bool operator==(const ReductionMap&, const ReductionMap&) = default;
};

/// Sidecar format: `m <source> <image>` lines then `r <image> <role>` lines.
std::string serialize_reduction_map(const ReductionMap& map);
ReductionMap parse_reduction_map(std::string_view text);

struct Reduction {
    ColoredGraph image;
    ReductionMap map;
};

// --- Col to Graph-NoGo ---------------------------------------------------

/// Four vertices per source vertex (B, W, F, A) and two per source edge
/// (EdgeB, EdgeW). Image vertex ids: v_B = 4v, v_W = 4v+1, v_F = 4v+2,
/// v_A = 4v+3, then e_B = 4|V| + 2i, e_W = 4|V| + 2i + 1 for the i-th edge in
/// sorted order. Throws if `g` is not a legal Col position.
Reduction reduce_col_to_nogo(const ColoredGraph& g);

// --- gadgets ---------------------------------------------------------------

enum class GadgetKind : std::uint8_t {
    EdgePair, Variable, GoalEdge, And, Or, Choice, Split, IOPair, Goal, Clique,
};

std::string_view to_string(GadgetKind k);
GadgetKind gadget_kind_from_string(std::string_view s);

/// An (active, inactive) vertex pair. Fjords variables have no inactive
/// vertex; `inactive` is then empty.
struct Port {
    VertexId active = 0;
    std::optional<VertexId> inactive;

    friend bool operator==(const Port&, const Port&) = default;
};

struct GadgetSpec {
    GadgetKind kind = GadgetKind::EdgePair;
    std::vector<Port> input_ports;
    std::vector<Port> output_ports;
};

struct ColGadget {
    ColoredGraph fragment;
    GadgetSpec spec;
};

/// Col fragment for one gadget kind, including its input and output edge
/// pairs. Every edge-pair vertex has a Left-colored guard so that only Right
/// can ever play inside the gadget region.
ColGadget build_col_gadget(GadgetKind kind);

// --- BTCL circuits -------------------------------------------------------

/// A logic vertex with its wires, recovered from an annotated machine.
struct CircuitNode {
    VertexKind kind = VertexKind::Unspecified;
    VertexId machine_vertex = 0;
    /// Arc indices; an input arc with a Terminal head is a constant-false
    /// input and appears in `false_inputs` instead.
    std::vector<std::size_t> inputs;
    std::vector<std::size_t> outputs;
    std::size_t false_inputs = 0;
};

struct Circuit {
    std::vector<CircuitNode> nodes;
    /// Arc index to (producer node, consumer node) for every wire.
    std::map<std::size_t, std::pair<std::size_t, std::size_t>> wires;
    std::size_t goal_node = 0;

    std::size_t count(VertexKind k) const;
    /// Non-variable logic vertices in reverse topological order from the goal
    /// (goal first).
    std::vector<std::size_t> goal_first_order() const;
};

/// Throws if the machine is not annotated, a logic vertex has the wrong
/// number of wires for its kind, or the wiring has a cycle.
Circuit extract_circuit(const BtclMachine& m);

// --- BTCL to Col -----------------------------------------------------------

struct ColReductionParams {
    /// Star size; empty selects the move-balancing value from `col_star_rays`.
    std::optional<std::size_t> star_rays;
};

/// Rays that make Left's star moves balance Right's gadget moves when Right
/// plays correctly and the goal stays unreachable.
std::size_t col_star_rays(const BtclMachine& m);

/**
 * Builds a Col position with a Left-only star (Right-colored hub) and a
 * gadget component in which Right plays the constraint-logic side. Left in
 * the machine corresponds to Right in the image. A dummy variable gadget is
 * added when the variable count is even.
 */
Reduction reduce_btcl_to_col(const BtclMachine& m, const ColReductionParams& params = {});

// --- BTCL to Graph-Fjords --------------------------------------------------

struct FjordsReductionParams {
    std::size_t variable_count = 0;
    std::size_t nonvariable_gadget_count = 0;
    std::size_t variable_incentive = 0;
    /// Incentive per non-variable gadget, goal first.
    std::vector<std::size_t> schedule;

    /// Variable count after the dummy variable is added for odd counts.
    std::size_t padded_variable_count() const;
    /// Unclaimed clique moves each player holds after the variable phase:
    /// ceil(n/2) * t.
    std::size_t cached_moves() const;
};

/// [0, 3, ..., 3m-3]. Throws for m = 0.
std::vector<std::size_t> incentive_schedule(std::size_t m);

/// Parameters for a machine: n and m from its circuit, t = 3m.
FjordsReductionParams fjords_params_for(const BtclMachine& m);

/**
 * Builds a Graph-Fjords position. Each variable is a vertex between a Left
 * and a Right seed with a K_t reward clique. The circuit's goal condition is
 * flattened to clauses over the variables; each clause becomes an IO pair
 * that touches its variables and a Right seed, with the owning gadget's
 * incentive clique on both pair vertices. A satisfied clause's pair splits
 * evenly, a dead one goes to Right, and the goal vertex is one Left move.
 * Throws if `params` disagree with the machine.
 */
Reduction reduce_btcl_to_fjords(const BtclMachine& m, const FjordsReductionParams& params);

/// Fjords fragment for one gadget kind. Inputs are single clamp vertices
/// (Left-colored when active); gate outputs carry incentive cliques of the
/// given size.
struct FjordsGadget {
    ColoredGraph fragment;
    GadgetSpec spec;
    /// Vertices of the attached incentive clique.
    std::vector<VertexId> clique;
};
FjordsGadget build_fjords_gadget(GadgetKind kind, std::size_t incentive = 0);

// --- POS-CNF ---------------------------------------------------------------

/// Clauses of 0-based variable indices. Variables must be 0..n-1 with no
/// gaps.
BtclMachine build_pos_cnf_machine(const std::vector<std::vector<int>>& clauses);

/// Parses formulas like "(1|2)&(3)" with 1-based variable numbers.
std::vector<std::vector<int>> parse_pos_cnf(std::string_view formula);

}  // namespace placement

#endif
